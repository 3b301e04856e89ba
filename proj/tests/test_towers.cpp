#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxlab/tower.hpp"

using namespace coxlab;

TEST_CASE("standard tower of Sym(4): chain S2 < S3 < S4 with JM supports 1,2,3") {
    auto G = ReflectionGroup::symmetric(4);
    auto T = identity_standard_tower(G);
    CHECK(T.levels[1].size() == 1);
    CHECK(T.levels[2].size() == 3);
    CHECK(T.levels[3].size() == 6);
    CHECK(T.block(1).size() == 1);
    CHECK(T.block(2).size() == 2);
    CHECK(T.block(3).size() == 3);
}

TEST_CASE("I2(6) tower: blocks of sizes 1 and 5") {
    auto G = ReflectionGroup::parse("I2(6)");
    auto T = identity_standard_tower(G);
    CHECK(T.block(1).size() == 1);
    CHECK(T.block(2).size() == 5);
}

TEST_CASE("H matrix: Sym(3) standard tower is [[2,1],[0,3]]") {
    auto G = ReflectionGroup::symmetric(3);
    auto T = identity_standard_tower(G);
    auto H = h_matrix(G, T);
    CHECK(H.h == std::vector<std::vector<long long>>{{2, 1}, {0, 3}});
    auto spec = tower_spectrum(G, T);
    std::vector<LinearForm> expect{LinearForm({2, 1}), LinearForm({0, 3})};
    CHECK(same_multiset(spec, expect));
}

TEST_CASE("rank-1 group G(r,1,1): H matrix [[r]]") {
    auto G = ReflectionGroup::g_r1n(4, 1);
    auto T = identity_standard_tower(G);
    auto H = h_matrix(G, T);
    CHECK(H.h == std::vector<std::vector<long long>>{{4}});
}

TEST_CASE("the D6 worked example") {
    auto G = ReflectionGroup::parse("D6");
    // generator labels: 0 = twisted transposition, 1..5 = adjacent transpositions;
    // this ordering produces component types A1, A2, A2xA1, A3xA1, A3xA2, D6
    auto T = standard_tower(G, {0, 2, 4, 1, 5, 3});
    auto H = h_matrix(G, T);
    std::vector<std::vector<long long>> expect{
        {2, 1, 0, 1, 0, 6}, {0, 3, 0, 1, 0, 6}, {0, 0, 2, 0, 1, 7},
        {0, 0, 0, 4, 0, 6}, {0, 0, 0, 0, 3, 7}, {0, 0, 0, 0, 0, 10}};
    CHECK(H.h == expect);
    auto spec = tower_spectrum(G, T);
    std::vector<LinearForm> want{
        LinearForm({2, 1, 0, 1, 0, 6}), LinearForm({0, 3, 0, 1, 0, 6}),
        LinearForm({0, 0, 2, 0, 1, 7}), LinearForm({0, 0, 0, 4, 0, 6}),
        LinearForm({0, 0, 0, 0, 3, 7}), LinearForm({0, 0, 0, 0, 0, 10})};
    CHECK(same_multiset(spec, want));
}

TEST_CASE("all tower spectra evaluate to h at unit weights") {
    std::mt19937 rng(3);
    for (const char* name : {"A2", "A3", "B3", "D4", "I2(8)", "H3", "G(3,1,3)", "G(3,3,3)"}) {
        auto G = ReflectionGroup::parse(name);
        std::vector<int> ordering(G.generators.size());
        std::iota(ordering.begin(), ordering.end(), 0);
        for (int t = 0; t < 3; ++t) {
            std::shuffle(ordering.begin(), ordering.end(), rng);
            auto T = standard_tower(G, ordering);
            auto spec = tower_spectrum(G, T);
            REQUIRE((int)spec.size() == G.rank);
            for (auto& lf : spec) {
                CHECK(lf.eval_at_one() == G.coxeter_number);
                for (auto c : lf.a) CHECK(c >= 0);
            }
        }
    }
}

TEST_CASE("JM elements pairwise commute in the reflection representation") {
    for (const char* name : {"A3", "B3", "G(3,1,2)"}) {
        auto G = ReflectionGroup::parse(name);
        auto T = identity_standard_tower(G);
        std::vector<Mat<CycScalar>> J;
        for (int v = 0; v < T.nvars; ++v) J.push_back(jm_matrix_reflection_rep(G, T.var_block(v)));
        for (size_t i = 0; i < J.size(); ++i)
            for (size_t j = i + 1; j < J.size(); ++j) CHECK(J[i] * J[j] == J[j] * J[i]);
    }
}

TEST_CASE("JM supports partition the reflections") {
    auto G = ReflectionGroup::parse("B3");
    auto T = identity_standard_tower(G);
    std::vector<int> seen(G.num_reflections(), 0);
    for (int v = 0; v < T.nvars; ++v)
        for (int p : T.var_block(v)) seen[p] += 1;
    for (int c : seen) CHECK(c == 1);
}

TEST_CASE("S3 standard tower: J2 regular spectrum {2,1,1,-1,-1,-2}") {
    auto G = ReflectionGroup::symmetric(3);
    auto T = identity_standard_tower(G);
    auto rep = jm_spectrum_check(G, T, JMRep::Regular);
    REQUIRE(rep.ok);
    REQUIRE(rep.blocks.size() == 2);
    const auto& j2 = rep.blocks[1];
    std::vector<std::pair<long long, int>> expect{{-2, 1}, {-1, 2}, {1, 2}, {2, 1}};
    CHECK(j2.spectrum == expect);
}

TEST_CASE("JM spectra integral and within bounds") {
    for (const char* name : {"A2", "A3", "B2", "B3", "I2(5)", "H3", "G(3,1,2)", "G(3,3,3)"}) {
        auto G = ReflectionGroup::parse(name);
        auto T = identity_standard_tower(G);
        auto rep = jm_spectrum_check(G, T, JMRep::Reflection);
        CHECK(rep.ok);
    }
    // order-2 first reflection: J1 spectrum within {1,-1}
    auto G = ReflectionGroup::parse("A3");
    auto T = identity_standard_tower(G);
    auto rep = jm_spectrum_check(G, T, JMRep::Reflection);
    for (auto& [val, mult] : rep.blocks[0].spectrum) CHECK((val == 1 || val == -1));
    // B2 tower, J2 within [-3, 3]
    auto B2 = ReflectionGroup::parse("B2");
    auto T2 = identity_standard_tower(B2);
    auto rep2 = jm_spectrum_check(B2, T2, JMRep::Reflection);
    CHECK(rep2.blocks[1].lower_bound == -3);
    CHECK(rep2.blocks[1].upper_bound == 3);
    CHECK(rep2.ok);
}

TEST_CASE("tower spectrum is invariant under conjugation of the tower") {
    std::mt19937 rng(17);
    for (const char* name : {"A3", "B3", "G(3,3,3)"}) {
        auto G = ReflectionGroup::parse(name);
        auto T = identity_standard_tower(G);
        auto spec = tower_spectrum(G, T);
        std::uniform_int_distribution<int> pick(0, (int)G.order() - 1);
        for (int t = 0; t < 5; ++t) {
            auto Tc = conjugate_tower(T, pick(rng));
            CHECK(same_multiset(tower_spectrum(G, Tc), spec));
        }
    }
}

TEST_CASE("explicit reflection-set towers and Steinberg closure") {
    auto G = ReflectionGroup::symmetric(4);
    auto T = identity_standard_tower(G);
    // feed the standard tower back through the explicit-chain constructor
    std::vector<std::vector<int>> chain;
    for (size_t i = 1; i < T.levels.size(); ++i) chain.push_back(T.levels[i]);
    auto T2 = tower_from_levels(G, chain);
    CHECK(T2.levels == T.levels);
    // a non-closed set is rejected: two commuting transpositions in S4 whose
    // closure inside the full stabilizer of their common flat is just themselves
    // -> actually closed; instead feed a strictly non-closed set: {(12),(13)}
    // generates S3 whose closure has 3 reflections
    std::vector<std::vector<int>> bad{{0, 1}, {0, 1, 2, 3, 4, 5}};
    CHECK_THROWS_AS(tower_from_levels(G, bad), std::invalid_argument);
}

TEST_CASE("non-maximal chains are refined with merged weights") {
    auto G = ReflectionGroup::symmetric(4);
    // single step: whole group at once -> all reflections share one weight
    std::vector<int> all(G.num_reflections());
    std::iota(all.begin(), all.end(), 0);
    auto T = tower_from_levels(G, {all});
    CHECK(T.nvars == 1);
    auto spec = tower_spectrum(G, T);
    for (auto& lf : spec) CHECK(lf == LinearForm({(long long)G.coxeter_number}));
}
