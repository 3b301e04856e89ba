#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxlab/lattice.hpp"

using namespace coxlab;

static IntersectionLattice group_lattice(const ReflectionGroup& G) {
    Arrangement A = arr_from_group(G, per_hyperplane_weights(G));
    return enumerate_flats(A, &G);
}

TEST_CASE("flat counts for small groups") {
    auto S3 = ReflectionGroup::symmetric(3);
    auto lat3 = group_lattice(S3);
    CHECK(lat3.flats.size() == 5);  // V, three lines, origin

    auto I5 = ReflectionGroup::parse("I2(5)");
    CHECK(group_lattice(I5).flats.size() == 7);  // V, five lines, origin

    auto B3 = ReflectionGroup::parse("B3");
    auto latb = group_lattice(B3);
    int by_codim[4] = {0, 0, 0, 0};
    for (auto& f : latb.flats) by_codim[f.codim] += 1;
    CHECK(by_codim[0] == 1);
    CHECK(by_codim[1] == 9);
    CHECK(by_codim[3] == 1);
}

TEST_CASE("flat closure is idempotent", "[property]") {
    std::mt19937 rng(111);
    for (const char* name : {"A3", "B3", "G(3,1,2)"}) {
        auto G = ReflectionGroup::parse(name);
        Arrangement A = arr_from_group(G, per_hyperplane_weights(G));
        std::uniform_int_distribution<int> pick(0, (int)A.normals.size() - 1);
        for (int t = 0; t < 100; ++t) {
            std::vector<int> subset;
            int sz = 1 + (t % 3);
            for (int i = 0; i < sz; ++i) subset.push_back(pick(rng));
            std::sort(subset.begin(), subset.end());
            subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
            auto cl = flat_closure(A, subset);
            CHECK(flat_closure(A, cl) == cl);
        }
    }
}

TEST_CASE("pointwise stabilizers equal the subgroups generated by flat reflections") {
    for (const char* name : {"A2", "A3", "B2", "G(3,1,2)", "I2(4)"}) {
        auto G = ReflectionGroup::parse(name);
        auto lat = group_lattice(G);
        for (const auto& f : lat.flats) {
            // stabilizer from group elements
            std::vector<int> stab;
            for (long g = 0; g < G.order(); ++g) {
                Mat<CycScalar> m = G.rep((int)g);
                bool fixes = true;
                for (const auto& v : f.basis) {
                    auto mv = m.apply(v);
                    for (int i = 0; i < G.rank; ++i)
                        if (!(mv[i] == v[i])) { fixes = false; break; }
                    if (!fixes) break;
                }
                if (fixes) stab.push_back((int)g);
            }
            std::vector<int> gens;
            for (int p : f.refl_positions) gens.push_back(G.reflections[p]);
            auto generated = G.generated_subgroup(gens);
            CHECK(stab == generated);
        }
    }
}

TEST_CASE("multiset of Coxeter numbers per flat") {
    auto B3 = ReflectionGroup::parse("B3");
    auto lat = group_lattice(B3);
    Arrangement A = arr_from_group(B3, per_hyperplane_weights(B3));
    for (const auto& f : lat.flats) {
        if (f.codim == 0) CHECK(multiset_coxeter_numbers(f).empty());
        if (f.codim == 1) CHECK(multiset_coxeter_numbers(f) == std::vector<int>{2});
        if (f.codim == 3) CHECK(multiset_coxeter_numbers(f) == std::vector<int>{6, 6, 6});
        auto rep = verify_flat_spectrum(A, f);
        INFO(rep.what);
        CHECK(rep.ok);
    }
}

TEST_CASE("Laplacian recursion for reflection arrangements") {
    for (const char* name : {"A2", "B2", "I2(4)", "A3", "G(3,1,2)"}) {
        auto G = ReflectionGroup::parse(name);
        Arrangement A = arr_from_group(G, per_hyperplane_weights(G));
        auto lat = enumerate_flats(A, &G);
        auto rep = verify_laplacian_recursion(A, lat);
        INFO(name << ": " << rep.what);
        CHECK(rep.ok);
    }
}

TEST_CASE("Laplacian recursion for a generic non-reflection arrangement") {
    // four generic lines in rank 2, unit-norm normals
    Arrangement A;
    A.dim = 2;
    A.gram = Mat<CycScalar>::identity(2);
    auto add = [&](long x, long y) {
        ArrNormal n;
        n.v = {CycScalar(Rational(x)), CycScalar(Rational(y))};
        n.scale = Rational(1) / Rational(x * x + y * y);
        A.weight_var.push_back((int)A.normals.size());
        A.normals.push_back(std::move(n));
    };
    add(1, 0);
    add(0, 1);
    add(1, 1);
    add(1, -2);
    A.nvars = 4;
    auto lat = enumerate_flats(A);
    CHECK(lat.flats.size() == 6);  // V, 4 lines, origin (generic position)
    auto rep = verify_laplacian_recursion(A, lat);
    INFO(rep.what);
    CHECK(rep.ok);
}

TEST_CASE("matrix forest theorem with formal tower weights") {
    for (const char* name : {"A2", "A3", "B3", "I2(6)"}) {
        auto G = ReflectionGroup::parse(name);
        auto T = identity_standard_tower(G);
        auto rep = verify_matrix_forest(G, T);
        INFO(name << ": " << rep.what);
        CHECK(rep.ok);
    }
}

TEST_CASE("matrix forest constant term restates the matrix-tree corollary") {
    auto G = ReflectionGroup::symmetric(3);
    auto T = identity_standard_tower(G);
    auto w = tower_weight_system(T);
    auto cp = char_poly(w_laplacian_formal(G, w));
    PolyW rc = reduced_count(G, T);
    CHECK(rc == cp[0].scaled(Rational(factorial_z(G.rank)) / Rational(G.coxeter_number)));
}

TEST_CASE("Coxeter-number identity") {
    for (const char* name : {"A2", "A3", "B3", "I2(5)", "I2(12)", "G(3,3,3)"}) {
        auto G = ReflectionGroup::parse(name);
        auto rep = verify_coxeter_identity(G);
        INFO(name << ": " << rep.what);
        CHECK(rep.ok);
    }
}
