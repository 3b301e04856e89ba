#include <catch2/catch_amalgamated.hpp>

#include "coxlab/zonotope.hpp"

using namespace coxlab;

TEST_CASE("quadratic irrational bookkeeping") {
    QuadIrr a = QuadIrr::sqrt_of(12);           // 2 sqrt3
    CHECK(a == QuadIrr::sqrt_of(3, Rational(2)));
    CHECK(QuadIrr::sqrt_of(3) * QuadIrr::sqrt_of(3) == QuadIrr(3));
    CHECK(QuadIrr::inv_sqrt(27) == QuadIrr::sqrt_of(3, Rational(1, 9)));
    CHECK((QuadIrr(1) + QuadIrr::sqrt_of(2)) * (QuadIrr(1) - QuadIrr::sqrt_of(2)) ==
          QuadIrr(-1));
}

TEST_CASE("root catalogs have the right positive root counts") {
    CHECK(root_catalog_A(2).positive_roots.size() == 3);
    CHECK(root_catalog_A(3).positive_roots.size() == 6);
    CHECK(root_catalog_B(3).positive_roots.size() == 9);
    CHECK(root_catalog_D(4).positive_roots.size() == 12);
    CHECK(root_catalog_E6().positive_roots.size() == 36);
}

TEST_CASE("connection indices") {
    for (int n = 1; n <= 5; ++n) CHECK(connection_index(root_catalog_A(n)) == n + 1);
    CHECK(connection_index(root_catalog_B(2)) == 2);
    CHECK(connection_index(root_catalog_B(4)) == 2);
    CHECK(connection_index(root_catalog_D(4)) == 4);
    CHECK(connection_index(root_catalog_E6()) == 3);
}

TEST_CASE("Shephard sums at small rank") {
    // A2: three independent pairs, all unimodular
    CHECK(shephard_sum(root_catalog_A(2)) == 3);
    // A3: 16 spanning trees of K4, all unimodular
    CHECK(shephard_sum(root_catalog_A(3)) == 16);
    CHECK(shephard_sum_squared(root_catalog_A(3)) == 16);
}

TEST_CASE("unimodular identity: squared Shephard sum equals det of the Gram product") {
    // type A: sum |det|^2 = det(X X^T) over the coordinate matrix (Cauchy-Binet),
    // and equals the spanning tree count N^{N-2} of the complete graph
    for (int n = 2; n <= 4; ++n) {
        auto cat = root_catalog_A(n);
        int N = n + 1;
        std::vector<std::vector<long long>> xxt(n, std::vector<long long>(n, 0));
        for (const auto& r : cat.positive_roots)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) xxt[i][j] += r[i] * r[j];
        mpz_class lhs = shephard_sum_squared(cat);
        CHECK(lhs == det_bareiss_int(xxt));
        // graph Laplacian first minor of K_N
        std::vector<std::vector<long long>> minor(N - 1, std::vector<long long>(N - 1, -1));
        for (int i = 0; i < N - 1; ++i) minor[i][i] = N - 1;
        CHECK(lhs == det_bareiss_int(minor));
        mpz_class expect = 1;
        for (int i = 0; i < N - 2; ++i) expect *= N;
        CHECK(lhs == expect);
    }
    // Rem 1.4 factor: det over the reflection representation is N^{N-1} = N * N^{N-2}
    CHECK(mpz_class(4) * shephard_sum_squared(root_catalog_A(3)) == 64);
}

TEST_CASE("Baumeister-Wegener consequence for A and B at rank <= 3") {
    for (const char* type : {"A2", "A3", "B2", "B3"}) {
        auto rep = verify_baumeister_wegener(root_catalog(type));
        INFO(type << ": " << rep.what);
        CHECK(rep.ok);
    }
}

TEST_CASE("E6 zonotope volume", "[slow]") {
    auto rep = verify_volume_theorem_E6();
    INFO(rep.what);
    CHECK(rep.ok);
}
