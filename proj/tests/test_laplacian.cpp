#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coxlab/laplacian.hpp"

using namespace coxlab;

static std::vector<Rational> random_weights(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 4);
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.push_back(Rational(num(rng), den(rng)));
    return w;
}

TEST_CASE("unweighted W-Laplacian equals h*I") {
    for (const char* name : {"A2", "A3", "B3", "D4", "I2(7)", "H3", "G(3,1,2)", "G(3,3,3)"}) {
        auto G = ReflectionGroup::parse(name);
        auto L = w_laplacian_numeric(G, unweighted(G));
        Mat<CycScalar> hI = Mat<CycScalar>::identity(G.rank).scaled(CycScalar(Rational(G.coxeter_number)));
        CHECK(L == hI);
    }
}

TEST_CASE("I2(r) tower-weight Laplacian matrix and eigenvalues") {
    int r = 5;
    auto G = ReflectionGroup::parse("I2(5)");
    // weight w0 on the untwisted reflection (k = 0), w1 on the rest, which is
    // the tower presentation whose matrix is displayed symmetric:
    // [[w0+(r-1)w1, w1-w0], [w1-w0, w0+(r-1)w1]]
    WeightSystem w;
    w.nvars = 2;
    w.var_of.assign(G.num_reflections(), 1);
    w.var_of[0] = 0;
    auto L = w_laplacian_formal(G, w);
    PolyW diag = PolyW::variable(0) + PolyW::variable(1).scaled(Rational(r - 1));
    PolyW off = PolyW::variable(1) - PolyW::variable(0);
    CHECK(L.at(0, 0) == diag);
    CHECK(L.at(1, 1) == diag);
    CHECK(L.at(0, 1) == off);
    CHECK(L.at(1, 0) == off);
    // the standard tower puts w0 on the twisted generator; the matrix is then
    // hermitian rather than symmetric but the eigenvalues are unchanged
    auto T = identity_standard_tower(G);
    auto Lt = w_laplacian_formal(G, tower_weight_system(T));
    CHECK(char_poly(Lt) == char_poly(L));
    // char poly (x + r w1)(x + 2w0 + (r-2) w1)
    auto cp = char_poly(L);
    std::vector<LinearForm> lam{LinearForm({0, (long long)r}), LinearForm({2, (long long)r - 2})};
    // expand prod (x + lambda_i)
    std::vector<PolyW> expect{PolyW(1)};
    for (auto& lf : lam) {
        std::vector<PolyW> next(expect.size() + 1);
        for (size_t i = 0; i < expect.size(); ++i) {
            next[i + 1] += expect[i];
            next[i] += expect[i] * PolyW::from_linear_form(lf);
        }
        expect = std::move(next);
    }
    // align: cp ascending in x
    REQUIRE(cp.size() == expect.size());
    for (size_t i = 0; i < cp.size(); ++i) CHECK(cp[i] == expect[i]);
}

TEST_CASE("unweighted S4 char poly is (x+4)^3 with det 64") {
    auto G = ReflectionGroup::symmetric(4);
    auto L = w_laplacian_numeric(G, unweighted(G));
    auto cp = char_poly(L);
    CHECK(cp[0] == CycScalar(Rational(64)));
    CHECK(cp[1] == CycScalar(Rational(48)));
    CHECK(cp[2] == CycScalar(Rational(12)));
    CHECK(cp[3] == CycScalar(Rational(1)));
    // unweighted S3: (x+3)^2
    auto G3 = ReflectionGroup::symmetric(3);
    auto cp3 = char_poly(w_laplacian_numeric(G3, unweighted(G3)));
    CHECK(cp3[0] == CycScalar(Rational(9)));
    CHECK(cp3[1] == CycScalar(Rational(6)));
}

TEST_CASE("trace equals h*n*w for constant weight w") {
    auto G = ReflectionGroup::parse("B3");
    WeightSystem w = unweighted(G).specialized({Rational(3, 2)});
    auto L = w_laplacian_numeric(G, w);
    CHECK(L.trace() == CycScalar(Rational(3, 2) * Rational(6 * 3)));
}

TEST_CASE("Laplacian is self-adjoint for real weights") {
    std::mt19937 rng(5);
    for (const char* name : {"A3", "B2", "G(3,1,2)", "H3"}) {
        auto G = ReflectionGroup::parse(name);
        auto w = per_hyperplane_weights(G);
        auto L = w_laplacian_numeric(G, w.specialized(random_weights(w.nvars, rng)));
        CHECK(is_self_adjoint(L, G.gram));
    }
}

TEST_CASE("arrangement Laplacian with norm e_H equals the W-Laplacian") {
    std::mt19937 rng(9);
    for (const char* name : {"A2", "B3", "G(3,1,2)", "H3", "I2(6)"}) {
        auto G = ReflectionGroup::parse(name);
        auto w = per_hyperplane_weights(G);
        auto vals = random_weights(w.nvars, rng);
        auto A = arr_from_group(G, w);
        CHECK(arr_laplacian_numeric(A, vals) == w_laplacian_numeric(G, w.specialized(vals)));
        // formal route too
        CHECK(arr_laplacian_formal(A) == w_laplacian_formal(G, w));
    }
    // B3 unweighted: both equal 6I
    auto G = ReflectionGroup::parse("B3");
    auto A = arr_from_group(G, unweighted(G));
    auto L = arr_laplacian_numeric(A, {Rational(1)});
    CHECK(L == Mat<CycScalar>::identity(3).scaled(CycScalar(Rational(6))));
}

TEST_CASE("charpoly via elimination agrees with Faddeev-LeVerrier", "[property]") {
    std::mt19937 rng(23);
    for (const char* name : {"A3", "B3", "G(3,1,2)", "H3"}) {
        auto G = ReflectionGroup::parse(name);
        auto T = identity_standard_tower(G);
        auto w = tower_weight_system(T);
        for (int t = 0; t < 10; ++t) {
            auto vals = random_weights(w.nvars, rng);
            auto L = w_laplacian_numeric(G, w.specialized(vals));
            auto a = char_poly(L);
            auto b = charpoly_by_elimination(L);
            REQUIRE(a.size() == b.size());
            for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
        }
    }
}

TEST_CASE("tower spectrum matches the exact roots of the char poly") {
    std::mt19937 rng(31);
    for (const char* name : {"A3", "B3", "I2(9)", "G(3,3,3)", "H3"}) {
        auto G = ReflectionGroup::parse(name);
        auto T = identity_standard_tower(G);
        auto w = tower_weight_system(T);
        auto spec = tower_spectrum(G, T);
        // formal check: char_poly == prod (x + lambda_j)
        auto cp = char_poly(w_laplacian_formal(G, w));
        std::vector<PolyW> expect{PolyW(1)};
        for (auto& lf : spec) {
            std::vector<PolyW> next(expect.size() + 1);
            for (size_t i = 0; i < expect.size(); ++i) {
                next[i + 1] += expect[i];
                next[i] += expect[i] * PolyW::from_linear_form(lf);
            }
            expect = std::move(next);
        }
        REQUIRE(cp.size() == expect.size());
        for (size_t i = 0; i < cp.size(); ++i) CHECK(cp[i] == expect[i]);
        // and at random rational weight points
        for (int t = 0; t < 20; ++t) {
            auto vals = random_weights(w.nvars, rng);
            auto L = w_laplacian_numeric(G, w.specialized(vals));
            auto cpn = char_poly(L);
            CycScalar detL = cpn[0];
            CycScalar prod = CycScalar::one();
            for (auto& lf : spec) prod *= CycScalar(lf.eval(vals));
            CHECK(detL == prod);
        }
    }
}

TEST_CASE("Burman expansion: charpoly coefficients as Grammian sums") {
    std::mt19937 rng(41);
    for (const char* name : {"A2", "B2", "G(3,1,2)", "A3"}) {
        auto G = ReflectionGroup::parse(name);
        auto w = per_hyperplane_weights(G);
        auto vals = random_weights(w.nvars, rng);
        auto A = arr_from_group(G, w);
        auto cp = char_poly(arr_laplacian_numeric(A, vals));
        int N = (int)A.normals.size(), n = A.dim;
        // sum over linearly independent subsets of normals
        std::vector<CycScalar> acc(n + 1);
        acc[n] = CycScalar::one();
        std::vector<int> subset;
        std::function<void(int)> rec = [&](int start) {
            if (!subset.empty()) {
                int k = (int)subset.size();
                if (k <= n) {
                    CycScalar g = A.gram_det(subset);
                    if (!g.is_zero()) {
                        Rational wprod(1);
                        for (int i : subset) wprod *= vals[A.weight_var[i]];
                        acc[n - k] += g.scaled(wprod);
                    }
                }
            }
            if ((int)subset.size() == n) return;
            for (int i = start; i < N; ++i) {
                subset.push_back(i);
                rec(i + 1);
                subset.pop_back();
            }
        };
        rec(0);
        for (int k = 0; k <= n; ++k) CHECK(cp[k] == acc[k]);
    }
}

TEST_CASE("rrt factorization check") {
    std::mt19937 rng(53);
    for (const char* name : {"A1", "A2", "B2", "G(3,1,2)", "I2(5)"}) {
        auto G = ReflectionGroup::parse(name);
        CHECK(rrt_check(G, random_weights(G.num_reflections(), rng)));
    }
}

TEST_CASE("literal norm-2 normals for a real group reproduce L as R Omega R*") {
    // B2: short roots scaled by sqrt2 so that <r,r> = 2 = 1 - (-1)
    auto G = ReflectionGroup::parse("B2");
    std::mt19937 rng(67);
    auto vals = random_weights(G.num_reflections(), rng);
    CycScalar sqrt2 = CycScalar::sqrt_of_int(2);
    Mat<CycScalar> R(G.rank, G.num_reflections());
    for (int p = 0; p < G.num_reflections(); ++p) {
        const auto& h = G.hyperplanes[G.hyp_of_refl[p]];
        CycScalar qq;
        for (int a = 0; a < G.rank; ++a) qq += h.normal[a] * h.normal[a].conj();
        std::vector<CycScalar> r = h.normal;
        if (qq == CycScalar(Rational(1)))
            for (auto& c : r) c *= sqrt2;
        for (int a = 0; a < G.rank; ++a) R.at(a, p) = r[a];
    }
    Mat<CycScalar> Omega(G.num_reflections(), G.num_reflections());
    for (int p = 0; p < G.num_reflections(); ++p) Omega.at(p, p) = CycScalar(vals[p]);
    Mat<CycScalar> rhs = R * Omega * conj(R).transpose();
    auto L = w_laplacian_numeric(G, per_reflection_weights(G).specialized(vals));
    CHECK(L == rhs);
}

TEST_CASE("wedge spectrum") {
    std::vector<LinearForm> lam{LinearForm({1}), LinearForm({0, 2}), LinearForm({0, 0, 3})};
    CHECK(wedge_spectrum(lam, 0) == std::vector<LinearForm>{LinearForm()});
    auto all = wedge_spectrum(lam, 3);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == LinearForm({1, 2, 3}));
    CHECK(wedge_spectrum(lam, 2).size() == 3);
    // unweighted: every k-sum equals k*h
    auto G = ReflectionGroup::parse("B3");
    auto spec = tower_spectrum(G, identity_standard_tower(G));
    for (auto& s : wedge_spectrum(spec, 2)) CHECK(s.eval_at_one() == 2 * G.coxeter_number);
}
