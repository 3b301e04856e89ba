#pragma once

#include "coxlab/convolution.hpp"

namespace coxlab {

namespace detail {

inline CheckReport compare_series(const TruncatedEGF& lhs, const TruncatedEGF& rhs,
                                  const std::string& context) {
    auto diff = lhs.first_difference(rhs);
    if (!diff) return CheckReport::pass();
    return CheckReport::fail(
        context + ": first discrepancy at t^" + std::to_string(*diff) + "/" +
            std::to_string(*diff) + "!",
        {{"coefficient", std::to_string(*diff)},
         {"lhs", lhs.c[*diff].str()},
         {"rhs", rhs.c[*diff].str()}});
}

}  // namespace detail

// Enumeration vs the product formula e^{t w(R)}/h prod (1 - e^{-t lambda_i}),
// coefficient by coefficient with formal tower weights.
inline CheckReport verify_main_theorem(const ReflectionGroup& G, const ParabolicTower& T, int L) {
    WeightSystem w = tower_weight_system(T);
    auto cc = coxeter_class(G);
    TruncatedEGF lhs = enumerate_series(G, w, cc.members, L);
    TruncatedEGF rhs = egf_product_formula(w.total(), tower_spectrum(G, T), G.coxeter_number, L);
    return detail::compare_series(lhs, rhs, "main theorem for " + G.name);
}

// --- dihedral groups --------------------------------------------------------

// Closed form for I2(m) with one weight per reflection:
//   F(t) = (1/m) sum_i (zeta^i + zeta^-i) H(t, zeta^i),
//   H(t,u) = sum_l t^{2l}/(2l)! (P(u) P(u^-1))^l,  P(u) = sum_k u^k w_k.
// Expanded as the even-power series, no square roots involved.
inline TruncatedEGF dihedral_closed_form(int m, int L) {
    std::vector<PolyW> P(m), Q(m);  // P[i] = P(zeta^i), Q[i] = P(zeta^-i)
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
            P[i] += PolyW::variable(k).scaled(CycScalar::root_of_unity(m, (long)i * k));
            Q[i] += PolyW::variable(k).scaled(CycScalar::root_of_unity(m, -(long)i * k));
        }
    }
    TruncatedEGF out(L);
    for (int i = 0; i < m; ++i) {
        CycScalar pref = CycScalar::root_of_unity(m, i) + CycScalar::root_of_unity(m, -i);
        pref = pref.scaled(Rational(1, m));
        if (pref.is_zero()) continue;
        PolyW prod = P[i] * Q[i];
        PolyW power(1);
        for (int l = 0; 2 * l <= L; ++l) {
            if (l > 0) power = power * prod;
            out.c[2 * l] += power.scaled(pref);
        }
    }
    return out;
}

inline CheckReport verify_dihedral_closed_form(int m, int L,
                                               const std::optional<std::vector<Rational>>& vals =
                                                   std::nullopt) {
    auto G = ReflectionGroup::g_rrn(m, 2);
    WeightSystem w = per_reflection_weights(G);
    TruncatedEGF rhs = dihedral_closed_form(m, L);
    if (vals) {
        w = w.specialized(*vals);
        TruncatedEGF rhs_num(L);
        for (int l = 0; l <= L; ++l) rhs_num.c[l] = PolyW(rhs.c[l].eval(*vals));
        rhs = rhs_num;
    }
    auto cc = coxeter_class(G);
    TruncatedEGF lhs = enumerate_series(G, w, cc.members, L);
    return detail::compare_series(lhs, rhs, "dihedral closed form m=" + std::to_string(m));
}

// Reflection towers I2(m_1) <= I2(m_2) <= ... <= I2(m) along a divisor chain;
// the product formula has eigenvalues
//   lambda_1 = m w_k,
//   lambda_2 = 2 m_1 w_1 + sum_{i=2}^{k-1} 2 (m_i - m_{i-1}) w_i + (m - 2 m_{k-1}) w_k.
inline CheckReport dihedral_reflection_tower(int m, const std::vector<int>& chain, int L) {
    int k = (int)chain.size();
    if (k == 0 || chain.back() != m)
        return CheckReport::fail("divisor chain must end at m");
    for (int i = 0; i + 1 < k; ++i)
        if (chain[i] < 1 || chain[i + 1] % chain[i] != 0)
            return CheckReport::fail("not a divisor chain");
    auto G = ReflectionGroup::g_rrn(m, 2);
    WeightSystem w;
    w.nvars = k;
    w.var_of.assign(G.num_reflections(), -1);
    for (int pos = 0; pos < m; ++pos) {  // reflection position pos is tau_{0,1,pos}
        for (int i = 0; i < k; ++i) {
            if (pos % (m / chain[i]) == 0) {
                w.var_of[pos] = i;
                break;
            }
        }
    }
    std::vector<long long> counts(k, 0);
    for (int v : w.var_of) {
        if (v < 0) return CheckReport::fail("chain does not cover all reflections");
        counts[v] += 1;
    }
    LinearForm wR{counts};
    LinearForm l1 = LinearForm::unit(k - 1, m);
    LinearForm l2;
    if (k == 1) {
        l2 = LinearForm::unit(0, m);
    } else {
        l2 = LinearForm::unit(0, 2LL * chain[0]);
        for (int i = 1; i + 1 < k; ++i) l2 += LinearForm::unit(i, 2LL * (chain[i] - chain[i - 1]));
        l2 += LinearForm::unit(k - 1, (long long)m - 2LL * chain[k - 2]);
    }
    TruncatedEGF rhs = egf_product_formula(wR, {l1, l2}, m, L);
    auto cc = coxeter_class(G);
    TruncatedEGF lhs = enumerate_series(G, w, cc.members, L);
    return detail::compare_series(lhs, rhs, "dihedral reflection tower m=" + std::to_string(m));
}

// --- ordinary power series helpers (used by the finer formulas) -------------

namespace detail {

using Series = std::vector<CycScalar>;  // ordinary coefficients, index = power of t

inline Series series_mul(const Series& a, const Series& b, int L) {
    Series out(L + 1);
    for (int i = 0; i <= L && i < (int)a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= L && j < (int)b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

// exp of a series with zero constant term: g_m = (1/m) sum_{k=1}^m k f_k g_{m-k}
inline Series series_exp(const Series& f, int L) {
    Series g(L + 1);
    g[0] = CycScalar::one();
    for (int mdeg = 1; mdeg <= L; ++mdeg) {
        CycScalar s;
        for (int k = 1; k <= mdeg && k < (int)f.size(); ++k) {
            if (f[k].is_zero() || g[mdeg - k].is_zero()) continue;
            s += (f[k] * g[mdeg - k]).scaled(Rational(k));
        }
        g[mdeg] = s.scaled(Rational(1, mdeg));
    }
    return g;
}

// log((1 - e^{-z})/z) as ordinary coefficients up to order L
inline Series log_g_series(int L) {
    Series g(L + 1);
    for (int j = 0; j <= L; ++j) {
        // g(z) = sum_j (-1)^j z^j / (j+1)!
        Rational c = Rational((j % 2) ? -1 : 1) / Rational(factorial_z(j + 1));
        g[j] = CycScalar(c);
    }
    // log(1 + u) with u = g - 1
    Series u = g;
    u[0] = CycScalar();
    Series out(L + 1);
    Series cur = u;
    for (int k = 1; k <= L; ++k) {
        Rational sign((k % 2) ? 1 : -1, k);
        for (int i = 0; i <= L; ++i) out[i] += cur[i].scaled(sign);
        cur = series_mul(cur, u, L);
    }
    return out;
}

// Newton's identities: power sums from det(xI - M) coefficients (ascending)
inline Series power_sums(const std::vector<CycScalar>& charpoly_asc, int upto) {
    int n = (int)charpoly_asc.size() - 1;
    std::vector<CycScalar> e(n + 1);  // elementary symmetric
    for (int i = 0; i <= n; ++i) {
        e[i] = charpoly_asc[n - i];
        if (i % 2) e[i] = -e[i];
    }
    Series p(upto + 1);
    for (int k = 1; k <= upto; ++k) {
        CycScalar s;
        for (int i = 1; i < k && i <= n; ++i) {
            CycScalar term = e[i] * p[k - i];
            if (i % 2 == 0) s -= term;
            else s += term;
        }
        if (k <= n) {
            CycScalar term = e[k].scaled(Rational(k));
            if (k % 2 == 0) s -= term;
            else s += term;
        }
        p[k] = s;
    }
    return p;
}

// e^{t wR} / pref * t^n * e_n * exp(sum_k a_k p_k t^k) as a truncated EGF,
// entirely from the characteristic polynomial of the representation matrix.
inline TruncatedEGF product_formula_from_charpoly(const std::vector<CycScalar>& cp_xI_minus,
                                                  const CycScalar& wR, long pref, int L) {
    int n = (int)cp_xI_minus.size() - 1;
    Series logg = log_g_series(L);
    Series p = power_sums(cp_xI_minus, L);
    Series f(L + 1);
    for (int k = 1; k <= L; ++k) f[k] = logg[k] * p[k];
    Series inner = series_exp(f, L);
    CycScalar det_en = cp_xI_minus[0];
    if (n % 2) det_en = -det_en;  // e_n = (-1)^n * constant term of det(xI - M)
    Series expw(L + 1);
    mpz_class fac = 1;
    for (int l = 0; l <= L; ++l) {
        if (l > 0) fac *= l;
        CycScalar wl = CycScalar::one();
        for (int i = 0; i < l; ++i) wl *= wR;
        expw[l] = wl.scaled(Rational(1) / Rational(fac));
    }
    Series prod = series_mul(expw, inner, L);
    TruncatedEGF out(L);
    mpz_class lfac = 1;
    for (int l = 0; l <= L; ++l) {
        if (l > 0) lfac *= l;
        int src = l - n;
        if (src < 0) continue;
        // ordinary coefficient of t^l is det_en * prod[l-n]; EGF coeff = l! * that
        CycScalar val = det_en * prod[src];
        out.c[l] = PolyW(val.scaled(Rational(lfac) / Rational((long)pref)));
    }
    return out;
}

}  // namespace detail

// matrix of the Sym(n) standard representation for a bare permutation
inline Mat<CycScalar> sym_standard_rep(const std::vector<uint8_t>& perm) {
    int n = (int)perm.size(), rank = n - 1;
    Mat<CycScalar> m(rank, rank);
    for (int j = 0; j < rank; ++j) {
        int a = perm[j], b = perm[j + 1];
        if (a < b)
            for (int k = a; k < b; ++k) m.at(k, j) += CycScalar::one();
        else
            for (int k = b; k < a; ++k) m.at(k, j) -= CycScalar::one();
    }
    return m;
}

namespace detail {

// U-Laplacian sum_tau w(tau) (I - rho_U(tau)) for the n-dimensional
// representation U = (standard-rep pullback) + (character chi), where chi(g)
// = xi^{q * twistsum(g)}. q = r-1 recovers the product-of-signs / det-of-
// diagonal characters used by the finer formulas.
inline Mat<CycScalar> finer_rep_laplacian(const ReflectionGroup& G,
                                          const std::vector<Rational>& weights, int q) {
    int n = G.letters;
    Mat<CycScalar> M(n, n);
    for (int p = 0; p < G.num_reflections(); ++p) {
        const auto& e = G.elements[G.reflections[p]];
        Mat<CycScalar> block = sym_standard_rep(e.perm);
        int tsum = 0;
        for (auto t : e.twist) tsum += t;
        CycScalar chi = CycScalar::root_of_unity(G.r, (long)q * tsum);
        Mat<CycScalar> u(n, n);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) u.at(i, j) = block.at(i, j);
        u.at(n - 1, n - 1) = chi;
        Mat<CycScalar> d = Mat<CycScalar>::identity(n) - u;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) += d.at(i, j).scaled(weights[p]);
    }
    return M;
}

}  // namespace detail

// Full generalization for B_n: arbitrary per-reflection weights, Laplacian
// taken over U = ((n-1,1), {}) + ({}, (n)), prefactor 1/(2n).
inline CheckReport finer_formula_Bn(int n, const std::vector<Rational>& weights, int L) {
    auto G = ReflectionGroup::g_r1n(2, n);
    if ((int)weights.size() != G.num_reflections())
        return CheckReport::fail("finer_formula_Bn: need one weight per reflection");
    Mat<CycScalar> M = detail::finer_rep_laplacian(G, weights, 1);
    auto cp = charpoly_xI_plus(-M);  // det(xI - M)
    Rational wR(0);
    for (auto& x : weights) wR += x;
    TruncatedEGF rhs = detail::product_formula_from_charpoly(cp, CycScalar(wR), 2L * n, L);
    WeightSystem w = per_reflection_weights(G).specialized(weights);
    auto cc = coxeter_class(G);
    TruncatedEGF lhs = enumerate_series(G, w, cc.members, L);
    return detail::compare_series(lhs, rhs, "finer B_n formula, n=" + std::to_string(n));
}

// Analogue for G(r,1,n) with hyperplane-constant weights; U_0 uses the
// determinant-of-diagonal character and prefactor 1/(rn).
inline CheckReport finer_formula_Gr1n(int r, int n, const std::vector<Rational>& hyp_weights,
                                      int L) {
    auto G = ReflectionGroup::g_r1n(r, n);
    if ((int)hyp_weights.size() != G.num_hyperplanes())
        return CheckReport::fail("finer_formula_Gr1n: need one weight per hyperplane");
    std::vector<Rational> weights(G.num_reflections());
    for (int p = 0; p < G.num_reflections(); ++p) weights[p] = hyp_weights[G.hyp_of_refl[p]];
    Mat<CycScalar> M = detail::finer_rep_laplacian(G, weights, 1);
    auto cp = charpoly_xI_plus(-M);
    Rational wR(0);
    for (auto& x : weights) wR += x;
    TruncatedEGF rhs = detail::product_formula_from_charpoly(cp, CycScalar(wR), (long)r * n, L);
    WeightSystem w = per_reflection_weights(G).specialized(weights);
    auto cc = coxeter_class(G);
    TruncatedEGF lhs = enumerate_series(G, w, cc.members, L);
    return detail::compare_series(
        lhs, rhs, "finer G(r,1,n) formula, r=" + std::to_string(r) + " n=" + std::to_string(n));
}

// With tower weights the finer-representation eigenvalues coincide with the
// W-Laplacian spectrum: det(xI + M_U) = prod (x + lambda_j(w)) formally.
inline bool finer_rep_matches_tower_spectrum(const ReflectionGroup& G, const ParabolicTower& T) {
    WeightSystem w = tower_weight_system(T);
    int n = G.letters;
    Mat<PolyW> M(n, n);
    for (int p = 0; p < G.num_reflections(); ++p) {
        const auto& e = G.elements[G.reflections[p]];
        Mat<CycScalar> block = sym_standard_rep(e.perm);
        int tsum = 0;
        for (auto t : e.twist) tsum += t;
        CycScalar chi = CycScalar::root_of_unity(G.r, tsum);
        Mat<CycScalar> u(n, n);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) u.at(i, j) = block.at(i, j);
        u.at(n - 1, n - 1) = chi;
        Mat<CycScalar> d = Mat<CycScalar>::identity(n) - u;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!d.at(i, j).is_zero()) M.at(i, j) += w.weight_poly(p).scaled(d.at(i, j));
    }
    auto cp = char_poly(M);
    auto spec = tower_spectrum(G, T);
    std::vector<PolyW> expect{PolyW(1)};
    for (auto& lf : spec) {
        std::vector<PolyW> next(expect.size() + 1);
        for (size_t i = 0; i < expect.size(); ++i) {
            next[i + 1] += expect[i];
            next[i] += expect[i] * PolyW::from_linear_form(lf);
        }
        expect = std::move(next);
    }
    if (cp.size() != expect.size()) return false;
    for (size_t i = 0; i < cp.size(); ++i)
        if (cp[i] != expect[i]) return false;
    return true;
}

}  // namespace coxlab
