#pragma once

#include "coxlab/tower.hpp"

namespace coxlab {

inline Mat<PolyW> to_poly_matrix(const Mat<CycScalar>& m) {
    Mat<PolyW> out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i)
        if (!m.a[i].is_zero()) out.a[i] = PolyW(m.a[i]);
    return out;
}

// L_W(w) = sum over reflections of w(tau) (I - rho(tau)), formal weights
inline Mat<PolyW> w_laplacian_formal(const ReflectionGroup& G, const WeightSystem& w) {
    Mat<PolyW> L(G.rank, G.rank);
    for (int p = 0; p < G.num_reflections(); ++p) {
        Mat<CycScalar> d = Mat<CycScalar>::identity(G.rank) - G.rep(G.reflections[p]);
        PolyW wp = w.weight_poly(p);
        for (int i = 0; i < G.rank; ++i)
            for (int j = 0; j < G.rank; ++j)
                if (!d.at(i, j).is_zero()) L.at(i, j) += wp.scaled(d.at(i, j));
    }
    return L;
}

inline Mat<CycScalar> w_laplacian_numeric(const ReflectionGroup& G, const WeightSystem& w) {
    if (!w.numeric()) throw std::invalid_argument("w_laplacian_numeric: weights not numeric");
    Mat<CycScalar> L(G.rank, G.rank);
    for (int p = 0; p < G.num_reflections(); ++p) {
        Mat<CycScalar> d = Mat<CycScalar>::identity(G.rank) - G.rep(G.reflections[p]);
        CycScalar wp{w.weight_value(p)};
        for (int i = 0; i < G.rank; ++i)
            for (int j = 0; j < G.rank; ++j)
                if (!d.at(i, j).is_zero()) L.at(i, j) += wp * d.at(i, j);
    }
    return L;
}

// A = A^* with respect to the form: conj(A)^T G = G A
inline bool is_self_adjoint(const Mat<CycScalar>& A, const Mat<CycScalar>& gram) {
    return conj(A).transpose() * gram == gram * A;
}

// --- hyperplane arrangements ------------------------------------------------

// One chosen normal per hyperplane. The actual normal is sqrt(scale) * v;
// carrying the square scale separately keeps all arithmetic inside Q(zeta)
// (literal norm-e_H vectors would need 4th roots for complex reflections).
struct ArrNormal {
    std::vector<CycScalar> v;
    Rational scale{1};
};

struct Arrangement {
    Mat<CycScalar> gram;            // ambient hermitian form (identity by default)
    std::vector<ArrNormal> normals;
    std::vector<int> weight_var;    // variable index per hyperplane
    int nvars = 0;
    int dim = 0;

    // <u, n_i> for membership tests of the hyperplane of normal i
    CycScalar pairing_with_normal(const std::vector<CycScalar>& u, int i) const {
        CycScalar s;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) s += gram.at(a, b) * u[a] * normals[i].v[b].conj();
        return s;
    }

    // <n_i, n_j> without the sqrt scales
    CycScalar base_pairing(int i, int j) const { return pairing_with_normal(normals[i].v, j); }

    // Gram determinant of a subset of (scaled) normals: prod scale_i * det(<n_i,n_j>)
    CycScalar gram_det(const std::vector<int>& subset) const {
        int k = (int)subset.size();
        Mat<CycScalar> P(k, k);
        Rational pref(1);
        for (int i = 0; i < k; ++i) pref *= normals[subset[i]].scale;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) P.at(i, j) = base_pairing(subset[i], subset[j]);
        return det(P).scaled(pref);
    }
};

enum class NormalNorm { OrderEH, One, OrderEHMinusOne };

// Realize the W-Laplacian (hyperplane-constant weights) as an arrangement
// Laplacian: normals scaled to <r_H, r_H> = e_H make the two matrices equal.
// The other normalizations give the |R|/n and |R*|/n analogues.
inline Arrangement arr_from_group(const ReflectionGroup& G, const WeightSystem& w,
                                  NormalNorm mode = NormalNorm::OrderEH) {
    Arrangement A;
    A.gram = G.gram;
    A.dim = G.rank;
    A.nvars = w.nvars;
    for (int hi = 0; hi < G.num_hyperplanes(); ++hi) {
        const auto& h = G.hyperplanes[hi];
        int var = -1;
        for (int p = 0; p < G.num_reflections(); ++p) {
            if (G.hyp_of_refl[p] != hi) continue;
            if (var < 0) var = w.var_of[p];
            else if (var != w.var_of[p])
                throw std::invalid_argument("arr_from_group: weights not hyperplane-constant");
        }
        ArrNormal n;
        n.v = h.normal;
        CycScalar qq;  // <v, v>
        for (int a = 0; a < A.dim; ++a)
            for (int b = 0; b < A.dim; ++b) qq += A.gram.at(a, b) * n.v[a] * n.v[b].conj();
        if (!qq.is_rational()) throw std::logic_error("normal has irrational norm");
        Rational base = qq.as_rational();
        long target = (mode == NormalNorm::OrderEH) ? h.order
                      : (mode == NormalNorm::One)   ? 1
                                                    : h.order - 1;
        n.scale = Rational(target) / base;
        A.weight_var.push_back(var);
        A.normals.push_back(std::move(n));
    }
    return A;
}

// arrangement Laplacian sum_i w_i (I - S_{r_i}) with matrix sum_i w_i s_i v_i row_i^T
namespace detail {

// row vector such that <u, v> = sum_a row_a u_a for the given form
inline std::vector<CycScalar> pairing_row(const Mat<CycScalar>& gram,
                                          const std::vector<CycScalar>& v) {
    int dim = gram.rows;
    std::vector<CycScalar> row(dim);
    for (int b = 0; b < dim; ++b)
        for (int c = 0; c < dim; ++c) row[b] += gram.at(b, c) * v[c].conj();
    return row;
}

}  // namespace detail

inline Mat<PolyW> arr_laplacian_formal(const Arrangement& A) {
    Mat<PolyW> L(A.dim, A.dim);
    for (size_t i = 0; i < A.normals.size(); ++i) {
        const auto& n = A.normals[i];
        auto row = detail::pairing_row(A.gram, n.v);
        for (int a = 0; a < A.dim; ++a) {
            if (n.v[a].is_zero()) continue;
            for (int b = 0; b < A.dim; ++b) {
                CycScalar entry = n.v[a] * row[b];
                if (entry.is_zero()) continue;
                L.at(a, b) += PolyW::variable(A.weight_var[i]).scaled(entry.scaled(n.scale));
            }
        }
    }
    return L;
}

inline Mat<CycScalar> arr_laplacian_numeric(const Arrangement& A,
                                            const std::vector<Rational>& values) {
    Mat<CycScalar> L(A.dim, A.dim);
    for (size_t i = 0; i < A.normals.size(); ++i) {
        const auto& n = A.normals[i];
        auto row = detail::pairing_row(A.gram, n.v);
        Rational wi = values.at(A.weight_var[i]) * n.scale;
        for (int a = 0; a < A.dim; ++a) {
            if (n.v[a].is_zero()) continue;
            for (int b = 0; b < A.dim; ++b) L.at(a, b) += (n.v[a] * row[b]).scaled(wi);
        }
    }
    return L;
}

// --- characteristic polynomials ---------------------------------------------

// det(x I + L), ascending coefficients; Faddeev-LeVerrier (exact integer divisions)
template <class T>
std::vector<T> char_poly(const Mat<T>& L) {
    return charpoly_xI_plus(L);
}

// Independent route: Bareiss fraction-free elimination determinant, evaluated
// at x = 0..n and Lagrange-interpolated. Used as the cross-check oracle.
inline CycScalar det_bareiss(Mat<CycScalar> m) {
    int n = m.rows;
    if (n == 0) return CycScalar::one();
    CycScalar prev = CycScalar::one();
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { piv = i; break; }
            if (piv < 0) return CycScalar();
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    CycScalar d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

inline std::vector<CycScalar> charpoly_by_elimination(const Mat<CycScalar>& L) {
    int n = L.rows;
    std::vector<CycScalar> values;
    for (int x = 0; x <= n; ++x) {
        Mat<CycScalar> m = L;
        for (int i = 0; i < n; ++i) m.at(i, i) += CycScalar(Rational(x));
        values.push_back(det_bareiss(m));
    }
    // Lagrange interpolation on points 0..n
    std::vector<CycScalar> coeffs(n + 1);
    for (int x = 0; x <= n; ++x) {
        // basis polynomial prod_{y != x} (t - y)/(x - y)
        std::vector<Rational> poly{Rational(1)};
        Rational denom(1);
        for (int y = 0; y <= n; ++y) {
            if (y == x) continue;
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= poly[i] * Rational(y);
            }
            poly = std::move(next);
            denom *= Rational(x - y);
        }
        for (size_t i = 0; i < poly.size(); ++i)
            coeffs[i] += values[x].scaled(poly[i] / denom);
    }
    return coeffs;
}

// --- eigenvalue combinatorics -----------------------------------------------

// all (n choose k) k-subset sums of the given eigenvalue forms
inline std::vector<LinearForm> wedge_spectrum(const std::vector<LinearForm>& lambdas, int k) {
    int n = (int)lambdas.size();
    if (k < 0 || k > n) throw std::invalid_argument("wedge_spectrum: k out of range");
    std::vector<LinearForm> out;
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            LinearForm s;
            for (int i = 0; i < k; ++i) s += lambdas[idx[i]];
            out.push_back(s);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

// Verify Mat(L) agrees with the rank-one factorization over the reflection
// normals: L = sum_tau w(tau) (1 - zeta_tau)/<r,r> * r row^T, i.e. the
// R Omega R-bar-transpose identity with the eigenvector scaling folded into
// the diagonal (literal norm sqrt(1-zeta) leaves the cyclotomics).
inline bool rrt_check(const ReflectionGroup& G, const std::vector<Rational>& weights) {
    WeightSystem w = per_reflection_weights(G).specialized(weights);
    Mat<CycScalar> L = w_laplacian_numeric(G, w);
    Mat<CycScalar> rhs(G.rank, G.rank);
    for (int p = 0; p < G.num_reflections(); ++p) {
        int hi = G.hyp_of_refl[p];
        const auto& h = G.hyperplanes[hi];
        // zeta_tau: the non-1 eigenvalue of this reflection on the line of r_H
        // tau = tau_H^k where k is the position in the block + 1
        int k = 0;
        for (size_t b = 0; b < h.block.size(); ++b)
            if (h.block[b] == G.reflections[p]) { k = (int)b + 1; break; }
        CycScalar zeta = CycScalar::root_of_unity(h.order, k);
        CycScalar qq;
        for (int a = 0; a < G.rank; ++a)
            for (int c = 0; c < G.rank; ++c) qq += G.gram.at(a, c) * h.normal[a] * h.normal[c].conj();
        CycScalar factor = (CycScalar::one() - zeta) / qq;
        factor = factor.scaled(weights[p]);
        auto row = detail::pairing_row(G.gram, h.normal);
        for (int a = 0; a < G.rank; ++a) {
            if (h.normal[a].is_zero()) continue;
            for (int b = 0; b < G.rank; ++b) rhs.at(a, b) += factor * h.normal[a] * row[b];
        }
    }
    return L == rhs;
}

}  // namespace coxlab
