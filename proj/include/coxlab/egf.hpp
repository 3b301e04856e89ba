#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "coxlab/poly.hpp"

namespace coxlab {

// Exponential generating series sum_l c_l t^l / l!, truncated at order L.
// Coefficients are PolyW in the weight variables; for counting series they
// are constants and c_l is the actual (weighted) count at length l.
struct TruncatedEGF {
    int order = 0;              // L
    std::vector<PolyW> c;       // size L+1

    TruncatedEGF() = default;
    explicit TruncatedEGF(int L) : order(L), c(L + 1) {}

    static TruncatedEGF one(int L) {
        TruncatedEGF f(L);
        f.c[0] = PolyW(1);
        return f;
    }

    // e^{t * lf}: coefficient of t^l/l! is lf^l
    static TruncatedEGF exp_of_linear(const LinearForm& lf, int L) {
        TruncatedEGF f(L);
        for (int l = 0; l <= L; ++l) f.c[l] = linear_form_power(lf, l);
        return f;
    }

    PolyW coeff(int l) const { return l <= order ? c[l] : PolyW(); }

    TruncatedEGF& operator+=(const TruncatedEGF& o) {
        for (int l = 0; l <= std::min(order, o.order); ++l) c[l] += o.c[l];
        return *this;
    }
    TruncatedEGF& operator-=(const TruncatedEGF& o) {
        for (int l = 0; l <= std::min(order, o.order); ++l) c[l] -= o.c[l];
        return *this;
    }

    TruncatedEGF scaled(const CycScalar& s) const {
        TruncatedEGF f(order);
        for (int l = 0; l <= order; ++l) f.c[l] = c[l].scaled(s);
        return f;
    }
    TruncatedEGF scaled(const Rational& q) const { return scaled(CycScalar(q)); }

    friend TruncatedEGF operator*(const TruncatedEGF& x, const TruncatedEGF& y) {
        int L = std::min(x.order, y.order);
        TruncatedEGF f(L);
        for (int l = 0; l <= L; ++l) {
            PolyW s;
            for (int k = 0; k <= l; ++k) {
                if (x.c[k].is_zero() || y.c[l - k].is_zero()) continue;
                s += (x.c[k] * y.c[l - k]).scaled(Rational(binomial_z(l, k)));
            }
            f.c[l] = std::move(s);
        }
        return f;
    }

    // exp of a series with vanishing constant term
    TruncatedEGF exp() const {
        if (!c[0].is_zero())
            throw std::domain_error("TruncatedEGF::exp: nonzero constant term");
        TruncatedEGF g = one(order);
        TruncatedEGF p = one(order);
        mpz_class jfac = 1;
        for (int j = 1; j <= order; ++j) {
            p = p * (*this);
            jfac *= j;
            g += p.scaled(Rational(1) / Rational(jfac));
        }
        return g;
    }

    friend bool operator==(const TruncatedEGF& x, const TruncatedEGF& y) {
        if (x.order != y.order) return false;
        for (int l = 0; l <= x.order; ++l)
            if (x.c[l] != y.c[l]) return false;
        return true;
    }

    // index of the first differing coefficient, if any
    std::optional<int> first_difference(const TruncatedEGF& o) const {
        for (int l = 0; l <= std::min(order, o.order); ++l)
            if (c[l] != o.c[l]) return l;
        return std::nullopt;
    }
};

// Right-hand side of the main product formula:
//   e^{t * wR} / h * prod_i (1 - e^{-t lambda_i})
// expanded by inclusion-exclusion over subsets of the lambda_i, so every
// coefficient is an exact PolyW.
inline TruncatedEGF egf_product_formula(const LinearForm& wR,
                                        const std::vector<LinearForm>& lambdas,
                                        long h, int L) {
    if (h <= 0) throw std::invalid_argument("egf_product_formula: h must be positive");
    if (lambdas.empty()) throw std::invalid_argument("egf_product_formula: no eigenvalues");
    size_t n = lambdas.size();
    TruncatedEGF acc(L);
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        LinearForm e = wR;
        int bits = 0;
        for (size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                e -= lambdas[i];
                ++bits;
            }
        }
        TruncatedEGF term = TruncatedEGF::exp_of_linear(e, L);
        if (bits % 2) acc -= term;
        else acc += term;
    }
    return acc.scaled(Rational(1, h));
}

}  // namespace coxlab
