#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "coxlab/cyclotomic.hpp"
#include "coxlab/linear_form.hpp"

namespace coxlab {

// Sparse multivariate polynomial in the weight variables w1..wn with
// CycScalar coefficients. Keys are exponent vectors with trailing zeros
// trimmed, so the variable count is implicit.
class PolyW {
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, CycScalar>;

    PolyW() = default;
    PolyW(const CycScalar& c) { if (!c.is_zero()) terms_[{}] = c; }
    PolyW(const Rational& q) : PolyW(CycScalar(q)) {}
    PolyW(long n) : PolyW(CycScalar(Rational(n))) {}

    static PolyW variable(int idx) {
        PolyW p;
        Exponents e(idx + 1, 0);
        e[idx] = 1;
        p.terms_[e] = CycScalar::one();
        return p;
    }

    static PolyW monomial(Exponents e, const CycScalar& c) {
        PolyW p;
        if (!c.is_zero()) {
            trim(e);
            p.terms_[std::move(e)] = c;
        }
        return p;
    }

    static PolyW from_linear_form(const LinearForm& lf) {
        PolyW p;
        for (size_t i = 0; i < lf.a.size(); ++i) {
            if (lf.a[i] == 0) continue;
            Exponents e(i + 1, 0);
            e[i] = 1;
            p.terms_[e] = CycScalar(Rational(lf.a[i]));
        }
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    CycScalar constant_term() const {
        auto it = terms_.find({});
        return it == terms_.end() ? CycScalar() : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }

    PolyW& operator+=(const PolyW& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    PolyW& operator-=(const PolyW& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend PolyW operator+(PolyW x, const PolyW& y) { return x += y; }
    friend PolyW operator-(PolyW x, const PolyW& y) { return x -= y; }
    PolyW operator-() const {
        PolyW p;
        for (const auto& [e, c] : terms_) p.terms_[e] = -c;
        return p;
    }

    friend PolyW operator*(const PolyW& x, const PolyW& y) {
        PolyW p;
        for (const auto& [ex, cx] : x.terms_) {
            for (const auto& [ey, cy] : y.terms_) {
                Exponents e(std::max(ex.size(), ey.size()), 0);
                for (size_t i = 0; i < ex.size(); ++i) e[i] += ex[i];
                for (size_t i = 0; i < ey.size(); ++i) e[i] += ey[i];
                p.add_term(std::move(e), cx * cy);
            }
        }
        return p;
    }
    PolyW& operator*=(const PolyW& o) { *this = *this * o; return *this; }

    PolyW scaled(const CycScalar& c) const {
        PolyW p;
        if (c.is_zero()) return p;
        for (const auto& [e, t] : terms_) p.terms_[e] = t * c;
        return p;
    }
    PolyW scaled(const Rational& q) const { return scaled(CycScalar(q)); }

    // Multiply by a single monomial in place (the convolution hot path).
    PolyW shifted(const Exponents& shift, const CycScalar& c) const {
        PolyW p;
        if (c.is_zero()) return p;
        for (const auto& [e, t] : terms_) {
            Exponents ne(std::max(e.size(), shift.size()), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[i] += e[i];
            for (size_t i = 0; i < shift.size(); ++i) ne[i] += shift[i];
            p.terms_[std::move(ne)] = t * c;
        }
        return p;
    }

    void add_term(Exponents e, const CycScalar& c) {
        if (c.is_zero()) return;
        trim(e);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CycScalar eval(const std::vector<CycScalar>& vals) const {
        CycScalar s;
        for (const auto& [e, c] : terms_) {
            CycScalar m = c;
            for (size_t i = 0; i < e.size(); ++i) {
                for (int k = 0; k < e[i]; ++k) m *= vals.at(i);
            }
            s += m;
        }
        return s;
    }

    CycScalar eval(const std::vector<Rational>& vals) const {
        std::vector<CycScalar> v(vals.begin(), vals.end());
        return eval(v);
    }

    friend bool operator==(const PolyW& x, const PolyW& y) {
        if (x.terms_.size() != y.terms_.size()) return false;
        auto it = x.terms_.begin(), jt = y.terms_.begin();
        for (; it != x.terms_.end(); ++it, ++jt) {
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const PolyW& x, const PolyW& y) { return !(x == y); }

    // {"1,0,2": "3/2", ...} exponent-vector keyed map of scalar strings
    std::map<std::string, std::string> to_string_map() const {
        std::map<std::string, std::string> out;
        for (const auto& [e, c] : terms_) {
            std::string key;
            for (size_t i = 0; i < e.size(); ++i) {
                if (i) key += ",";
                key += std::to_string(e[i]);
            }
            out[key] = c.str();
        }
        return out;
    }

    std::string str(const std::string& var = "w") const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string cs = c.str();
            std::string term;
            if (mono.empty()) term = "(" + cs + ")";
            else if (cs == "1") term = mono;
            else if (cs == "-1") term = "-" + mono;
            else term = "(" + cs + ")*" + mono;
            if (!s.empty()) s += " + ";
            s += term;
        }
        return s;
    }

  private:
    TermMap terms_;

    static void trim(Exponents& e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }
};

// (sum_i a_i w_i)^p expanded by multinomials; exact for any integer coefficients.
inline PolyW linear_form_power(const LinearForm& lf, int p) {
    if (p == 0) return PolyW(1);
    std::vector<std::pair<int, long long>> support;
    for (size_t i = 0; i < lf.a.size(); ++i)
        if (lf.a[i] != 0) support.push_back({(int)i, lf.a[i]});
    PolyW out;
    if (support.empty()) return out;  // 0^p = 0 for p > 0
    std::vector<int> ks(support.size(), 0);
    // enumerate compositions of p into |support| parts
    std::vector<int> stackrem;
    std::function<void(size_t, int)> rec = [&](size_t idx, int rem) {
        if (idx + 1 == support.size()) {
            ks[idx] = rem;
            mpz_class coef = factorial_z(p);
            mpz_class powprod = 1;
            for (size_t t = 0; t < support.size(); ++t) {
                coef /= factorial_z(ks[t]);
                mpz_class b((long)support[t].second);
                mpz_class acc;
                mpz_pow_ui(acc.get_mpz_t(), b.get_mpz_t(), ks[t]);
                powprod *= acc;
            }
            PolyW::Exponents e;
            for (size_t t = 0; t < support.size(); ++t) {
                if (ks[t] == 0) continue;
                if ((int)e.size() <= support[t].first) e.resize(support[t].first + 1, 0);
                e[support[t].first] = ks[t];
            }
            out.add_term(std::move(e), CycScalar(Rational(mpz_class(coef * powprod))));
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            ks[idx] = k;
            rec(idx + 1, rem - k);
        }
    };
    rec(0, p);
    return out;
}

}  // namespace coxlab
