#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxlab/rational.hpp"

namespace coxlab {

namespace detail {

inline int euler_phi(int r) {
    int result = r, m = r;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

// Cyclotomic polynomial Phi_r, monic with integer coefficients,
// via Phi_r = (x^r - 1) / prod_{d | r, d < r} Phi_d.
inline const std::vector<long long>& phi_poly(int r) {
    static std::map<int, std::vector<long long>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;

    std::vector<long long> num(r + 1, 0);
    num[0] = -1;
    num[r] = 1;
    for (int d = 1; d < r; ++d) {
        if (r % d) continue;
        // recurse without re-locking
        std::vector<long long> pd;
        {
            auto jt = cache.find(d);
            if (jt != cache.end()) {
                pd = jt->second;
            } else {
                std::vector<long long> nd(d + 1, 0);
                nd[0] = -1;
                nd[d] = 1;
                for (int e = 1; e < d; ++e) {
                    if (d % e) continue;
                    const auto& pe = cache.at(e);  // divisors fill in increasing order
                    std::vector<long long> q(nd.size() - pe.size() + 1, 0);
                    for (int k = (int)q.size() - 1; k >= 0; --k) {
                        q[k] = nd[k + pe.size() - 1];
                        for (size_t j = 0; j < pe.size(); ++j) nd[k + j] -= q[k] * pe[j];
                    }
                    nd = q;
                }
                cache[d] = nd;
                pd = nd;
            }
        }
        std::vector<long long> q(num.size() - pd.size() + 1, 0);
        for (int k = (int)q.size() - 1; k >= 0; --k) {
            q[k] = num[k + pd.size() - 1];
            for (size_t j = 0; j < pd.size(); ++j) num[k + j] -= q[k] * pd[j];
        }
        num = q;
    }
    return cache.emplace(r, std::move(num)).first->second;
}

}  // namespace detail

// Exact element of the cyclotomic field Q(zeta_r), stored as a polynomial
// in zeta_r reduced modulo Phi_r (degree < phi(r)), so equality is decidable.
// Values that turn out rational collapse to order 1.
class CycScalar {
  public:
    CycScalar() : order_(1) {}
    CycScalar(const Rational& q) : order_(1) {
        if (!q.is_zero()) coeffs_.push_back(q);
    }
    CycScalar(long n) : CycScalar(Rational(n)) {}

    // zeta_r^k
    static CycScalar root_of_unity(int r, long k) {
        if (r < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
        long kk = ((k % r) + r) % r;
        CycScalar z;
        z.order_ = r;
        z.coeffs_.assign(kk + 1, Rational(0));
        z.coeffs_[kk] = Rational(1);
        z.reduce();
        return z;
    }

    static CycScalar zero() { return CycScalar(); }
    static CycScalar one() { return CycScalar(Rational(1)); }

    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return order_ == 1; }

    Rational as_rational() const {
        if (order_ != 1) throw std::domain_error("CycScalar: not rational");
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    Rational coeff(int k) const {
        return k < (int)coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
        int m = std::lcm(a.order_, b.order_);
        CycScalar x = a.embedded(m), y = b.embedded(m);
        if (y.coeffs_.size() > x.coeffs_.size()) x.coeffs_.resize(y.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < y.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        x.reduce();
        return x;
    }

    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

    CycScalar operator-() const {
        CycScalar x = *this;
        for (auto& c : x.coeffs_) c = -c;
        return x;
    }

    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        if (a.is_zero() || b.is_zero()) return CycScalar();
        if (a.order_ == 1) return b.scaled(a.coeffs_[0]);
        if (b.order_ == 1) return a.scaled(b.coeffs_[0]);
        int m = std::lcm(a.order_, b.order_);
        CycScalar x = a.embedded(m), y = b.embedded(m);
        std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < y.coeffs_.size(); ++j)
                if (!y.coeffs_[j].is_zero()) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        CycScalar z;
        z.order_ = m;
        z.coeffs_ = std::move(prod);
        z.reduce();
        return z;
    }

    CycScalar scaled(const Rational& q) const {
        if (q.is_zero()) return CycScalar();
        CycScalar x = *this;
        for (auto& c : x.coeffs_) c *= q;
        return x;
    }

    CycScalar& operator+=(const CycScalar& o) { *this = *this + o; return *this; }
    CycScalar& operator-=(const CycScalar& o) { *this = *this - o; return *this; }
    CycScalar& operator*=(const CycScalar& o) { *this = *this * o; return *this; }

    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

    CycScalar inverse() const {
        if (is_zero()) throw std::domain_error("CycScalar: division by zero");
        if (order_ == 1) return CycScalar(Rational(1) / coeffs_[0]);
        // extended Euclid against Phi_r in Q[x]
        const auto& phi_i = detail::phi_poly(order_);
        std::vector<Rational> r0(phi_i.begin(), phi_i.end());
        std::vector<Rational> r1 = coeffs_;
        std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coeffs of *this in each
        auto deg = [](const std::vector<Rational>& p) {
            int d = (int)p.size() - 1;
            while (d >= 0 && p[d].is_zero()) --d;
            return d;
        };
        while (deg(r1) > 0) {
            int d0 = deg(r0), d1 = deg(r1);
            std::vector<Rational> q(d0 - d1 + 1, Rational(0));
            std::vector<Rational> rem = r0;
            for (int k = d0 - d1; k >= 0; --k) {
                Rational c = rem[k + d1] / r1[d1];
                q[k] = c;
                for (int j = 0; j <= d1; ++j) rem[k + j] -= c * r1[j];
            }
            // s_new = s0 - q*s1
            std::vector<Rational> snew(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
            for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(snew);
        }
        int d1 = deg(r1);
        if (d1 < 0) throw std::domain_error("CycScalar: inverse of zero divisor");
        Rational g = r1[0];
        CycScalar inv;
        inv.order_ = order_;
        inv.coeffs_ = s1;
        for (auto& c : inv.coeffs_) c /= g;
        inv.reduce();
        return inv;
    }

    // Field automorphism zeta -> zeta^{-1}; an involution fixing rationals.
    CycScalar conj() const {
        if (order_ == 1) return *this;
        CycScalar x;
        x.order_ = order_;
        x.coeffs_.assign(order_, Rational(0));
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            x.coeffs_[k == 0 ? 0 : order_ - k] += coeffs_[k];
        }
        x.reduce();
        return x;
    }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        std::complex<double> sum(0.0, 0.0);
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            double arg = 2.0 * 3.14159265358979323846 * (double)k / (double)order_;
            sum += coeffs_[k].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        return sum;
    }

    // sqrt of a nonnegative integer, exact via Gauss sums (sqrt(p) lives in Q(zeta_{4p})).
    static CycScalar sqrt_of_int(long n) {
        if (n < 0) throw std::domain_error("sqrt_of_int: negative");
        if (n == 0) return CycScalar();
        CycScalar out = CycScalar::one();
        long m = n;
        for (long p = 2; p * p <= m; ++p) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            if (e == 0) continue;
            for (int i = 0; i < e / 2; ++i) out = out.scaled(Rational(p));
            if (e % 2) out = out * sqrt_prime(p);
        }
        if (m > 1) out = out * sqrt_prime(m);
        return out;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            std::string term;
            if (k == 0) {
                term = coeffs_[k].str();
            } else {
                std::string zs = (k == 1) ? "z" : "z^" + std::to_string(k);
                if (coeffs_[k] == Rational(1)) term = zs;
                else if (coeffs_[k] == Rational(-1)) term = "-" + zs;
                else term = coeffs_[k].str() + "*" + zs;
            }
            if (!s.empty() && term[0] != '-') s += "+";
            s += term;
        }
        return s;
    }

    // Parses the printed form above; z means zeta_{order}.
    static CycScalar parse(const std::string& s, int order) {
        CycScalar out;
        size_t i = 0;
        while (i < s.size()) {
            size_t j = i + 1;
            while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
            std::string term = s.substr(i, j - i);
            if (!term.empty() && term[0] == '+') term = term.substr(1);
            Rational c(1);
            long k = 0;
            auto star = term.find('*');
            auto zpos = term.find('z');
            if (zpos == std::string::npos) {
                c = Rational::parse(term);
            } else {
                std::string cs = (star == std::string::npos) ? term.substr(0, zpos)
                                                             : term.substr(0, star);
                if (cs.empty()) c = Rational(1);
                else if (cs == "-") c = Rational(-1);
                else c = Rational::parse(cs);
                auto caret = term.find('^');
                k = (caret == std::string::npos) ? 1 : std::stol(term.substr(caret + 1));
            }
            out += root_of_unity(order, k).scaled(c);
            i = j;
        }
        return out;
    }

  private:
    int order_;
    std::vector<Rational> coeffs_;  // index k = coefficient of zeta^k, reduced mod Phi_r

    static CycScalar sqrt_prime(long p) {
        if (p == 2) {  // zeta_8 - zeta_8^3
            CycScalar z = root_of_unity(8, 1) - root_of_unity(8, 3);
            return z;
        }
        // quadratic Gauss sum g = sum legendre(a) zeta_p^a; g = sqrt(p) or i*sqrt(p)
        CycScalar g;
        g.order_ = (int)p;
        g.coeffs_.assign(p, Rational(0));
        for (long a = 1; a < p; ++a) {
            long ls = 1, base = a % p, e = (p - 1) / 2;
            long acc = 1;
            while (e) {
                if (e & 1) acc = (acc * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            ls = (acc == 1) ? 1 : -1;
            g.coeffs_[a] = Rational(ls);
        }
        g.reduce();
        if (p % 4 == 1) return g;
        return g * root_of_unity(4, 3);  // -i * g
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    void mod_phi() {
        const auto& phi_i = detail::phi_poly(order_);
        size_t d = phi_i.size() - 1;  // phi(order)
        if (coeffs_.size() > d) {
            for (size_t k = coeffs_.size(); k-- > d;) {
                Rational c = coeffs_[k];
                if (c.is_zero()) continue;
                coeffs_[k] = Rational(0);
                for (size_t j = 0; j < d; ++j)
                    coeffs_[k - d + j] -= c * Rational((long)phi_i[j]);
            }
            coeffs_.resize(d);
        }
        trim();
    }

    // canonical form: reduced mod Phi_r, trailing zeros trimmed, rational
    // values collapsed to order 1
    void reduce() {
        if (order_ != 1) mod_phi();
        trim();
        bool constant = true;
        for (size_t k = 1; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero()) { constant = false; break; }
        if (constant) order_ = 1;
    }

    // representation at order m (order_ | m); keeps order m even for
    // rational values so callers can combine coefficients directly
    CycScalar embedded(int m) const {
        CycScalar x;
        x.order_ = m;
        x.coeffs_ = coeffs_;
        if (m != order_ && !coeffs_.empty()) {
            int f = m / order_;
            x.coeffs_.assign((coeffs_.size() - 1) * f + 1, Rational(0));
            for (size_t k = 0; k < coeffs_.size(); ++k) x.coeffs_[k * f] = coeffs_[k];
            x.mod_phi();
        }
        return x;
    }
};

}  // namespace coxlab
