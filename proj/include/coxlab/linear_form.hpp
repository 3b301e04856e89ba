#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "coxlab/rational.hpp"

namespace coxlab {

// Integer combination  sum_i a_i * w_i  of the weight variables.
// This is the semantic type of every W-Laplacian eigenvalue.
struct LinearForm {
    std::vector<long long> a;

    LinearForm() = default;
    explicit LinearForm(std::vector<long long> coeffs) : a(std::move(coeffs)) { trim(); }

    static LinearForm unit(int var, long long c = 1) {
        std::vector<long long> v(var + 1, 0);
        v[var] = c;
        return LinearForm(std::move(v));
    }

    void trim() {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    long long coeff(size_t i) const { return i < a.size() ? a[i] : 0; }
    bool is_zero() const { return a.empty(); }

    LinearForm& operator+=(const LinearForm& o) {
        if (o.a.size() > a.size()) a.resize(o.a.size(), 0);
        for (size_t i = 0; i < o.a.size(); ++i) a[i] += o.a[i];
        trim();
        return *this;
    }
    LinearForm& operator-=(const LinearForm& o) {
        if (o.a.size() > a.size()) a.resize(o.a.size(), 0);
        for (size_t i = 0; i < o.a.size(); ++i) a[i] -= o.a[i];
        trim();
        return *this;
    }
    friend LinearForm operator+(LinearForm x, const LinearForm& y) { return x += y; }
    friend LinearForm operator-(LinearForm x, const LinearForm& y) { return x -= y; }
    LinearForm scaled(long long c) const {
        LinearForm x = *this;
        for (auto& v : x.a) v *= c;
        x.trim();
        return x;
    }

    Rational eval(const std::vector<Rational>& w) const {
        Rational s(0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            s += Rational(a[i]) * w.at(i);
        }
        return s;
    }

    long long eval_at_one() const {
        long long s = 0;
        for (auto v : a) s += v;
        return s;
    }

    friend bool operator==(const LinearForm& x, const LinearForm& y) { return x.a == y.a; }
    friend bool operator<(const LinearForm& x, const LinearForm& y) { return x.a < y.a; }

    std::string str() const {
        if (a.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            std::string term;
            std::string var = "w" + std::to_string(i + 1);
            if (a[i] == 1) term = var;
            else if (a[i] == -1) term = "-" + var;
            else term = std::to_string(a[i]) + "*" + var;
            if (!s.empty() && term[0] != '-') s += "+";
            s += term;
        }
        return s;
    }
};

inline bool same_multiset(std::vector<LinearForm> x, std::vector<LinearForm> y) {
    auto lt = [](const LinearForm& p, const LinearForm& q) { return p.a < q.a; };
    std::sort(x.begin(), x.end(), lt);
    std::sort(y.begin(), y.end(), lt);
    return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
}

}  // namespace coxlab
