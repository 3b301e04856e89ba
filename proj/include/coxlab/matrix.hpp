#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "coxlab/cyclotomic.hpp"
#include "coxlab/poly.hpp"

namespace coxlab {

// Small dense matrix over an exact ring (CycScalar, PolyW, Rational-like).
// Everything here is O(n^3)-or-worse and meant for ranks <= 8 and the
// occasional regular representation of a tiny group.
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(r * c) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    T& at(int i, int j) { return a[i * cols + j]; }
    const T& at(int i, int j) const { return a[i * cols + j]; }

    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat m(x.rows, x.cols);
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = x.a[i] + y.a[i];
        return m;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat m(x.rows, x.cols);
        for (size_t i = 0; i < m.a.size(); ++i) m.a[i] = x.a[i] - y.a[i];
        return m;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.cols == y.rows);
        Mat m(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const T& v = x.at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < y.cols; ++j) {
                    if (y.at(k, j).is_zero()) continue;
                    m.at(i, j) += v * y.at(k, j);
                }
            }
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        assert((int)v.size() == cols);
        std::vector<T> out(rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

    Mat scaled(const T& s) const {
        Mat m(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * s;
        return m;
    }

    Mat operator-() const {
        Mat m(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) m.a[i] = -a[i];
        return m;
    }

    Mat transpose() const {
        Mat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    T trace() const {
        T s{};
        for (int i = 0; i < rows; ++i) s += at(i, i);
        return s;
    }

    bool is_zero() const {
        for (const auto& v : a)
            if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) return false;
        for (size_t i = 0; i < x.a.size(); ++i)
            if (!(x.a[i] == y.a[i])) return false;
        return true;
    }
};

inline Mat<CycScalar> conj(const Mat<CycScalar>& m) {
    Mat<CycScalar> out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = m.a[i].conj();
    return out;
}

// det(x*I + A) as coefficients by ascending power of x, via Faddeev-LeVerrier.
// Exact over any commutative Q-algebra (the divisions are by integers).
template <class T>
std::vector<T> charpoly_xI_plus(const Mat<T>& A) {
    assert(A.rows == A.cols);
    int n = A.rows;
    Mat<T> B = -A;  // run the recurrence for det(xI - B) with B = -A
    std::vector<T> c(n + 1);
    c[n] = T(1);
    Mat<T> M(n, n);  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        // M_k = B*M_{k-1} + c_{n-k+1} I
        Mat<T> BM = B * M;
        for (int i = 0; i < n; ++i) BM.at(i, i) += c[n - k + 1];
        M = std::move(BM);
        Mat<T> AM = B * M;
        T t = AM.trace();
        c[n - k] = -(t.scaled(Rational(1, k)));
    }
    return c;
}

// --- Field linear algebra over CycScalar ---------------------------------

// Row-reduce in place; returns rank. Columns [0, cols) are eliminated.
inline int rref_in_place(Mat<CycScalar>& m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        CycScalar inv = m.at(rank, col).inverse();
        for (int j = 0; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            CycScalar f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

inline int rank_of(Mat<CycScalar> m) { return rref_in_place(m); }

// Basis of the right nullspace, one column vector per basis element.
inline std::vector<std::vector<CycScalar>> nullspace(Mat<CycScalar> m) {
    int n = m.cols;
    int rank = rref_in_place(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0, col = 0; i < rank; ++i) {
        while (col < n && m.at(i, col).is_zero()) ++col;
        pivot_col.push_back(col);
        is_pivot[col] = true;
    }
    std::vector<std::vector<CycScalar>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<CycScalar> v(n);
        v[free] = CycScalar::one();
        for (int i = 0; i < rank; ++i)
            v[pivot_col[i]] = -m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline CycScalar det(Mat<CycScalar> m) {
    assert(m.rows == m.cols);
    CycScalar d = CycScalar::one();
    for (int col = 0; col < m.cols; ++col) {
        int piv = -1;
        for (int i = col; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return CycScalar();
        if (piv != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        CycScalar inv = m.at(col, col).inverse();
        for (int i = col + 1; i < m.rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            CycScalar f = m.at(i, col) * inv;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return d;
}

// Integer determinant by Bareiss fraction-free elimination (no rationals).
inline mpz_class det_bareiss_int(std::vector<std::vector<long long>> m) {
    int n = (int)m.size();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = (long)m[i][j];
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace coxlab
