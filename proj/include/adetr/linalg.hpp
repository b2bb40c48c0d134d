// SPDX-License-Identifier: Apache-2.0
//
// Dense exact linear algebra over a field F. F needs: F(long), +,-,*,/,
// unary -, ==, and a free is_zero(const F&).
#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

namespace adetr {

template <class F>
using Vec = std::vector<F>;

template <class F>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<F> a;  // row-major

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, F(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    F& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat r = x;
        for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
        return r;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat r = x;
        for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
        return r;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.cols == y.rows);
        Mat r(x.rows, y.cols);
        for (std::size_t i = 0; i < x.rows; ++i)
            for (std::size_t k = 0; k < x.cols; ++k) {
                const F& v = x(i, k);
                if (is_zero(v)) continue;
                for (std::size_t j = 0; j < y.cols; ++j) r(i, j) = r(i, j) + v * y(k, j);
            }
        return r;
    }
    friend Mat operator*(const F& s, const Mat& x) {
        Mat r = x;
        for (auto& v : r.a) v = s * v;
        return r;
    }
    friend bool operator==(const Mat& x, const Mat& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }

    Vec<F> apply(const Vec<F>& v) const {
        assert(v.size() == cols);
        Vec<F> r(rows, F(0));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!is_zero((*this)(i, j))) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    Mat transposed() const {
        Mat r(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
};

/// Row-reduce in place; returns pivot column list.
template <class F>
std::vector<std::size_t> rref(Mat<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t p = row;
        while (p < m.rows && is_zero(m(p, col))) ++p;
        if (p == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(row, j), m(p, j));
        F inv = F(1) / m(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m(row, j) = inv * m(row, j);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            F f = m(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Kernel basis (columns of the returned vectors index m.cols).
template <class F>
std::vector<Vec<F>> kernel(Mat<F> m) {
    auto piv = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec<F> v(m.cols, F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, free);
        basis.push_back(v);
    }
    return basis;
}

template <class F>
Mat<F> inverse(const Mat<F>& m) {
    assert(m.rows == m.cols);
    std::size_t n = m.rows;
    Mat<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto piv = rref(aug);
    if (piv.size() != n || piv.back() != n - 1) throw std::runtime_error("inverse: singular matrix");
    Mat<F> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

template <class F>
F det(Mat<F> m) {
    assert(m.rows == m.cols);
    std::size_t n = m.rows;
    F d = F(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && is_zero(m(p, col))) ++p;
        if (p == n) return F(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(p, j));
            d = -d;
        }
        d = d * m(col, col);
        F inv = F(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(m(i, col))) continue;
            F f = inv * m(i, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return d;
}

/// Solve m x = b; throws if inconsistent or underdetermined.
template <class F>
Vec<F> solve(const Mat<F>& m, const Vec<F>& b) {
    Mat<F> aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = b[i];
    }
    auto piv = rref(aug);
    Vec<F> x(m.cols, F(0));
    std::size_t r = 0;
    for (; r < piv.size(); ++r) {
        if (piv[r] == m.cols) throw std::runtime_error("solve: inconsistent system");
        x[piv[r]] = aug(r, m.cols);
    }
    if (piv.size() < m.cols) throw std::runtime_error("solve: underdetermined system");
    return x;
}

/// Characteristic polynomial det(xI - m), coefficients low-to-high
/// (Faddeev-LeVerrier; field of characteristic zero).
template <class F>
Vec<F> charpoly(const Mat<F>& m) {
    assert(m.rows == m.cols);
    long n = (long)m.rows;
    Vec<F> c((std::size_t)n + 1, F(0));
    c[(std::size_t)n] = F(1);
    Mat<F> M = Mat<F>(m.rows, m.rows);  // M_0 = 0
    F ck = F(1);
    for (long k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        Mat<F> AM = m * M;
        for (std::size_t i = 0; i < m.rows; ++i) AM(i, i) = AM(i, i) + ck;
        M = AM;
        Mat<F> P = m * M;
        F tr = F(0);
        for (std::size_t i = 0; i < m.rows; ++i) tr = tr + P(i, i);
        ck = -(F(1) / F(k)) * tr;
        c[(std::size_t)(n - k)] = ck;
    }
    return c;
}

}  // namespace adetr
