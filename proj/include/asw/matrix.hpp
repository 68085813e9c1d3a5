#pragma once

/* Dense linear algebra over an exact field type T. T must provide the ring
 * customization points (ring_zero_like, ring_one_like, ring_is_zero,
 * ring_inv) plus +, -, *, ==. Everything is deterministic: pivots are chosen
 * as the first nonzero entry in column order. */

#include <optional>
#include <vector>

#include "asw/common.hpp"

namespace asw {

template <class T>
struct Matrix {
    int rows = 0, cols = 0;
    T like;
    std::vector<T> a; // row-major

    T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

template <class T>
Matrix<T> mat_make(int rows, int cols, const T& like) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
    Matrix<T> m{rows, cols, ring_zero_like(like), {}};
    m.a.assign(static_cast<size_t>(rows) * cols, ring_zero_like(like));
    return m;
}

template <class T>
Matrix<T> mat_identity(int n, const T& like) {
    Matrix<T> m = mat_make(n, n, like);
    for (int i = 0; i < n; ++i) m.at(i, i) = ring_one_like(like);
    return m;
}

template <class T>
Matrix<T> mat_from_rows(const std::vector<std::vector<T>>& rows, int cols, const T& like) {
    Matrix<T> m = mat_make(static_cast<int>(rows.size()), cols, like);
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw input_error("ragged matrix rows");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

template <class T>
Matrix<T> mat_transpose(const Matrix<T>& m) {
    Matrix<T> t = mat_make(m.cols, m.rows, m.like);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.cols != y.rows) throw input_error("matrix product shape mismatch");
    Matrix<T> r = mat_make(x.rows, y.cols, x.like);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (ring_is_zero(x.at(i, k))) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
        }
    return r;
}

template <class T>
Matrix<T> mat_add(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw input_error("matrix sum shape mismatch");
    Matrix<T> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
}

template <class T>
std::vector<T> mat_apply(const Matrix<T>& m, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw input_error("matrix apply shape mismatch");
    std::vector<T> r(static_cast<size_t>(m.rows), ring_zero_like(m.like));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (ring_is_zero(m.at(i, j))) continue;
            r[i] = r[i] + m.at(i, j) * v[j];
        }
    return r;
}

/* In-place reduction to reduced row echelon form; returns the pivot columns. */
template <class T>
std::vector<int> mat_rref(Matrix<T>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!ring_is_zero(m.at(i, c))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        T inv = ring_inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || ring_is_zero(m.at(i, c))) continue;
            T f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
int mat_rank(const Matrix<T>& m) {
    Matrix<T> c = m;
    return static_cast<int>(mat_rref(c).size());
}

/* Canonical right-kernel basis: one vector per free column, with a 1 there. */
template <class T>
std::vector<std::vector<T>> mat_kernel(const Matrix<T>& m) {
    Matrix<T> r = m;
    std::vector<int> pivots = mat_rref(r);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<T>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<T> v(static_cast<size_t>(m.cols), ring_zero_like(m.like));
        v[static_cast<size_t>(c)] = ring_one_like(m.like);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<size_t>(pivots[k])] = -r.at(static_cast<int>(k), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

/* One solution of m x = b, if any. */
template <class T>
std::optional<std::vector<T>> mat_solve(const Matrix<T>& m, const std::vector<T>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw input_error("solve shape mismatch");
    Matrix<T> aug = mat_make(m.rows, m.cols + 1, m.like);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> pivots = mat_rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<T> x(static_cast<size_t>(m.cols), ring_zero_like(m.like));
    for (size_t k = 0; k < pivots.size(); ++k)
        x[static_cast<size_t>(pivots[k])] = aug.at(static_cast<int>(k), m.cols);
    return x;
}

template <class T>
Matrix<T> mat_inverse(const Matrix<T>& m) {
    if (m.rows != m.cols) throw input_error("inverse of a non-square matrix");
    Matrix<T> aug = mat_make(m.rows, 2 * m.cols, m.like);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = ring_one_like(m.like);
    }
    std::vector<int> pivots = mat_rref(aug);
    if (static_cast<int>(pivots.size()) != m.rows || (!pivots.empty() && pivots.back() >= m.cols))
        throw math_error("matrix is singular");
    Matrix<T> inv = mat_make(m.rows, m.cols, m.like);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

template <class T>
bool mat_eq(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!(x.a[i] == y.a[i])) return false;
    return true;
}

} // namespace asw
