#pragma once

/* Dense linear algebra over F_p used by the field lattice internals. */

#include <optional>
#include <vector>

#include "asw/fp.hpp"

namespace asw {

using FpMat = std::vector<std::vector<u32>>; // row-major

inline FpMat fp_mat_identity(size_t n) {
    FpMat m(n, std::vector<u32>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline FpMat fp_mat_mul(const FpMat& a, const FpMat& b, u32 p) {
    const size_t n = a.size(), k = b.size(), mcols = k ? b[0].size() : 0;
    FpMat r(n, std::vector<u32>(mcols, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            const u64 aij = a[i][j];
            if (!aij) continue;
            for (size_t l = 0; l < mcols; ++l)
                r[i][l] = static_cast<u32>((r[i][l] + aij * b[j][l]) % p);
        }
    return r;
}

inline std::vector<u32> fp_mat_apply(const FpMat& a, const std::vector<u32>& v, u32 p) {
    std::vector<u32> r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        u64 acc = 0;
        for (size_t j = 0; j < v.size(); ++j) acc += (u64)a[i][j] * v[j] % p;
        r[i] = static_cast<u32>(acc % p);
    }
    return r;
}

/* Reduced row echelon form in place; returns pivot column per pivot row. */
inline std::vector<size_t> fp_rref(FpMat& m, u32 p) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[r]);
        const u32 inv = fp_inv(m[r][c], p);
        for (size_t j = c; j < cols; ++j) m[r][j] = fp_mul(m[r][j], inv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const u32 f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] = fp_sub(m[i][j], fp_mul(f, m[r][j], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/* Basis of {x : M x = 0}, canonical (from RREF free columns). */
inline std::vector<std::vector<u32>> fp_kernel(FpMat m, u32 p) {
    const size_t cols = m.empty() ? 0 : m[0].size();
    auto pivots = fp_rref(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<u32>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<u32> v(cols, 0);
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fp_neg(m[r][fc], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

/* Incrementally built row space over F_p with membership queries. */
struct FpSpan {
    u32 p;
    std::vector<std::vector<u32>> rows; // reduced, pivot coefficient 1
    std::vector<size_t> pivots;         // pivot column of each row

    explicit FpSpan(u32 p_) : p(p_) {}

    size_t rank() const { return rows.size(); }

    /* Reduces v by the current rows (in place). */
    void reduce(std::vector<u32>& v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            const u32 f = v[pivots[r]];
            if (!f) continue;
            for (size_t j = 0; j < v.size(); ++j)
                v[j] = fp_sub(v[j], fp_mul(f, rows[r][j], p), p);
        }
    }

    bool contains(std::vector<u32> v) const {
        reduce(v);
        for (u32 x : v)
            if (x) return false;
        return true;
    }

    /* Returns true if v enlarged the span. */
    bool add(std::vector<u32> v) {
        reduce(v);
        size_t pc = v.size();
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j]) { pc = j; break; }
        if (pc == v.size()) return false;
        const u32 inv = fp_inv(v[pc], p);
        for (auto& x : v) x = fp_mul(x, inv, p);
        // keep earlier rows reduced against the new one
        for (size_t r = 0; r < rows.size(); ++r) {
            const u32 f = rows[r][pc];
            if (!f) continue;
            for (size_t j = 0; j < v.size(); ++j)
                rows[r][j] = fp_sub(rows[r][j], fp_mul(f, v[j], p), p);
        }
        rows.push_back(std::move(v));
        pivots.push_back(pc);
        return true;
    }
};

/* One solution of M x = b, if consistent. */
inline std::optional<std::vector<u32>> fp_solve(FpMat m, std::vector<u32> b, u32 p) {
    const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
    auto pivots = fp_rref(m, p);
    // a pivot in the augmented column means inconsistency
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<u32> x(cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
    return x;
}

} // namespace asw
