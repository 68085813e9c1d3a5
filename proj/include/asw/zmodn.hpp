#pragma once

/* Exact linear algebra over Z/p^nZ: diagonalization by unimodular row and
 * column operations, kernels, inhomogeneous solving, and invariant-factor
 * decompositions of finitely presented modules. Over this local chain ring
 * every matrix is equivalent to diag(p^{a_1}, p^{a_2}, ...) with
 * nondecreasing exponents: picking a minimal-valuation pivot keeps every
 * remaining entry divisible by it, so elimination is division-free.
 *
 * Vectors are column vectors; a "span" is a list of such vectors. Entries
 * are kept reduced in [0, q) with q = p^n capped below 2^31 so products fit
 * in u64. */

#include <optional>
#include <vector>

#include "asw/common.hpp"

namespace asw {

struct ZnMod {
    u32 p = 0;
    int n = 0;
    u64 q = 0; // p^n
};

inline ZnMod zn_make(u32 p, int n) {
    if (!is_prime_u64(p)) throw input_error("modulus base must be prime");
    if (n < 1) throw input_error("modulus exponent must be positive");
    u64 q = ipow_u64(p, static_cast<unsigned>(n));
    if (q >= (1ull << 31)) throw input_error("modulus exceeds the supported range");
    return ZnMod{p, n, q};
}

inline u64 zn_red(const ZnMod& R, Int v) {
    v %= Int(R.q);
    if (v < 0) v += Int(R.q);
    return static_cast<u64>(v);
}

inline u64 zn_add(const ZnMod& R, u64 a, u64 b) { return (a + b) % R.q; }
inline u64 zn_sub(const ZnMod& R, u64 a, u64 b) { return (a + R.q - b % R.q) % R.q; }
inline u64 zn_mul(const ZnMod& R, u64 a, u64 b) { return (a % R.q) * (b % R.q) % R.q; }
inline u64 zn_neg(const ZnMod& R, u64 a) { return (R.q - a % R.q) % R.q; }

/* p-adic valuation of the representative; by convention val(0) = n. */
inline int zn_val(const ZnMod& R, u64 a) {
    a %= R.q;
    if (a == 0) return R.n;
    int v = 0;
    while (a % R.p == 0) {
        a /= R.p;
        ++v;
    }
    return v;
}

/* Inverse of a unit (valuation zero) by extended Euclid against q. */
inline u64 zn_unit_inv(const ZnMod& R, u64 a) {
    a %= R.q;
    if (a % R.p == 0) throw math_error("inverse of a non-unit residue");
    long long r0 = static_cast<long long>(R.q), r1 = static_cast<long long>(a);
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long k = r0 / r1;
        r0 -= k * r1;
        s0 -= k * s1;
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    long long inv = s0 % static_cast<long long>(R.q);
    if (inv < 0) inv += static_cast<long long>(R.q);
    return static_cast<u64>(inv);
}

using ZnVec = std::vector<u64>;

struct ZnMat {
    int rows = 0, cols = 0;
    std::vector<u64> a; // row-major

    u64& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    u64 at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

inline ZnMat zn_mat(int rows, int cols) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
    ZnMat m{rows, cols, {}};
    m.a.assign(static_cast<size_t>(rows) * cols, 0);
    return m;
}

inline ZnMat zn_mat_from_cols(const ZnMod& R, const std::vector<ZnVec>& cols, int dim) {
    ZnMat m = zn_mat(dim, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j) {
        if (static_cast<int>(cols[static_cast<size_t>(j)].size()) != dim)
            throw input_error("ragged column list");
        for (int i = 0; i < dim; ++i)
            m.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)] % R.q;
    }
    return m;
}

inline ZnVec zn_mat_vec(const ZnMod& R, const ZnMat& m, const ZnVec& x) {
    if (static_cast<int>(x.size()) != m.cols) throw input_error("matrix-vector shape mismatch");
    ZnVec out(static_cast<size_t>(m.rows), 0);
    for (int i = 0; i < m.rows; ++i) {
        u64 acc = 0;
        for (int j = 0; j < m.cols; ++j)
            acc = (acc + m.at(i, j) * (x[static_cast<size_t>(j)] % R.q)) % R.q;
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

inline ZnMat zn_mat_mul(const ZnMod& R, const ZnMat& x, const ZnMat& y) {
    if (x.cols != y.rows) throw input_error("matrix product shape mismatch");
    ZnMat r = zn_mat(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            u64 v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % R.q;
        }
    return r;
}

inline ZnVec zn_vec_add(const ZnMod& R, const ZnVec& a, const ZnVec& b) {
    if (a.size() != b.size()) throw input_error("vector length mismatch");
    ZnVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = zn_add(R, a[i], b[i]);
    return r;
}

inline ZnVec zn_vec_sub(const ZnMod& R, const ZnVec& a, const ZnVec& b) {
    if (a.size() != b.size()) throw input_error("vector length mismatch");
    ZnVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = zn_sub(R, a[i], b[i]);
    return r;
}

inline ZnVec zn_vec_scale(const ZnMod& R, u64 c, const ZnVec& a) {
    ZnVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = zn_mul(R, c, a[i]);
    return r;
}

inline bool zn_vec_is_zero(const ZnVec& a) {
    for (u64 v : a)
        if (v) return false;
    return true;
}

/* Diagonalization A ~ P A Q = diag(p^{vals[0]}, p^{vals[1]}, ...). Row
 * operations are applied to A and to the optional right-hand-side block B
 * (so B ends up holding P B); column operations accumulate in Q. vals keeps
 * one exponent per processed pivot position; positions past vals.size() saw
 * only zeros. */
struct ZnDiag {
    ZnMod R;
    ZnMat A;            // diagonal after reduction
    ZnMat B;            // P times the input block
    ZnMat Q;            // cols x cols, invertible
    std::vector<int> vals;
};

inline ZnDiag zn_diagonalize(const ZnMod& R, ZnMat A, ZnMat B = ZnMat{}) {
    if (B.rows == 0 && B.cols == 0) B = zn_mat(A.rows, 0);
    if (B.rows != A.rows) throw input_error("right-hand-side row count mismatch");
    ZnDiag D{R, std::move(A), std::move(B), zn_mat(0, 0), {}};
    ZnMat& M = D.A;
    D.Q = zn_mat(M.cols, M.cols);
    for (int i = 0; i < M.cols; ++i) D.Q.at(i, i) = 1;

    auto row_swap = [&](int i, int k) {
        if (i == k) return;
        for (int j = 0; j < M.cols; ++j) std::swap(M.at(i, j), M.at(k, j));
        for (int j = 0; j < D.B.cols; ++j) std::swap(D.B.at(i, j), D.B.at(k, j));
    };
    auto col_swap = [&](int j, int k) {
        if (j == k) return;
        for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, j), M.at(i, k));
        for (int i = 0; i < D.Q.rows; ++i) std::swap(D.Q.at(i, j), D.Q.at(i, k));
    };
    auto row_addmul = [&](int dst, int src, u64 c) { // row_dst += c * row_src
        if (c == 0) return;
        for (int j = 0; j < M.cols; ++j) M.at(dst, j) = (M.at(dst, j) + c * M.at(src, j)) % R.q;
        for (int j = 0; j < D.B.cols; ++j)
            D.B.at(dst, j) = (D.B.at(dst, j) + c * D.B.at(src, j)) % R.q;
    };
    auto col_addmul = [&](int dst, int src, u64 c) { // col_dst += c * col_src
        if (c == 0) return;
        for (int i = 0; i < M.rows; ++i) M.at(i, dst) = (M.at(i, dst) + c * M.at(i, src)) % R.q;
        for (int i = 0; i < D.Q.rows; ++i)
            D.Q.at(i, dst) = (D.Q.at(i, dst) + c * D.Q.at(i, src)) % R.q;
    };
    auto row_scale = [&](int i, u64 c) {
        for (int j = 0; j < M.cols; ++j) M.at(i, j) = M.at(i, j) * c % R.q;
        for (int j = 0; j < D.B.cols; ++j) D.B.at(i, j) = D.B.at(i, j) * c % R.q;
    };

    const int steps = std::min(M.rows, M.cols);
    for (int k = 0; k < steps; ++k) {
        int bi = -1, bj = -1, bv = R.n;
        for (int i = k; i < M.rows; ++i)
            for (int j = k; j < M.cols; ++j) {
                int v = zn_val(R, M.at(i, j));
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break; // remaining block is zero
        row_swap(k, bi);
        col_swap(k, bj);
        u64 pk = ipow_u64(R.p, static_cast<unsigned>(bv));
        row_scale(k, zn_unit_inv(R, M.at(k, k) / pk));
        // Every remaining entry has valuation >= bv, so the factors divide out.
        for (int i = 0; i < M.rows; ++i) {
            if (i == k || M.at(i, k) == 0) continue;
            row_addmul(i, k, R.q - M.at(i, k) / pk);
        }
        for (int j = 0; j < M.cols; ++j) {
            if (j == k || M.at(k, j) == 0) continue;
            col_addmul(j, k, R.q - M.at(k, j) / pk);
        }
        D.vals.push_back(bv);
    }
    return D;
}

/* Generating set of {x : A x = 0}. In diagonal coordinates p^a y = 0 forces
 * y into p^{n-a} R; mapping the scaled unit vectors back through Q yields
 * generators in the original coordinates. */
inline std::vector<ZnVec> zn_kernel(const ZnMod& R, const ZnMat& A) {
    ZnDiag D = zn_diagonalize(R, A);
    std::vector<ZnVec> gens;
    for (int j = 0; j < A.cols; ++j) {
        int a = j < static_cast<int>(D.vals.size()) ? D.vals[static_cast<size_t>(j)] : R.n;
        if (a == 0) continue;
        u64 scale = ipow_u64(R.p, static_cast<unsigned>(R.n - a));
        ZnVec g(static_cast<size_t>(A.cols), 0);
        for (int i = 0; i < A.cols; ++i) g[static_cast<size_t>(i)] = D.Q.at(i, j) * scale % R.q;
        if (!zn_vec_is_zero(g)) gens.push_back(std::move(g));
    }
    return gens;
}

/* One solution of A x = b, if any. */
inline std::optional<ZnVec> zn_solve(const ZnMod& R, const ZnMat& A, const ZnVec& b) {
    if (static_cast<int>(b.size()) != A.rows) throw input_error("right-hand side length mismatch");
    ZnMat B = zn_mat(A.rows, 1);
    for (int i = 0; i < A.rows; ++i) B.at(i, 0) = b[static_cast<size_t>(i)] % R.q;
    ZnDiag D = zn_diagonalize(R, A, std::move(B));
    ZnVec y(static_cast<size_t>(A.cols), 0);
    for (int i = 0; i < A.rows; ++i) {
        u64 c = D.B.at(i, 0);
        int a = i < static_cast<int>(D.vals.size()) ? D.vals[static_cast<size_t>(i)] : R.n;
        if (a >= R.n) {
            if (c != 0) return std::nullopt;
            continue;
        }
        if (zn_val(R, c) < a) return std::nullopt;
        if (i < A.cols) y[static_cast<size_t>(i)] = c / ipow_u64(R.p, static_cast<unsigned>(a));
        else if (c != 0) return std::nullopt;
    }
    ZnVec x(static_cast<size_t>(A.cols), 0);
    for (int i = 0; i < A.cols; ++i) {
        u64 acc = 0;
        for (int j = 0; j < A.cols; ++j) acc = (acc + D.Q.at(i, j) * y[static_cast<size_t>(j)]) % R.q;
        x[static_cast<size_t>(i)] = acc;
    }
    return x;
}

/* Coordinates of target in the given span, if the membership holds. */
inline std::optional<ZnVec> zn_coords_in_span(const ZnMod& R, const std::vector<ZnVec>& span,
                                              const ZnVec& target) {
    return zn_solve(R, zn_mat_from_cols(R, span, static_cast<int>(target.size())), target);
}

/* Invariant factors p^{e_1} | p^{e_2} | ... of R^{ngens} / span(rels), as
 * the ascending exponent list with trivial factors dropped. Free summands
 * appear as exponent n. */
inline std::vector<int> zn_invariant_exponents(const ZnMod& R, const std::vector<ZnVec>& rels,
                                               int ngens) {
    ZnMat A = zn_mat(static_cast<int>(rels.size()), ngens);
    for (size_t i = 0; i < rels.size(); ++i) {
        if (static_cast<int>(rels[i].size()) != ngens) throw input_error("ragged relation list");
        for (int j = 0; j < ngens; ++j) A.at(static_cast<int>(i), j) = rels[i][static_cast<size_t>(j)] % R.q;
    }
    ZnDiag D = zn_diagonalize(R, A);
    std::vector<int> exps;
    for (int j = 0; j < ngens; ++j) {
        int a = j < static_cast<int>(D.vals.size()) ? D.vals[static_cast<size_t>(j)] : R.n;
        if (a > 0) exps.push_back(a);
    }
    return exps;
}

/* Invariant factors of (span V + span W) / span W inside R^dim: the quotient
 * is presented on the V generators by the relations {c : V c in span W}. */
inline std::vector<int> zn_subquotient_exponents(const ZnMod& R, const std::vector<ZnVec>& V,
                                                 const std::vector<ZnVec>& W, int dim) {
    const int nv = static_cast<int>(V.size());
    std::vector<ZnVec> all = V;
    all.insert(all.end(), W.begin(), W.end());
    std::vector<ZnVec> rels;
    for (const ZnVec& k : zn_kernel(R, zn_mat_from_cols(R, all, dim)))
        rels.push_back(ZnVec(k.begin(), k.begin() + nv));
    return zn_invariant_exponents(R, rels, nv);
}

/* Matrix T with: v lies in the span of the given vectors iff T v = 0.
 * Diagonalize the span as rows, D = P A Q; then v = y A for some y iff each
 * coordinate (v Q)_l is divisible by the l-th diagonal exponent, i.e.
 * p^{n - d_l} (v Q)_l = 0. Encoding membership as homogeneous conditions
 * lets "x in U" constraints join a linear system without extra unknowns. */
inline ZnMat zn_membership_rows(const ZnMod& R, const std::vector<ZnVec>& span, int dim) {
    ZnMat A = zn_mat(static_cast<int>(span.size()), dim);
    for (size_t i = 0; i < span.size(); ++i) {
        if (static_cast<int>(span[i].size()) != dim) throw input_error("ragged span list");
        for (int j = 0; j < dim; ++j) A.at(static_cast<int>(i), j) = span[i][static_cast<size_t>(j)] % R.q;
    }
    ZnDiag D = zn_diagonalize(R, A);
    std::vector<ZnVec> rows;
    for (int l = 0; l < dim; ++l) {
        // Pivot coordinate: (vQ)_l must be divisible by p^{d}. Coordinate
        // reached by no pivot: (vQ)_l must vanish outright, i.e. d = n.
        int d = l < static_cast<int>(D.vals.size()) ? D.vals[static_cast<size_t>(l)] : R.n;
        if (d == 0) continue; // divisibility by p^0 holds for everything
        u64 scale = ipow_u64(R.p, static_cast<unsigned>(R.n - d));
        ZnVec row(static_cast<size_t>(dim), 0);
        for (int i = 0; i < dim; ++i) row[static_cast<size_t>(i)] = D.Q.at(i, l) * scale % R.q;
        if (!zn_vec_is_zero(row)) rows.push_back(std::move(row));
    }
    ZnMat T = zn_mat(static_cast<int>(rows.size()), dim);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < dim; ++j) T.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    return T;
}

/* Total size of the module with the given exponent list. */
inline Int zn_module_order(const ZnMod& R, const std::vector<int>& exps) {
    Int r = 1;
    for (int e : exps) r *= ipow_int(Int(R.p), static_cast<unsigned>(e));
    return r;
}

} // namespace asw
