#pragma once

/* q-semilinear operators on a finite-dimensional space over the algebraic
 * closure, q = p^twist: F(v) = M sigma(v) with sigma the entrywise q-power
 * map and column j of M the image of the j-th basis vector.
 *
 * The two nontrivial routines both assume the base is the algebraic closure
 * (the field lattice supplies whatever extensions are needed):
 *  - sl_fixed_points finds a basis of V^{F=1} for bijective F by building a
 *    cyclic chain, solving the associated q-linearized polynomial, and
 *    back-substituting; the fixed vectors form an F_q-basis of the fixed
 *    space and simultaneously a full basis of V over the closure.
 *  - sl_inhom_solve solves F(x) - x = m by splitting V into the nilpotent
 *    and bijective parts of F (Fitting), inverting id - F by a geometric sum
 *    on the nilpotent part and reducing to scalar Artin-Schreier equations
 *    in a fixed basis on the bijective part. */

#include "asw/field.hpp"
#include "asw/matrix.hpp"
#include "asw/solve.hpp"

namespace asw {

struct Semilinear {
    FieldLattice* lat = nullptr;
    int twist = 1;
    Matrix<FieldElement> mat;

    int dim() const { return mat.rows; }
};

using FieldVec = std::vector<FieldElement>;

inline Semilinear sl_make(FieldLattice& lat, int twist, Matrix<FieldElement> m) {
    if (m.rows != m.cols) throw input_error("semilinear operator matrix must be square");
    if (twist < 0) throw input_error("semilinear twist must be nonnegative");
    return Semilinear{&lat, twist, std::move(m)};
}

inline FieldVec sl_sigma(FieldLattice& lat, FieldVec v, long long k) {
    for (auto& x : v) x = lat.p_power(x, k);
    return v;
}

inline FieldVec sl_apply(const Semilinear& S, FieldVec v) {
    v = sl_sigma(*S.lat, std::move(v), S.twist);
    return mat_apply(S.mat, v);
}

inline Semilinear sl_compose(const Semilinear& S, const Semilinear& T) {
    if (S.lat != T.lat || S.dim() != T.dim()) throw input_error("semilinear compose mismatch");
    Matrix<FieldElement> mt = T.mat;
    for (auto& e : mt.a) e = S.lat->p_power(e, S.twist);
    return Semilinear{S.lat, S.twist + T.twist, mat_mul(S.mat, mt)};
}

inline Semilinear sl_power(const Semilinear& S, int k) {
    if (k <= 0) throw input_error("semilinear power must be positive");
    Semilinear r = S;
    for (int i = 1; i < k; ++i) r = sl_compose(r, S);
    return r;
}

// ---- small vector utilities ----

inline FieldVec vec_add(const FieldVec& x, const FieldVec& y) {
    if (x.size() != y.size()) throw input_error("vector sum length mismatch");
    FieldVec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + y[i];
    return r;
}

inline FieldVec vec_sub(const FieldVec& x, const FieldVec& y) {
    if (x.size() != y.size()) throw input_error("vector difference length mismatch");
    FieldVec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - y[i];
    return r;
}

inline FieldVec vec_scale(const FieldElement& c, const FieldVec& x) {
    FieldVec r = x;
    for (auto& e : r) e = c * e;
    return r;
}

inline bool vec_eq(const FieldVec& x, const FieldVec& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (!(x[i] == y[i])) return false;
    return true;
}

inline bool vec_is_zero(const FieldVec& x) {
    for (const auto& e : x)
        if (!e.is_zero()) return false;
    return true;
}

/* Matrix whose columns are the given vectors (each of length dim). */
inline Matrix<FieldElement> sl_cols(FieldLattice& lat, const std::vector<FieldVec>& vs, int dim) {
    Matrix<FieldElement> m = mat_make(dim, static_cast<int>(vs.size()), lat.zero(1));
    for (int j = 0; j < m.cols; ++j) {
        if (static_cast<int>(vs[static_cast<size_t>(j)].size()) != dim)
            throw input_error("column length mismatch");
        for (int i = 0; i < dim; ++i) m.at(i, j) = vs[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    return m;
}

/* Basis of ker F = sigma^{-1}(ker M). */
inline std::vector<FieldVec> sl_kernel(const Semilinear& S) {
    std::vector<FieldVec> ker = mat_kernel(S.mat);
    for (auto& v : ker) v = sl_sigma(*S.lat, std::move(v), -static_cast<long long>(S.twist));
    return ker;
}

struct SlSplit {
    std::vector<FieldVec> nil_basis; // F nilpotent here (F^index = 0)
    std::vector<FieldVec> bij_basis; // F bijective here
    int index = 0;                   // stabilization exponent
};

/* Fitting decomposition V = ker F^K + im F^K once ranks stabilize. */
inline SlSplit sl_fitting(const Semilinear& S) {
    SlSplit out;
    int d = S.dim();
    if (d == 0) return out;
    Semilinear P = S;
    int prev = mat_rank(P.mat);
    out.index = 1;
    while (prev > 0) {
        Semilinear Q = sl_compose(P, S);
        int r = mat_rank(Q.mat);
        if (r == prev) break;
        P = std::move(Q);
        prev = r;
        ++out.index;
    }
    for (auto& v : mat_kernel(P.mat))
        out.nil_basis.push_back(
            sl_sigma(*S.lat, std::move(v), -static_cast<long long>(S.twist) * out.index));
    {
        Matrix<FieldElement> t = mat_transpose(P.mat);
        std::vector<int> piv = mat_rref(t);
        for (size_t k = 0; k < piv.size(); ++k) {
            FieldVec row;
            for (int j = 0; j < t.cols; ++j) row.push_back(t.at(static_cast<int>(k), j));
            out.bij_basis.push_back(std::move(row));
        }
    }
    if (static_cast<int>(out.nil_basis.size() + out.bij_basis.size()) != d)
        throw math_error("Fitting decomposition dimensions do not add up");
    std::vector<FieldVec> all = out.nil_basis;
    all.insert(all.end(), out.bij_basis.begin(), out.bij_basis.end());
    if (mat_rank(sl_cols(*S.lat, all, d)) != d)
        throw math_error("Fitting decomposition is not a direct sum");
    return out;
}

/* Basis of the fixed space V^{F=1} for a bijective operator. The returned
 * vectors are F_q-independent (q = p^twist) and span V over the closure. */
inline std::vector<FieldVec> sl_fixed_points(const Semilinear& S) {
    FieldLattice& lat = *S.lat;
    const int d = S.dim();
    const int a = S.twist;
    if (a < 1) throw input_error("fixed points need a positive twist");
    if (!mat_kernel(S.mat).empty()) throw math_error("operator is not bijective");
    std::vector<FieldVec> fixed;
    while (static_cast<int>(fixed.size()) < d) {
        Matrix<FieldElement> fcols = sl_cols(lat, fixed, d);
        // First standard basis vector outside the span of the fixed set.
        FieldVec u;
        for (int i = 0; i < d && u.empty(); ++i) {
            FieldVec e(static_cast<size_t>(d), lat.zero(1));
            e[static_cast<size_t>(i)] = lat.one(1);
            if (!mat_solve(fcols, e)) u = std::move(e);
        }
        if (u.empty()) throw math_error("fixed set spans but is short"); // unreachable
        // Cyclic chain in the quotient by the current fixed span.
        std::vector<FieldVec> chain{u};
        FieldVec coeff;
        for (;;) {
            FieldVec next = sl_apply(S, chain.back());
            std::vector<FieldVec> cols = fixed;
            cols.insert(cols.end(), chain.begin(), chain.end());
            auto sol = mat_solve(sl_cols(lat, cols, d), next);
            if (sol) {
                coeff.assign(sol->begin() + static_cast<long>(fixed.size()), sol->end());
                break;
            }
            chain.push_back(std::move(next));
        }
        const int j = static_cast<int>(chain.size());
        if (coeff[0].is_zero()) throw math_error("operator is not bijective on a cyclic block");
        // Fixed vectors of the quotient block: v = sum beta_l F^l(u) with
        // beta_0 = t^q c_0, beta_l = beta_{l-1}^q + t^q c_l, and the closing
        // condition beta_{j-1} = t, which is the q-linearized equation
        //   t^{q^j} c_0^{q^{j-1}} + ... + t^q c_{j-1} - t = 0.
        std::vector<FieldElement> lin{-lat.one(1)};
        for (int k = 1; k <= j; ++k)
            lin.push_back(lat.p_power(coeff[static_cast<size_t>(j - k)],
                                      static_cast<long long>(a) * (k - 1)));
        std::vector<FieldElement> roots = linearized_root_basis(lat, a, lin);
        if (static_cast<int>(roots.size()) != j)
            throw math_error("cyclic block root space has the wrong dimension");
        std::vector<FieldVec> batch;
        for (const FieldElement& t : roots) {
            FieldElement tq = lat.p_power(t, a);
            std::vector<FieldElement> beta{tq * coeff[0]};
            for (int l = 1; l < j; ++l)
                beta.push_back(lat.p_power(beta.back(), a) + tq * coeff[static_cast<size_t>(l)]);
            if (!(beta.back() == t)) throw math_error("cyclic block closing condition failed");
            FieldVec v(static_cast<size_t>(d), lat.zero(1));
            for (int l = 0; l < j; ++l) v = vec_add(v, vec_scale(beta[static_cast<size_t>(l)], chain[static_cast<size_t>(l)]));
            // Correct v by an element of the fixed span so it becomes fixed.
            FieldVec w = vec_sub(sl_apply(S, v), v);
            if (!fixed.empty() || !vec_is_zero(w)) {
                auto b = mat_solve(fcols, w);
                if (!b) throw math_error("quotient defect left the fixed span");
                for (size_t i = 0; i < fixed.size(); ++i) {
                    FieldElement xi = solve_artin_schreier_scalar(lat, a, -(*b)[i]);
                    v = vec_add(v, vec_scale(xi, fixed[i]));
                }
            }
            if (!vec_eq(sl_apply(S, v), v)) throw math_error("fixed point correction failed");
            batch.push_back(std::move(v));
        }
        int before = mat_rank(sl_cols(lat, fixed, d));
        for (auto& v : batch) fixed.push_back(std::move(v));
        if (mat_rank(sl_cols(lat, fixed, d)) != before + j)
            throw math_error("fixed vectors failed to enlarge the span");
    }
    return fixed;
}

/* One solution of F(x) - x = m. */
inline FieldVec sl_inhom_solve(const Semilinear& S, const FieldVec& m) {
    FieldLattice& lat = *S.lat;
    const int d = S.dim();
    if (static_cast<int>(m.size()) != d) throw input_error("inhomogeneous solve length mismatch");
    if (S.twist < 1) throw input_error("inhomogeneous solve needs a positive twist");
    if (d == 0) return {};
    SlSplit sp = sl_fitting(S);
    std::vector<FieldVec> all = sp.nil_basis;
    all.insert(all.end(), sp.bij_basis.begin(), sp.bij_basis.end());
    auto y = mat_solve(sl_cols(lat, all, d), m);
    if (!y) throw math_error("Fitting basis fails to span"); // unreachable
    FieldVec m_nil(static_cast<size_t>(d), lat.zero(1));
    for (size_t i = 0; i < sp.nil_basis.size(); ++i)
        m_nil = vec_add(m_nil, vec_scale((*y)[i], sp.nil_basis[i]));
    FieldVec m_bij = vec_sub(m, m_nil);
    // Nilpotent part: (F - id)^{-1} = -(id + F + ... + F^{index-1}).
    FieldVec x(static_cast<size_t>(d), lat.zero(1));
    FieldVec term = m_nil;
    for (int i = 0; i < sp.index; ++i) {
        x = vec_sub(x, term);
        term = sl_apply(S, term);
    }
    if (!vec_is_zero(term)) throw math_error("nilpotent part did not terminate");
    // Bijective part: restrict, fix a basis of fixed vectors, and solve
    // scalar Artin-Schreier equations coordinatewise.
    if (!sp.bij_basis.empty()) {
        const int b = static_cast<int>(sp.bij_basis.size());
        Matrix<FieldElement> bcols = sl_cols(lat, sp.bij_basis, d);
        Matrix<FieldElement> rmat = mat_make(b, b, lat.zero(1));
        for (int jcol = 0; jcol < b; ++jcol) {
            auto img = mat_solve(bcols, sl_apply(S, sp.bij_basis[static_cast<size_t>(jcol)]));
            if (!img) throw math_error("bijective part is not stable");
            for (int i = 0; i < b; ++i) rmat.at(i, jcol) = (*img)[static_cast<size_t>(i)];
        }
        Semilinear R = sl_make(lat, S.twist, std::move(rmat));
        std::vector<FieldVec> fb = sl_fixed_points(R);
        std::vector<FieldVec> famb;
        for (const auto& f : fb) famb.push_back(mat_apply(bcols, f));
        auto c = mat_solve(sl_cols(lat, famb, d), m_bij);
        if (!c) throw math_error("fixed basis fails to span the bijective part");
        for (size_t i = 0; i < famb.size(); ++i) {
            FieldElement xi = solve_artin_schreier_scalar(lat, S.twist, (*c)[i]);
            x = vec_add(x, vec_scale(xi, famb[i]));
        }
    }
    if (!vec_eq(vec_sub(sl_apply(S, x), x), m)) throw math_error("inhomogeneous solve failed");
    return x;
}

} // namespace asw
