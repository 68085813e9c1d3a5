#pragma once

/* Witt vectors of adeles and the p^n-torsion étale cohomology pipeline.
 *
 * H¹(X, W_n(O_X)) is presented as W_n(A_X) / (W_n(A°_X) + W_n(K)): a class
 * is a length-n vector of adeles, and all Witt arithmetic happens pointwise
 * over the support because the adele ring is a product. H¹ét(X, ℤ/pⁿℤ) is
 * the subgroup fixed by the coordinatewise p-power Frobenius.
 *
 * The three main routines:
 *  - find_function_witt: triviality test with function certificate, by
 *    peeling one Witt coordinate per step;
 *  - coordinates_in_basis_witt: ℤ/pⁿℤ-coordinates of a fixed class in a
 *    basis, one Witt digit per step;
 *  - compute_h1 / compute_h1_from_hw: build a basis of H¹ét(X, ℤ/pⁿℤ) by
 *    lifting a level-1 basis one level at a time. Each lift solves an
 *    inhomogeneous semilinear equation in the coherent cohomology basis.
 *
 * Every routine ends by certifying its defining congruence with full Witt
 * arithmetic; pole growth along the lifts is checked against the a priori
 * bound p^{j(j+1)/2} (resp. its level-lift analogue) and a violation throws,
 * since it can only mean an implementation defect. */

#include "asw/adele.hpp"
#include "asw/semilinear.hpp"
#include "asw/witt.hpp"

namespace asw {

struct WittAdele {
    const Curve* X = nullptr;
    std::vector<Adele> co; // coordinate adeles, each kept normalized
    int len() const { return static_cast<int>(co.size()); }
};

inline WittAdele wa_make(const Curve& X, std::vector<Adele> co) {
    WittAdele r{&X, std::move(co)};
    if (r.co.empty()) throw input_error("Witt adele needs at least one coordinate");
    for (auto& a : r.co) {
        if (a.X != &X) throw input_error("Witt adele coordinates live on different curves");
        a = adele_normalize(a);
    }
    return r;
}

inline WittAdele wa_zero(const Curve& X, int n) {
    if (n <= 0) throw input_error("Witt adele needs at least one coordinate");
    WittAdele r{&X, {}};
    for (int i = 0; i < n; ++i) r.co.push_back(adele_zero(X));
    return r;
}

inline WittAdele wa_truncate(const WittAdele& r, int m) {
    if (m <= 0 || m > r.len()) throw input_error("truncation length out of range");
    WittAdele t{r.X, {}};
    for (int i = 0; i < m; ++i) t.co.push_back(r.co[static_cast<size_t>(i)]);
    return t;
}

inline bool wa_is_regular(const WittAdele& r) {
    for (const auto& a : r.co)
        if (!a.at.empty()) return false;
    return true;
}

inline std::vector<Place> wa_support(const WittAdele& r) {
    const Curve& X = *r.X;
    std::vector<Place> S;
    for (const auto& a : r.co)
        for (const auto& [P, f] : a.at) {
            bool seen = false;
            for (const auto& Q : S) seen = seen || place_eq(X, Q, P);
            if (!seen) S.push_back(P);
        }
    std::sort(S.begin(), S.end(),
              [&](const Place& a, const Place& b) { return place_cmp(X, a, b) < 0; });
    return S;
}

/* Components of the first m coordinates at P, as a Witt vector of
 * functions (zero where the coordinate has no entry at P). */
inline WittVector<CurveFun> wa_component(const WittAdele& r, const Place& P, int m) {
    const Curve& X = *r.X;
    WittVector<CurveFun> w = witt_zero(cf_one(X), m);
    for (int i = 0; i < m && i < r.len(); ++i)
        for (const auto& [Q, f] : r.co[static_cast<size_t>(i)].at)
            if (place_eq(X, Q, P)) w.a[static_cast<size_t>(i)] = f;
    return w;
}

/* A global-function vector (h_0,...,h_{k-1}) padded with zeros to length m. */
inline WittVector<CurveFun> witt_function_pad(const Curve& X, const std::vector<CurveFun>& h,
                                              int k, int m) {
    WittVector<CurveFun> w = witt_zero(cf_one(X), m);
    for (int i = 0; i < k && i < static_cast<int>(h.size()); ++i)
        w.a[static_cast<size_t>(i)] = h[static_cast<size_t>(i)];
    return w;
}

/* Constant-scalar Witt vector padded with zeros to length m. */
inline WittVector<CurveFun> witt_alpha_pad(const Curve& X, const WittVector<FieldElement>& al,
                                           int k, int m) {
    WittVector<CurveFun> w = witt_zero(cf_one(X), m);
    for (int i = 0; i < k && i < al.len(); ++i)
        w.a[static_cast<size_t>(i)] = cf_from_rf(X, rf_const(al.a[static_cast<size_t>(i)]));
    return w;
}

inline WittAdele wa_assemble(const Curve& X, int n, const std::vector<Place>& places,
                             const std::vector<WittVector<CurveFun>>& vals) {
    WittAdele out{&X, {}};
    for (int i = 0; i < n; ++i) {
        Adele a{&X, {}};
        for (size_t k = 0; k < places.size(); ++k)
            a.at.push_back({places[k], vals[k].a[static_cast<size_t>(i)]});
        out.co.push_back(adele_normalize(a));
    }
    return out;
}

namespace detail {

inline std::vector<Place> place_union(const Curve& X, const std::vector<Place>& A,
                                      const std::vector<Place>& B) {
    std::vector<Place> S = A;
    for (const auto& P : B) {
        bool seen = false;
        for (const auto& Q : S) seen = seen || place_eq(X, Q, P);
        if (!seen) S.push_back(P);
    }
    std::sort(S.begin(), S.end(),
              [&](const Place& a, const Place& b) { return place_cmp(X, a, b) < 0; });
    return S;
}

} // namespace detail

inline WittAdele wa_add(const WittAdele& a, const WittAdele& b) {
    const Curve& X = *a.X;
    if (a.len() != b.len()) throw input_error("Witt adele lengths differ");
    const int n = a.len();
    const WittRing& W = WittRing::get(X.lat->p(), n);
    auto S = detail::place_union(X, wa_support(a), wa_support(b));
    std::vector<WittVector<CurveFun>> vals;
    for (const auto& P : S)
        vals.push_back(witt_add(W, wa_component(a, P, n), wa_component(b, P, n)));
    return wa_assemble(X, n, S, vals);
}

inline WittAdele wa_neg(const WittAdele& a) {
    const Curve& X = *a.X;
    const int n = a.len();
    const WittRing& W = WittRing::get(X.lat->p(), n);
    auto S = wa_support(a);
    std::vector<WittVector<CurveFun>> vals;
    for (const auto& P : S) vals.push_back(witt_neg(W, wa_component(a, P, n)));
    return wa_assemble(X, n, S, vals);
}

inline WittAdele wa_sub(const WittAdele& a, const WittAdele& b) { return wa_add(a, wa_neg(b)); }

/* Coordinatewise p^k-th power: the Frobenius of W_n(A_X). */
inline WittAdele wa_frobenius(const WittAdele& a, int k = 1) {
    WittAdele r = a;
    for (auto& c : r.co) c = adele_frobenius(c, k);
    return r;
}

/* Multiplication by the image of the integer k in W_n(F_p) = Z/p^nZ. */
inline WittAdele wa_scale_int(const WittAdele& a, const Int& k) {
    const Curve& X = *a.X;
    const int n = a.len();
    const WittRing& W = WittRing::get(X.lat->p(), n);
    WittVector<CurveFun> scal = witt_from_int(W, k, n, cf_one(X));
    auto S = wa_support(a);
    std::vector<WittVector<CurveFun>> vals;
    for (const auto& P : S) vals.push_back(witt_mul(W, scal, wa_component(a, P, n)));
    return wa_assemble(X, n, S, vals);
}

/* Multiplication by a constant Witt scalar with F_p coordinates. */
inline WittAdele wa_scale_wittfp(const WittAdele& a, const WittVector<FieldElement>& al) {
    const Curve& X = *a.X;
    const int n = a.len();
    const WittRing& W = WittRing::get(X.lat->p(), n);
    WittVector<CurveFun> scal = witt_alpha_pad(X, al, n, n);
    auto S = wa_support(a);
    std::vector<WittVector<CurveFun>> vals;
    for (const auto& P : S) vals.push_back(witt_mul(W, scal, wa_component(a, P, n)));
    return wa_assemble(X, n, S, vals);
}

inline bool wa_eq_repr(const WittAdele& a, const WittAdele& b) {
    if (a.len() != b.len()) return false;
    for (int i = 0; i < a.len(); ++i)
        if (!adele_eq_repr(a.co[static_cast<size_t>(i)], b.co[static_cast<size_t>(i)]))
            return false;
    return true;
}

// ---- pole bookkeeping ----

inline int adele_pole_order(const Adele& a, const Place& P) {
    for (const auto& [Q, f] : a.at)
        if (place_eq(*a.X, Q, P)) return std::max(0, -cf_val(f, P));
    return 0;
}

inline int adele_total_pole(const Adele& a) {
    int s = 0;
    for (const auto& [Q, f] : a.at) s += std::max(0, -cf_val(f, Q));
    return s;
}

inline int cf_pole_order(const CurveFun& f, const Place& P) {
    if (f.is_zero()) return 0;
    return std::max(0, -cf_val(f, P));
}

// ---- triviality of Witt adele classes ----

/* A Witt vector of functions h with r - h in W_n(A°_X), or nothing when the
 * class of r in H¹(X, W_n(O_X)) is nonzero. Peels one coordinate per step:
 * the i-th coordinate of r_{<=i} - (h_0,...,h_{i-1},0) is congruent to h_i
 * modulo regular adeles. */
inline std::optional<std::vector<CurveFun>> find_function_witt(const Curve& X,
                                                               const std::vector<Place>& S,
                                                               const WittAdele& r) {
    const int n = r.len();
    const u32 p = X.lat->p();
    for (const auto& a : r.co)
        for (const auto& [P, f] : a.at) {
            bool inS = false;
            for (const auto& Q : S) inS = inS || place_eq(X, P, Q);
            if (!inS) throw input_error("adele support escapes the designated point set");
        }
    // A priori pole bound for the peeled coordinates.
    int m0 = 1;
    for (const auto& a : r.co) m0 = std::max(m0, adele_total_pole(a));
    std::vector<CurveFun> h;
    for (int i = 0; i < n; ++i) {
        const WittRing& W = WittRing::get(p, i + 1);
        Adele u{&X, {}};
        for (const auto& P : S) {
            WittVector<CurveFun> w = witt_sub(W, wa_component(r, P, i + 1),
                                              witt_function_pad(X, h, i, i + 1));
            u.at.push_back({P, w.a[static_cast<size_t>(i)]});
        }
        u = adele_normalize(u);
        Int bound = ipow_int(Int(p), static_cast<unsigned>(i * (i + 1) / 2)) * m0;
        if (Int(adele_total_pole(u)) > bound)
            throw math_error("pole growth exceeded the a priori bound");
        auto hi = find_function(X, S, u);
        if (!hi) return std::nullopt;
        h.push_back(*hi);
    }
    // Certify r - h coordinatewise regular with full Witt arithmetic.
    const WittRing& W = WittRing::get(p, n);
    for (const auto& P : S) {
        WittVector<CurveFun> w =
            witt_sub(W, wa_component(r, P, n), witt_function_pad(X, h, n, n));
        for (const auto& c : w.a)
            if (cf_pole_order(c, P) > 0)
                throw math_error("function certificate fails to match the class");
    }
    return h;
}

// ---- bases of H¹ét(X, Z/p^nZ) ----

struct H1EtBasis {
    const Curve* X = nullptr;
    int level = 0;                        // n
    std::vector<WittAdele> reps;          // r^(i), length-n Witt adeles
    std::vector<std::vector<CurveFun>> h; // companions: F(r)-r-h regular
    int rank() const { return static_cast<int>(reps.size()); }
};

struct WittCoords {
    std::vector<WittVector<FieldElement>> alpha; // one W_n(F_p) scalar per basis element
    std::vector<CurveFun> h;
};

/* Coordinates of a Frobenius-fixed class in a basis of H¹ét(X, Z/p^nZ):
 * returns alpha and h with r - h - sum alpha^(i) b^(i) in W_n(A°_X), the
 * scalars acting by Witt multiplication. Works one Witt digit at a time;
 * each digit is a level-1 coordinate computation against the classes
 * b_0^(i) shifted by the functions F^m(h_0^(i)), m < j. */
inline WittCoords coordinates_in_basis_witt(const Curve& X, const std::vector<Place>& S_in,
                                            const WittAdele& r, const H1EtBasis& B) {
    FieldLattice& lat = *X.lat;
    const int n = r.len();
    const int s = B.rank();
    if (B.level != n) throw input_error("class and basis have different Witt lengths");
    std::vector<Place> S = S_in;
    S = detail::place_union(X, S, wa_support(r));
    for (const auto& b : B.reps) S = detail::place_union(X, S, wa_support(b));

    auto fp_digit = [&](const FieldElement& e) {
        if (!(ring_frob(e) == e)) throw math_error("class is not Frobenius-fixed");
        return lat.reduce_min(e);
    };

    std::vector<Adele> level1;
    for (const auto& b : B.reps) level1.push_back(b.co[0]);
    WittCoords out;
    H1Coords c0 = coordinates_in_adele_span(X, S, r.co[0], level1);
    for (int i = 0; i < s; ++i) {
        WittVector<FieldElement> al = witt_zero(lat.one(1), n);
        al.a[0] = fp_digit(c0.beta[static_cast<size_t>(i)]);
        out.alpha.push_back(al);
    }
    out.h.push_back(c0.h);

    for (int j = 1; j < n; ++j) {
        const WittRing& W = WittRing::get(lat.p(), j + 1);
        // u_j = last coordinate of r_{<=j} - (h_{<j},0) - sum (alpha_{<j},0) b^(i).
        Adele u{&X, {}};
        for (const auto& P : S) {
            WittVector<CurveFun> t = witt_sub(W, wa_component(r, P, j + 1),
                                              witt_function_pad(X, out.h, j, j + 1));
            for (int i = 0; i < s; ++i) {
                WittVector<CurveFun> scaled =
                    witt_mul(W, witt_alpha_pad(X, out.alpha[static_cast<size_t>(i)], j, j + 1),
                             wa_component(B.reps[static_cast<size_t>(i)], P, j + 1));
                t = witt_sub(W, t, scaled);
            }
            u.at.push_back({P, t.a[static_cast<size_t>(j)]});
        }
        u = adele_normalize(u);
        // Digit-j basis classes: b_0^(i) corrected by sum_{m<j} F^m(h_0^(i)).
        std::vector<Adele> cls;
        for (int i = 0; i < s; ++i) {
            CurveFun g = cf_zero(X);
            for (int m = 0; m < j; ++m)
                g = cf_add(g, cf_pfrob(B.h[static_cast<size_t>(i)][0], m));
            cls.push_back(adele_add(level1[static_cast<size_t>(i)], adele_of_function(X, S, g)));
        }
        H1Coords cj = coordinates_in_adele_span(X, S, u, cls);
        for (int i = 0; i < s; ++i)
            out.alpha[static_cast<size_t>(i)].a[static_cast<size_t>(j)] =
                fp_digit(cj.beta[static_cast<size_t>(i)]);
        out.h.push_back(cj.h);
    }

    // Certify the decomposition with full Witt arithmetic.
    const WittRing& W = WittRing::get(lat.p(), n);
    for (const auto& P : S) {
        WittVector<CurveFun> t =
            witt_sub(W, wa_component(r, P, n), witt_function_pad(X, out.h, n, n));
        for (int i = 0; i < s; ++i)
            t = witt_sub(W, t,
                         witt_mul(W, witt_alpha_pad(X, out.alpha[static_cast<size_t>(i)], n, n),
                                  wa_component(B.reps[static_cast<size_t>(i)], P, n)));
        for (const auto& c : t.a)
            if (cf_pole_order(c, P) > 0) throw math_error("Witt decomposition failed to certify");
    }
    return out;
}

// ---- lifting a level-1 basis through the levels ----

/* Lift an F_p-basis of H¹ét(X, Z/pZ) to a Z/p^nZ-basis of H¹ét(X, Z/p^nZ).
 * hw_op is the coordinate action of Frobenius on the coherent basis B_O
 * (the transposed Hasse-Witt matrix acting on column vectors). At each
 * level the obstruction class v_j is computed by Witt arithmetic, written
 * in the coordinates of B_O, and removed by one inhomogeneous semilinear
 * solve. */
inline H1EtBasis compute_h1(const Curve& X, const std::vector<Place>& S, const H1Basis& B_O,
                            const Semilinear& hw_op, const std::vector<Adele>& level1, int n) {
    FieldLattice& lat = *X.lat;
    if (n <= 0) throw input_error("level must be positive");
    H1EtBasis out;
    out.X = &X;
    out.level = n;
    const u32 p = lat.p();
    for (const auto& r0 : level1) {
        WittAdele r{&X, {adele_normalize(r0)}};
        std::vector<CurveFun> h;
        Adele d0 = adele_sub(adele_frobenius(r.co[0], 1), r.co[0]);
        auto h0 = find_function(X, S, d0);
        if (!h0) throw math_error("level-1 class is not Frobenius-fixed");
        h.push_back(*h0);
        int m0 = 1;
        m0 = std::max(m0, adele_total_pole(r.co[0]));
        for (const auto& P : S) m0 = std::max(m0, cf_pole_order(*h0, P));
        for (int j = 1; j < n; ++j) {
            const WittRing& W = WittRing::get(p, j + 1);
            // v_j = -(last coordinate of F(r||0) - (r||0) - (h||0)).
            Adele v{&X, {}};
            for (const auto& P : S) {
                WittVector<CurveFun> a = wa_component(r, P, j + 1);
                WittVector<CurveFun> w =
                    witt_sub(W, witt_sub(W, witt_frobenius(a), a),
                             witt_function_pad(X, h, j, j + 1));
                v.at.push_back({P, cf_neg(w.a[static_cast<size_t>(j)])});
            }
            v = adele_normalize(v);
            Int bound =
                ipow_int(Int(p), static_cast<unsigned>((j + 1) * (j + 2) / 2)) * m0;
            for (const auto& P : S)
                if (Int(adele_pole_order(v, P)) > bound)
                    throw math_error("pole growth exceeded the a priori bound");
            // Coordinates of the obstruction in the coherent basis.
            H1Coords co = coordinates_in_basis(X, S, v, B_O);
            FieldVec u;
            for (const auto& e : co.beta) u.push_back(e);
            FieldVec w = sl_inhom_solve(hw_op, u);
            Adele rj = adele_zero(X);
            for (size_t a = 0; a < w.size(); ++a)
                rj = adele_add(rj, adele_scale(w[a], B_O.cls[a]));
            r.co.push_back(rj);
            Adele diff = adele_sub(adele_sub(adele_frobenius(rj, 1), rj), v);
            auto hj = find_function(X, S, diff);
            if (!hj) throw math_error("level lift failed to close");
            h.push_back(*hj);
        }
        // Certify F(r) - r - h coordinatewise regular, full Witt arithmetic.
        const WittRing& W = WittRing::get(p, n);
        for (const auto& P : S) {
            WittVector<CurveFun> a = wa_component(r, P, n);
            WittVector<CurveFun> t = witt_sub(W, witt_sub(W, witt_frobenius(a), a),
                                              witt_function_pad(X, h, n, n));
            for (const auto& c : t.a)
                if (cf_pole_order(c, P) > 0)
                    throw math_error("lifted basis failed its defining congruence");
        }
        out.reps.push_back(std::move(r));
        out.h.push_back(std::move(h));
    }
    return out;
}

/* The coordinate action of the p-power Frobenius on the coherent basis,
 * for a Hasse-Witt matrix in the row convention. */
inline Semilinear hw_operator(FieldLattice& lat, const Matrix<FieldElement>& HW) {
    return sl_make(lat, 1, mat_transpose(HW));
}

/* Solutions in k^g of F(v) = v for the Frobenius action: the operator is
 * restricted to its bijective Fitting component first. Returns F_p-
 * independent coordinate vectors (dimension = stable rank of HW). */
inline std::vector<FieldVec> hw_fixed_vectors(const Semilinear& S) {
    FieldLattice& lat = *S.lat;
    const int d = S.dim();
    SlSplit sp = sl_fitting(S);
    const int s = static_cast<int>(sp.bij_basis.size());
    if (s == 0) return {};
    Matrix<FieldElement> C = sl_cols(lat, sp.bij_basis, d);
    Matrix<FieldElement> Mb = mat_make(s, s, lat.zero(1));
    for (int j = 0; j < s; ++j) {
        FieldVec img = sl_apply(S, sp.bij_basis[static_cast<size_t>(j)]);
        auto sol = mat_solve(C, img);
        if (!sol) throw math_error("bijective component is not stable"); // unreachable
        for (int i = 0; i < s; ++i) Mb.at(i, j) = (*sol)[static_cast<size_t>(i)];
    }
    std::vector<FieldVec> fixed_small = sl_fixed_points(sl_make(lat, S.twist, Mb));
    std::vector<FieldVec> out;
    for (const auto& lam : fixed_small) {
        FieldVec v(static_cast<size_t>(d), lat.zero(1));
        for (int j = 0; j < s; ++j)
            v = vec_add(v, vec_scale(lam[static_cast<size_t>(j)], sp.bij_basis[static_cast<size_t>(j)]));
        if (!vec_eq(sl_apply(S, v), v)) throw math_error("fixed vector failed verification");
        out.push_back(std::move(v));
    }
    return out;
}

/* Full pipeline: certify the matrix against the basis, compute the fixed
 * level-1 classes, then lift to level n. */
inline H1EtBasis compute_h1_from_hw(const Curve& X, int n, const std::vector<Place>& S,
                                    const H1Basis& B_O, const Matrix<FieldElement>& HW) {
    FieldLattice& lat = *X.lat;
    certify_hw(X, B_O, HW);
    Semilinear op = hw_operator(lat, HW);
    std::vector<FieldVec> fixed = hw_fixed_vectors(op);
    std::vector<Adele> level1;
    for (const auto& v : fixed) {
        Adele r0 = adele_zero(X);
        for (size_t a = 0; a < v.size(); ++a) r0 = adele_add(r0, adele_scale(v[a], B_O.cls[a]));
        level1.push_back(std::move(r0));
    }
    return compute_h1(X, S, B_O, op, level1, n);
}

} // namespace asw
