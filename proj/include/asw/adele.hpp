#pragma once

/* Adele classes modulo everywhere-regular adeles, and the coherent
 * cohomology group H1(X, O_X) in that presentation.
 *
 * A class is stored as its support: finitely many places, each carrying a
 * function giving the principal parts there. Entries that are regular at
 * their place never change the class and are dropped by normalization.
 *
 * The two core routines are linear algebra over the designated local
 * uniformizers:
 *  - find_function: decides triviality of a class and produces the matching
 *    global function (unique up to a constant);
 *  - coordinates_in_basis: writes a class in a fixed basis of H1(X, O_X),
 *    with the function part of the decomposition.
 * The constant ambiguity is resolved by making the function vanish at a
 * designated base point: the place at infinity (hyperelliptic model) or the
 * first point on the line at infinity (plane model); when the function has a
 * pole there, the solver's canonical solution is kept as is. */

#include <algorithm>
#include <optional>

#include "asw/rr.hpp"

namespace asw {

struct Adele {
    const Curve* X = nullptr;
    std::vector<std::pair<Place, CurveFun>> at;
};

inline int place_cmp(const Curve& X, const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return a.infinite ? 1 : -1;
    if (a.infinite) return 0;
    int c = X.lat->cmp(a.x0, b.x0);
    if (c) return c;
    return X.lat->cmp(a.y0, b.y0);
}

/* Sort the support, merge repeated places, drop regular entries. */
inline Adele adele_normalize(const Adele& r_in) {
    const Curve& X = *r_in.X;
    Adele r{&X, r_in.at};
    std::stable_sort(r.at.begin(), r.at.end(), [&](const auto& a, const auto& b) {
        return place_cmp(X, a.first, b.first) < 0;
    });
    Adele out{&X, {}};
    for (auto& e : r.at) {
        if (!out.at.empty() && place_eq(X, out.at.back().first, e.first))
            out.at.back().second = cf_add(out.at.back().second, e.second);
        else
            out.at.push_back(std::move(e));
    }
    Adele red{&X, {}};
    for (auto& e : out.at) {
        if (e.second.is_zero()) continue;
        if (cf_val(e.second, e.first) >= 0) continue;
        red.at.push_back(std::move(e));
    }
    return red;
}

inline Adele adele_zero(const Curve& X) { return Adele{&X, {}}; }

inline Adele adele_delta(const Curve& X, const Place& P, const CurveFun& f) {
    return adele_normalize(Adele{&X, {{P, f}}});
}

inline bool adele_is_zero_repr(const Adele& r) { return r.at.empty(); }

inline Adele adele_add(const Adele& a, const Adele& b) {
    Adele r{a.X, a.at};
    for (const auto& e : b.at) r.at.push_back(e);
    return adele_normalize(r);
}

inline Adele adele_neg(const Adele& a) {
    Adele r = a;
    for (auto& e : r.at) e.second = cf_neg(e.second);
    return r;
}

inline Adele adele_sub(const Adele& a, const Adele& b) { return adele_add(a, adele_neg(b)); }

inline Adele adele_scale(const FieldElement& k, const Adele& a) {
    Adele r = a;
    for (auto& e : r.at) e.second = cf_scale(rf_const(k), e.second);
    return adele_normalize(r);
}

/* Componentwise p^k-th power. */
inline Adele adele_frobenius(const Adele& a, int k = 1) {
    Adele r = a;
    for (auto& e : r.at) e.second = cf_pfrob(e.second, k);
    return adele_normalize(r);
}

inline bool adele_eq_repr(const Adele& a, const Adele& b) {
    Adele x = adele_normalize(a), y = adele_normalize(b);
    if (x.at.size() != y.at.size()) return false;
    for (size_t i = 0; i < x.at.size(); ++i) {
        if (!place_eq(*a.X, x.at[i].first, y.at[i].first)) return false;
        if (!cf_eq(x.at[i].second, y.at[i].second)) return false;
    }
    return true;
}

// ---- constant normalization at the designated base point ----

/* Value of f at the base point, or nothing if f has a pole there. */
inline std::optional<FieldElement> cf_base_value(const Curve& X, const CurveFun& f) {
    FieldLattice& lat = *X.lat;
    if (f.is_zero()) return lat.zero(1);
    if (X.kind == CurveKind::hyperelliptic) {
        Place inf = place_infinite(X);
        if (cf_val(f, inf) < 0) return std::nullopt;
        return ls_coeff(cf_expand(f, inf, 1), 0);
    }
    // Plane model: evaluate at the first point on the line at infinity via
    // leading forms over a common denominator.
    FPoly D = poly_constant(lat.one(1));
    for (const auto& r : f.c)
        if (!r.is_zero()) D = poly_divrem(D * r.den, poly_gcd(D, r.den)).first;
    int M = -1;
    for (size_t j = 0; j < f.c.size(); ++j)
        if (!f.c[j].is_zero())
            M = std::max(M, f.c[j].num.deg() + D.deg() - f.c[j].den.deg() + static_cast<int>(j));
    if (M > D.deg()) return std::nullopt;
    if (M < D.deg()) return lat.zero(1);
    auto zeta = poly_roots(curve_top_form(X));
    if (zeta.empty()) throw math_error("no point at infinity found");
    FieldElement num = lat.zero(1);
    for (size_t j = 0; j < f.c.size(); ++j) {
        const RatFun& r = f.c[j];
        if (r.is_zero()) continue;
        if (r.num.deg() + D.deg() - r.den.deg() + static_cast<int>(j) == M)
            num = num + r.num.lead() * lat.pow(zeta[0], Int(j));
    }
    return num / D.lead();
}

/* Kill the constant ambiguity: subtract the base-point value when defined. */
inline CurveFun cf_normalize_constant(const Curve& X, const CurveFun& f) {
    auto v = cf_base_value(X, f);
    if (!v || v->is_zero()) return f;
    return cf_sub(f, cf_from_rf(X, rf_const(*v)));
}

// ---- principal parts and the linear systems ----

/* Coefficients of t^k, k in [-s, 0), of f's expansion at P. */
inline std::vector<FieldElement> principal_part(const CurveFun& f, const Place& P, int s) {
    FieldLattice& lat = *f.X->lat;
    std::vector<FieldElement> out(static_cast<size_t>(std::max(0, s)), lat.zero(1));
    if (s <= 0 || f.is_zero()) return out;
    LSeries e = cf_expand(f, P, 0);
    for (int k = -s; k < 0; ++k) out[static_cast<size_t>(k + s)] = ls_coeff(e, k);
    return out;
}

/* A global function matching the principal parts of r at every place of S,
 * or nothing when the class of r in H1(X, O_X) is nonzero. The result is
 * normalized to vanish at the base point. */
inline std::optional<CurveFun> find_function(const Curve& X, const std::vector<Place>& S,
                                             const Adele& r_in) {
    FieldLattice& lat = *X.lat;
    Adele r = adele_normalize(r_in);
    for (const auto& [P, f] : r.at) {
        bool inS = false;
        for (const auto& Q : S) inS = inS || place_eq(X, P, Q);
        if (!inS) throw input_error("adele support escapes the designated point set");
    }
    struct Cond {
        Place P;
        int s;
        const CurveFun* rP;
    };
    std::vector<Cond> conds;
    Divisor E;
    for (const auto& [P, f] : r.at) {
        int s = -cf_val(f, P);
        conds.push_back({P, s, &f});
        E.push_back({P, s});
    }
    std::vector<CurveFun> basis = rr_space(X, E);
    std::vector<std::vector<FieldElement>> cols;
    for (const auto& b : basis) {
        std::vector<FieldElement> col;
        for (const auto& c : conds)
            for (const auto& v : principal_part(b, c.P, c.s)) col.push_back(v);
        cols.push_back(std::move(col));
    }
    std::vector<FieldElement> rhs;
    for (const auto& c : conds)
        for (const auto& v : principal_part(*c.rP, c.P, c.s)) rhs.push_back(v);
    int nrows = static_cast<int>(rhs.size());
    Matrix<FieldElement> M = mat_make(nrows, static_cast<int>(basis.size()), lat.zero(1));
    for (int j = 0; j < M.cols; ++j)
        for (int i = 0; i < nrows; ++i) M.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    auto sol = mat_solve(M, rhs);
    if (!sol) return std::nullopt;
    CurveFun h = cf_zero(X);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!(*sol)[i].is_zero()) h = cf_add(h, cf_scale(rf_const((*sol)[i]), basis[i]));
    h = cf_normalize_constant(X, h);
    for (const auto& c : conds) {
        CurveFun res = cf_sub(*c.rP, h);
        if (!res.is_zero() && cf_val(res, c.P) < 0)
            throw math_error("principal part mismatch in the returned function");
    }
    return h;
}

// ---- H1(X, O_X) bases from non-special systems of points ----

/* The global function restricting to 1/t at P, for the designated local
 * uniformizer t of that place. */
inline CurveFun place_uniformizer_inverse(const Curve& X, const Place& P) {
    FieldLattice& lat = *X.lat;
    if (P.infinite) {
        // t = x^g / y, so 1/t = y / x^g.
        FPoly den = poly_constant(lat.one(1));
        FPoly xp = poly_x(lat.zero(1));
        for (int i = 0; i < X.genus; ++i) den = den * xp;
        return cf_make(X, {rf_const(lat.zero(1)), rf_normal(poly_constant(lat.one(1)), den)});
    }
    FieldElement fyv = curve_eval2(X.fy, P.x0, P.y0);
    if (!fyv.is_zero())
        return cf_from_rf(X, rf_normal(poly_constant(lat.one(1)),
                                       poly_x(lat.zero(1)) - poly_constant(P.x0)));
    // Ramified over the x-line: t = y - y0.
    CurveFun t = cf_sub(cf_y(X), cf_from_rf(X, rf_const(P.y0)));
    return cf_inv(t);
}

struct H1Basis {
    const Curve* X = nullptr;
    std::vector<Place> pts;
    std::vector<CurveFun> invunif; // 1/t_i as global functions
    std::vector<Adele> cls;        // basis classes (1/t_i) delta_i
};

inline bool is_nonspecial(const Curve& X, const std::vector<Place>& pts) {
    Divisor E;
    for (const auto& P : pts) E.push_back({P, 1});
    return rr_space(X, E).size() == 1;
}

inline H1Basis h1_basis_from_points(const Curve& X, const std::vector<Place>& pts) {
    if (static_cast<int>(pts.size()) != X.genus)
        throw input_error("a basis needs exactly genus many points");
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (place_eq(X, pts[i], pts[j])) throw input_error("basis points must be distinct");
    if (!is_nonspecial(X, pts)) throw input_error("special system of points rejected");
    H1Basis B;
    B.X = &X;
    B.pts = pts;
    for (const auto& P : pts) {
        CurveFun u = place_uniformizer_inverse(X, P);
        B.invunif.push_back(u);
        B.cls.push_back(adele_delta(X, P, u));
    }
    return B;
}

// ---- coordinates in a basis ----

struct H1Coords {
    std::vector<FieldElement> beta;
    CurveFun h;
};

/* Write the class of r0 as sum beta_j * (span class j) + (principal parts
 * of h). The residual r0 - sum - h is regular at every place of S. Throws
 * when r0's class is outside the span. */
inline H1Coords coordinates_in_adele_span(const Curve& X, const std::vector<Place>& S_in,
                                          const Adele& r0_in, const std::vector<Adele>& cls) {
    FieldLattice& lat = *X.lat;
    Adele r0 = adele_normalize(r0_in);
    const int g = static_cast<int>(cls.size());
    // Working point set: S plus every support point involved.
    std::vector<Place> S;
    auto add_pt = [&](const Place& P) {
        for (const auto& Q : S)
            if (place_eq(X, Q, P)) return;
        S.push_back(P);
    };
    for (const auto& P : S_in) add_pt(P);
    for (const auto& [P, f] : r0.at) add_pt(P);
    for (const auto& b : cls)
        for (const auto& [P, f] : b.at) add_pt(P);
    std::sort(S.begin(), S.end(),
              [&](const Place& a, const Place& b) { return place_cmp(X, a, b) < 0; });

    auto val_at = [&](const Adele& a, const Place& P) {
        for (const auto& [Q, f] : a.at)
            if (place_eq(X, Q, P)) return cf_val(f, P);
        return 0; // absent component: regular
    };
    auto part_at = [&](const Adele& a, const Place& P, int s) {
        for (const auto& [Q, f] : a.at)
            if (place_eq(X, Q, P)) return principal_part(f, P, s);
        return std::vector<FieldElement>(static_cast<size_t>(s), lat.zero(1));
    };

    std::vector<int> slots;
    Divisor E;
    for (const auto& P : S) {
        int m = std::min(0, val_at(r0, P));
        for (const auto& b : cls) m = std::min(m, val_at(b, P));
        slots.push_back(-m);
        if (m < 0) E.push_back({P, -m});
    }
    std::vector<CurveFun> basis = rr_space(X, E);
    const int nL = static_cast<int>(basis.size());
    int nrows = 0;
    for (int s : slots) nrows += s;
    Matrix<FieldElement> M = mat_make(nrows, g + nL, lat.zero(1));
    std::vector<FieldElement> rhs;
    int row = 0;
    for (size_t i = 0; i < S.size(); ++i) {
        int s = slots[i];
        if (s == 0) continue;
        for (int j = 0; j < g; ++j) {
            auto pp = part_at(cls[static_cast<size_t>(j)], S[i], s);
            for (int k = 0; k < s; ++k) M.at(row + k, j) = pp[static_cast<size_t>(k)];
        }
        for (int j = 0; j < nL; ++j) {
            auto pp = principal_part(basis[static_cast<size_t>(j)], S[i], s);
            for (int k = 0; k < s; ++k) M.at(row + k, g + j) = pp[static_cast<size_t>(k)];
        }
        auto pr = part_at(r0, S[i], s);
        for (int k = 0; k < s; ++k) rhs.push_back(pr[static_cast<size_t>(k)]);
        row += s;
    }
    auto sol = mat_solve(M, rhs);
    if (!sol) throw math_error("class is not spanned by the given basis");
    H1Coords out;
    for (int j = 0; j < g; ++j) out.beta.push_back((*sol)[static_cast<size_t>(j)]);
    CurveFun h = cf_zero(X);
    for (int j = 0; j < nL; ++j)
        if (!(*sol)[static_cast<size_t>(g + j)].is_zero())
            h = cf_add(h, cf_scale(rf_const((*sol)[static_cast<size_t>(g + j)]),
                                   basis[static_cast<size_t>(j)]));
    out.h = cf_normalize_constant(X, h);
    // Residual regularity across S certifies the decomposition.
    auto comp_at = [&](const Adele& a, const Place& P) {
        for (const auto& [Q, f] : a.at)
            if (place_eq(X, Q, P)) return f;
        return cf_zero(X);
    };
    for (const auto& P : S) {
        CurveFun res = cf_sub(comp_at(r0, P), out.h);
        for (int j = 0; j < g; ++j)
            res = cf_sub(res, cf_scale(rf_const(out.beta[static_cast<size_t>(j)]),
                                       comp_at(cls[static_cast<size_t>(j)], P)));
        if (!res.is_zero() && cf_val(res, P) < 0)
            throw math_error("decomposition residual has a pole at a designated point");
    }
    return out;
}

inline H1Coords coordinates_in_basis(const Curve& X, const std::vector<Place>& S,
                                     const Adele& r0, const H1Basis& B) {
    return coordinates_in_adele_span(X, S, r0, B.cls);
}

/* Embed a global function as the adele with component f at every place of
 * S; only the places where f has a pole survive normalization. */
inline Adele adele_of_function(const Curve& X, const std::vector<Place>& S, const CurveFun& f) {
    Adele r{&X, {}};
    for (const auto& P : S) r.at.push_back({P, f});
    return adele_normalize(r);
}

/* Mandatory input certification: row i of HW must be the coordinate vector
 * of the p-power Frobenius image of basis class i. */
inline void certify_hw(const Curve& X, const H1Basis& B, const Matrix<FieldElement>& HW) {
    const int g = static_cast<int>(B.cls.size());
    if (HW.rows != g || HW.cols != g)
        throw input_error("matrix shape does not match the basis size");
    for (int i = 0; i < g; ++i) {
        Adele Fb = adele_frobenius(B.cls[static_cast<size_t>(i)], 1);
        H1Coords co = coordinates_in_basis(X, B.pts, Fb, B);
        for (int j = 0; j < g; ++j)
            if (!(co.beta[static_cast<size_t>(j)] == HW.at(i, j)))
                throw math_error("matrix does not describe the Frobenius action in this basis");
    }
}

} // namespace asw
