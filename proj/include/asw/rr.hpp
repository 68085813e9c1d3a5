#pragma once

/* Spaces of functions with bounded poles. A divisor is a list of places with
 * integer multiplicities; the space computed here is
 *   L(E) = { f : div(f) + E >= 0 }
 * for an effective E supported on finite places (plus the designated place
 * at infinity for the hyperelliptic model).
 *
 * The basis comes from an ansatz g / Q(x) where Q collects enough powers of
 * x - x0 over each supported x-coordinate and g runs over the monomials
 * x^i y^j of the affine coordinate ring whose pole orders at infinity stay
 * within the allowance. Pole conditions at the finite fiber places are then
 * linear constraints on series coefficients, and the kernel of the
 * constraint matrix gives a deterministic basis. */

#include <utility>

#include "asw/curve.hpp"
#include "asw/matrix.hpp"

namespace asw {

struct DivisorEntry {
    Place P;
    int n = 0;
};

using Divisor = std::vector<DivisorEntry>;

inline int divisor_degree(const Divisor& D) {
    int s = 0;
    for (const auto& e : D) s += e.n;
    return s;
}

/* Merge repeated places and drop zero multiplicities. */
inline Divisor divisor_normalize(const Curve& X, const Divisor& D) {
    Divisor merged;
    for (const auto& e : D) {
        if (e.n == 0) continue;
        bool found = false;
        for (auto& o : merged)
            if (place_eq(X, o.P, e.P)) {
                o.n += e.n;
                found = true;
                break;
            }
        if (!found) merged.push_back(e);
    }
    Divisor out;
    for (auto& e : merged)
        if (e.n != 0) out.push_back(e);
    return out;
}

inline std::vector<CurveFun> rr_space(const Curve& X, const Divisor& E_in) {
    FieldLattice& lat = *X.lat;
    Divisor E = divisor_normalize(X, E_in);
    for (const auto& e : E)
        if (e.n < 0) throw input_error("pole divisor must be effective");

    int n_inf = 0;
    struct Group {
        FieldElement x0;
        std::vector<std::pair<Place, int>> pts;
        int m = 0; // power of x - x0 in the denominator
    };
    std::vector<Group> groups;
    for (const auto& e : E) {
        if (e.P.infinite) {
            if (X.kind != CurveKind::hyperelliptic)
                throw input_error("infinite place is only available on the hyperelliptic model");
            n_inf = e.n;
            continue;
        }
        bool found = false;
        for (auto& g : groups)
            if (g.x0 == e.P.x0) {
                g.pts.push_back({e.P, e.n});
                found = true;
                break;
            }
        if (!found) groups.push_back(Group{e.P.x0, {{e.P, e.n}}, 0});
    }

    FPoly Q = poly_constant(lat.one(1));
    for (auto& g : groups) {
        auto fib = curve_fiber(X, g.x0);
        for (const auto& [P, n] : g.pts) {
            int e = 0;
            for (const auto& [FP, fe] : fib)
                if (place_eq(X, FP, P)) e = fe;
            if (e == 0) throw math_error("divisor place missing from its fiber");
            g.m = std::max(g.m, (n + e - 1) / e);
        }
        FPoly lin = poly_x(lat.zero(1)) - poly_constant(g.x0);
        for (int i = 0; i < g.m; ++i) Q = Q * lin;
    }
    const int degQ = Q.deg();

    // Monomial ansatz with exact pole bounds at infinity. For the
    // hyperelliptic model the two monomial families have poles of distinct
    // parity at infinity, so no cancellation is possible; for the plane
    // model a combination of total degree D has a nonzero leading form of
    // y-degree below dy, which cannot vanish at all dy points at infinity.
    std::vector<std::pair<int, int>> cand; // exponents (i, j) of x^i y^j
    if (X.kind == CurveKind::hyperelliptic) {
        for (int i = 0; 2 * i <= 2 * degQ + n_inf; ++i) cand.push_back({i, 0});
        for (int i = 0; 2 * i + 2 * X.genus + 1 <= 2 * degQ + n_inf; ++i) cand.push_back({i, 1});
    } else {
        for (int j = 0; j < X.dy; ++j)
            for (int i = 0; i + j <= degQ; ++i) cand.push_back({i, j});
    }
    const int ncand = static_cast<int>(cand.size());

    std::vector<std::vector<FieldElement>> rows;
    for (const auto& g : groups) {
        auto fib = curve_fiber(X, g.x0);
        for (const auto& [P, e] : fib) {
            int nP = 0;
            for (const auto& [EP, n] : g.pts)
                if (place_eq(X, EP, P)) nP = n;
            int lo = -e * g.m, hi = -nP; // forbidden exponent window
            if (lo >= hi) continue;
            int pr = hi + 2 * e * (g.m + degQ) + X.dy * (2 * X.genus + X.dy + 2) + 16;
            const LocalChart& ch = curve_chart(X, P, pr);
            LSeries qinv = ls_inv(ls_eval_poly(Q, ch.xs));
            int maxI = 0, maxJ = 0;
            for (auto [i, j] : cand) {
                maxI = std::max(maxI, i);
                maxJ = std::max(maxJ, j);
            }
            std::vector<LSeries> xp{ls_const(lat.one(1), pr)}, yp{ls_const(lat.one(1), pr)};
            for (int i = 1; i <= maxI; ++i) xp.push_back(ls_mul(xp.back(), ch.xs));
            for (int j = 1; j <= maxJ; ++j) yp.push_back(ls_mul(yp.back(), ch.ys));
            size_t row0 = rows.size();
            for (int k = lo; k < hi; ++k)
                rows.emplace_back(static_cast<size_t>(ncand), lat.zero(1));
            for (int c = 0; c < ncand; ++c) {
                auto [i, j] = cand[static_cast<size_t>(c)];
                LSeries s = ls_mul(ls_mul(xp[static_cast<size_t>(i)], yp[static_cast<size_t>(j)]), qinv);
                if (s.prec < hi) throw math_error("pole condition precision shortfall");
                for (int k = lo; k < hi; ++k)
                    rows[row0 + static_cast<size_t>(k - lo)][static_cast<size_t>(c)] =
                        ls_coeff(s, k);
            }
        }
    }

    Matrix<FieldElement> M = mat_from_rows(rows, ncand, lat.zero(1));
    std::vector<CurveFun> basis;
    for (const auto& v : mat_kernel(M)) {
        std::vector<FPoly> numer(static_cast<size_t>(X.dy));
        for (size_t c = 0; c < cand.size(); ++c) {
            if (v[c].is_zero()) continue;
            auto [i, j] = cand[c];
            FPoly& nj = numer[static_cast<size_t>(j)];
            if (static_cast<int>(nj.c.size()) <= i) nj.c.resize(static_cast<size_t>(i) + 1, lat.zero(1));
            nj.c[static_cast<size_t>(i)] = nj.c[static_cast<size_t>(i)] + v[c];
        }
        std::vector<RatFun> coords;
        for (int j = 0; j < X.dy; ++j) {
            numer[static_cast<size_t>(j)].trim();
            coords.push_back(rf_normal(numer[static_cast<size_t>(j)], Q));
        }
        basis.push_back(cf_make(X, coords));
    }
    return basis;
}

/* Check div(f) + E >= 0 by inspecting every place where f could have a pole:
 * the fibers over the x-coordinates of E and of the denominators of f, plus
 * infinity on the hyperelliptic model. */
inline bool rr_contains(const Curve& X, const Divisor& E_in, const CurveFun& f) {
    if (f.is_zero()) return true;
    FieldLattice& lat = *X.lat;
    Divisor E = divisor_normalize(X, E_in);
    auto mult_of = [&](const Place& P) {
        for (const auto& e : E)
            if (place_eq(X, e.P, P)) return e.n;
        return 0;
    };
    std::vector<FieldElement> xs;
    auto add_x = [&](const FieldElement& x0) {
        for (const auto& v : xs)
            if (v == x0) return;
        xs.push_back(x0);
    };
    for (const auto& e : E)
        if (!e.P.infinite) add_x(e.P.x0);
    for (const auto& r : f.c)
        if (!r.is_zero())
            for (const auto& x0 : poly_roots(r.den)) add_x(x0);
    for (const auto& x0 : xs)
        for (const auto& [P, e] : curve_fiber(X, x0))
            if (cf_val(f, P) < -mult_of(P)) return false;
    if (X.kind == CurveKind::hyperelliptic) {
        Place inf = place_infinite(X);
        if (cf_val(f, inf) < -mult_of(inf)) return false;
    } else {
        // Over a common denominator D, the numerator's leading form has
        // y-degree below dy and so cannot vanish at every point at infinity;
        // f is regular there exactly when its total degree stays within
        // deg D.
        FPoly D = poly_constant(lat.one(1));
        for (const auto& r : f.c)
            if (!r.is_zero()) D = poly_divrem(D * r.den, poly_gcd(D, r.den)).first;
        for (size_t j = 0; j < f.c.size(); ++j) {
            const RatFun& r = f.c[j];
            if (r.is_zero()) continue;
            int gdeg = r.num.deg() + D.deg() - r.den.deg() + static_cast<int>(j);
            if (gdeg > D.deg()) return false;
        }
    }
    return true;
}

} // namespace asw
