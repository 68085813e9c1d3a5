#pragma once

/* Smooth projective curve models over the algebraic closure of F_p, given by
 * an affine equation F(x, y) = 0 that is monic in y:
 *  - hyperelliptic: y^2 = f(x), p odd, f monic squarefree of odd degree
 *    2g + 1; a single point at infinity with uniformizer x^g / y.
 *  - plane: F of total degree d, monic of degree d in y, with the extra
 *    requirements that the degree-d form evaluated on the line at infinity,
 *    F_d(1, y), is squarefree of degree d with nonzero constant term. That
 *    pins d distinct smooth points at infinity where both x and y have
 *    simple poles, so functions regular at infinity are exactly the spans of
 *    x^i y^j with i + j bounded by the allowed pole order.
 * Validation rejects affine singular points by locating the common zeros of
 * F and its partials through a resultant in y (computed by evaluation and
 * interpolation, which is sound because F is monic in y).
 *
 * Functions on the curve are kept in reduced coordinates with respect to the
 * basis 1, y, ..., y^{dy-1} over the rational function field in x, so zero
 * tests and equality are exact. */

#include <map>
#include <optional>
#include <string>

#include "asw/ratfun.hpp"
#include "asw/series.hpp"
#include "asw/solve.hpp"

namespace asw {

enum class CurveKind { hyperelliptic, plane };

struct LocalChart {
    LSeries xs, ys; // expansions of x and y in the local uniformizer
    int e = 1;      // ramification index of the x-coordinate map
};

struct Curve {
    FieldLattice* lat = nullptr;
    CurveKind kind = CurveKind::hyperelliptic;
    int dy = 0;    // y-degree of the defining equation
    int genus = 0;
    int pdeg = 0;  // total degree (plane models)
    FPoly hf;      // right-hand side f (hyperelliptic models)
    std::vector<FPoly> fc; // fc[j] is the x-polynomial coefficient of y^j
    std::vector<FPoly> fy; // coefficients of dF/dy
    std::vector<FPoly> fx; // coefficients of dF/dx

    mutable std::vector<RatFun> yp_coords; // y^p reduced mod F, lazily built
    mutable std::map<std::string, LocalChart> chart_cache;
};

struct CurveFun {
    const Curve* X = nullptr;
    std::vector<RatFun> c; // coordinates in 1, y, ..., y^{dy-1}

    bool is_zero() const {
        for (const auto& r : c)
            if (!r.is_zero()) return false;
        return true;
    }
};

struct Place {
    bool infinite = false;
    FieldElement x0, y0; // finite places only
};

// ---- construction and validation ----

namespace detail {

inline void curve_fill_partials(Curve& X) {
    const FieldElement like = X.lat->zero(1);
    X.fy.assign(static_cast<size_t>(X.dy), FPoly{});
    for (int j = 1; j <= X.dy; ++j)
        X.fy[static_cast<size_t>(j - 1)] =
            X.lat->from_int(j) * X.fc[static_cast<size_t>(j)];
    X.fx.clear();
    for (const auto& f : X.fc) X.fx.push_back(poly_derivative(f, like));
}

/* Scalar resultant of univariate polynomials by the Euclidean recursion. */
inline FieldElement res_scalar(FPoly f, FPoly g, FieldLattice& lat) {
    if (f.is_zero() || g.is_zero()) return lat.zero(1);
    FieldElement res = lat.one(1);
    if (f.deg() == 0) return lat.pow(f.c[0], Int(g.deg()));
    for (;;) {
        if (g.deg() == 0) return res * lat.pow(g.c[0], Int(f.deg()));
        if (f.deg() < g.deg()) {
            if ((f.deg() & 1) && (g.deg() & 1)) res = -res;
            std::swap(f, g);
            continue;
        }
        FPoly r = poly_rem(f, g);
        if (r.is_zero()) return lat.zero(1);
        if ((f.deg() & 1) && (g.deg() & 1)) res = -res;
        res = res * lat.pow(g.lead(), Int(f.deg() - r.deg()));
        f = std::move(g);
        g = std::move(r);
    }
}

inline FPoly lagrange_interpolate(FieldLattice& lat, const std::vector<FieldElement>& xs,
                                  const std::vector<FieldElement>& vs) {
    FPoly acc;           // interpolant so far
    FPoly base = poly_constant(lat.one(1)); // prod (x - xs[i]) over processed points
    for (size_t i = 0; i < xs.size(); ++i) {
        FieldElement cur = poly_eval(acc, xs[i]);
        FieldElement bv = poly_eval(base, xs[i]);
        acc = acc + ((vs[i] - cur) * lat.inv(bv)) * base;
        base = base * (poly_x(lat.zero(1)) - poly_constant(xs[i]));
    }
    return acc;
}

/* The i-th element of the field with p^m elements, in a fixed enumeration. */
inline FieldElement field_point(FieldLattice& lat, int m, u64 i) {
    std::vector<u32> digits(static_cast<size_t>(m), 0);
    for (int k = 0; k < m; ++k) {
        digits[static_cast<size_t>(k)] = static_cast<u32>(i % lat.p());
        i /= lat.p();
    }
    return lat.make(m, digits);
}

} // namespace detail

/* The fiber equation F(x0, y) as a univariate polynomial in y. */
inline FPoly curve_fiber_poly(const Curve& X, const FieldElement& x0) {
    FPoly r;
    for (size_t j = 0; j < X.fc.size(); ++j) r.c.push_back(poly_eval(X.fc[j], x0));
    r.trim();
    return r;
}

inline FieldElement curve_eval2(const std::vector<FPoly>& coeffs, const FieldElement& x0,
                                const FieldElement& y0) {
    FieldElement acc = ring_zero_like(x0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * y0 + poly_eval(*it, x0);
    return acc;
}

/* Resultant in y of F and another y-polynomial with x-polynomial
 * coefficients, via evaluation at enough sample points and interpolation. */
inline FPoly curve_resultant_y(const Curve& X, const std::vector<FPoly>& g) {
    FieldLattice& lat = *X.lat;
    int degx_f = 0, degx_g = 0, degy_g = static_cast<int>(g.size()) - 1;
    for (const auto& f : X.fc) degx_f = std::max(degx_f, f.deg());
    for (const auto& f : g) degx_g = std::max(degx_g, f.deg());
    if (degy_g < 0) return FPoly{};
    int bound = X.dy * degx_g + degy_g * degx_f + 1;
    int m = 1;
    while (ipow_u64(lat.p(), static_cast<unsigned>(m)) <= static_cast<u64>(bound) + 1) ++m;
    std::vector<FieldElement> xs, vs;
    for (int i = 0; i <= bound; ++i) {
        FieldElement x0 = detail::field_point(lat, m, static_cast<u64>(i));
        FPoly fy0 = curve_fiber_poly(X, x0);
        FPoly gy0;
        for (const auto& f : g) gy0.c.push_back(poly_eval(f, x0));
        gy0.trim();
        xs.push_back(x0);
        vs.push_back(detail::res_scalar(fy0, gy0, lat));
    }
    return detail::lagrange_interpolate(lat, xs, vs);
}

inline Curve curve_hyperelliptic(FieldLattice& lat, FPoly f) {
    if (lat.p() == 2) throw input_error("hyperelliptic model needs odd characteristic");
    f.trim();
    if (f.is_zero() || f.deg() < 1 || f.deg() % 2 == 0)
        throw input_error("hyperelliptic right-hand side must have odd degree");
    if (!(f.lead() == lat.one(1))) throw input_error("hyperelliptic right-hand side must be monic");
    FPoly d = poly_derivative(f, lat.zero(1));
    if (d.is_zero() || poly_gcd(f, d).deg() > 0)
        throw input_error("hyperelliptic right-hand side must be squarefree");
    Curve X;
    X.lat = &lat;
    X.kind = CurveKind::hyperelliptic;
    X.dy = 2;
    X.genus = (f.deg() - 1) / 2;
    X.hf = f;
    X.fc = {-f, FPoly{}, poly_constant(lat.one(1))};
    detail::curve_fill_partials(X);
    return X;
}

/* Degree-d part of the defining polynomial, dehomogenized along x: the
 * one-variable polynomial F_d(1, y) whose roots are the points at infinity. */
inline FPoly curve_top_form(const Curve& X) {
    FPoly top;
    for (int j = 0; j <= X.pdeg; ++j) {
        const FPoly& f = X.fc[static_cast<size_t>(j)];
        top.c.push_back(f.deg() == X.pdeg - j ? f.lead() : X.lat->zero(1));
    }
    top.trim();
    return top;
}

inline Curve curve_plane(FieldLattice& lat, std::vector<FPoly> coeffs) {
    for (auto& f : coeffs) f.trim();
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 2) throw input_error("plane model must have y-degree at least 2");
    if (coeffs.back().deg() != 0 || !(coeffs.back().c[0] == lat.one(1)))
        throw input_error("plane model must be monic of full degree in y");
    for (int j = 0; j <= d; ++j)
        if (!coeffs[static_cast<size_t>(j)].is_zero() &&
            coeffs[static_cast<size_t>(j)].deg() > d - j)
            throw input_error("plane model exceeds its total degree");
    Curve X;
    X.lat = &lat;
    X.kind = CurveKind::plane;
    X.dy = d;
    X.pdeg = d;
    X.genus = (d - 1) * (d - 2) / 2;
    X.fc = std::move(coeffs);
    detail::curve_fill_partials(X);
    // Behavior along the line at infinity: the top form F_d(1, y) must be
    // squarefree of degree d with nonzero constant term.
    FPoly top = curve_top_form(X);
    if (top.deg() != d || top.c[0].is_zero())
        throw input_error("plane model is not transverse to the line at infinity");
    FPoly topd = poly_derivative(top, lat.zero(1));
    if (topd.is_zero() || poly_gcd(top, topd).deg() > 0)
        throw input_error("plane model has a singular point at infinity");
    // Affine smoothness: no common zero of F, dF/dx, dF/dy.
    FPoly resy = curve_resultant_y(X, X.fy);
    if (resy.is_zero()) throw input_error("plane model is singular (repeated component)");
    for (const FieldElement& x0 : poly_roots(resy)) {
        FPoly fib = curve_fiber_poly(X, x0);
        FPoly fyb;
        for (const auto& f : X.fy) fyb.c.push_back(poly_eval(f, x0));
        fyb.trim();
        FPoly g = poly_gcd(fib, fyb);
        for (const FieldElement& y0 : poly_roots(g))
            if (curve_eval2(X.fx, x0, y0).is_zero())
                throw input_error("plane model has an affine singular point");
    }
    return X;
}

// ---- function arithmetic ----

inline CurveFun cf_make(const Curve& X, std::vector<RatFun> coords) {
    if (static_cast<int>(coords.size()) > X.dy) throw input_error("too many function coordinates");
    coords.resize(static_cast<size_t>(X.dy), rf_const(X.lat->zero(1)));
    return CurveFun{&X, std::move(coords)};
}

inline CurveFun cf_zero(const Curve& X) { return cf_make(X, {}); }

inline CurveFun cf_from_rf(const Curve& X, RatFun r) { return cf_make(X, {std::move(r)}); }

inline CurveFun cf_one(const Curve& X) { return cf_from_rf(X, rf_const(X.lat->one(1))); }

inline CurveFun cf_x(const Curve& X) { return cf_from_rf(X, rf_x(*X.lat)); }

inline CurveFun cf_y(const Curve& X) {
    return cf_make(X, {rf_const(X.lat->zero(1)), rf_const(X.lat->one(1))});
}

/* The defining polynomial as a monic y-polynomial over rational functions. */
inline Poly<RatFun> curve_fpoly(const Curve& X) {
    Poly<RatFun> f;
    for (const auto& g : X.fc) f.c.push_back(RatFun{g, poly_constant(X.lat->one(1))});
    f.trim();
    return f;
}

inline Poly<RatFun> cf_to_poly(const CurveFun& g) {
    Poly<RatFun> f;
    f.c = g.c;
    f.trim();
    return f;
}

inline CurveFun cf_from_poly(const Curve& X, Poly<RatFun> f) {
    if (f.deg() >= X.dy) f = poly_rem(std::move(f), curve_fpoly(X));
    std::vector<RatFun> coords = std::move(f.c);
    return cf_make(X, std::move(coords));
}

inline CurveFun cf_add(const CurveFun& a, const CurveFun& b) {
    CurveFun r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    return r;
}

inline CurveFun cf_neg(const CurveFun& a) {
    CurveFun r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline CurveFun cf_sub(const CurveFun& a, const CurveFun& b) { return cf_add(a, cf_neg(b)); }

inline CurveFun cf_scale(const RatFun& s, const CurveFun& a) {
    CurveFun r = a;
    for (auto& x : r.c) x = s * x;
    return r;
}

inline CurveFun cf_mul(const CurveFun& a, const CurveFun& b) {
    return cf_from_poly(*a.X, cf_to_poly(a) * cf_to_poly(b));
}

inline CurveFun cf_inv(const CurveFun& a) {
    if (a.is_zero()) throw math_error("inverse of the zero function");
    auto [g, u, v] = poly_xgcd(cf_to_poly(a), curve_fpoly(*a.X));
    if (g.deg() != 0) throw math_error("function is a zero divisor; the model is not irreducible");
    return cf_from_poly(*a.X, ring_inv(g.c[0]) * u);
}

inline CurveFun cf_div(const CurveFun& a, const CurveFun& b) { return cf_mul(a, cf_inv(b)); }

inline bool cf_eq(const CurveFun& a, const CurveFun& b) {
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}

/* Deterministic rendering as a polynomial in y with rational coefficients in
 * x, ascending y-powers, zero coefficients skipped. */
inline std::string cf_to_string(const CurveFun& f) {
    std::string out;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        std::string cs = rf_to_string(f.c[i]);
        std::string term;
        if (i == 0) {
            term = cs;
        } else {
            std::string ys = (i == 1) ? "y" : "y^" + std::to_string(i);
            term = (cs == "1") ? ys : "(" + cs + ")*" + ys;
        }
        out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

/* One application of the p-power Frobenius to a function. */
inline CurveFun cf_frob(const CurveFun& g) {
    const Curve& X = *g.X;
    FieldLattice& lat = *X.lat;
    if (X.yp_coords.empty()) {
        Poly<RatFun> y;
        y.c = {rf_const(lat.zero(1)), rf_const(lat.one(1))};
        Poly<RatFun> yp = poly_powmod(y, Int(lat.p()), curve_fpoly(X), rf_const(lat.zero(1)));
        yp.c.resize(static_cast<size_t>(X.dy), rf_const(lat.zero(1)));
        X.yp_coords = yp.c;
    }
    CurveFun yp = cf_make(X, X.yp_coords);
    CurveFun acc = cf_zero(X);
    for (int j = X.dy - 1; j >= 0; --j) {
        acc = cf_mul(acc, yp);
        acc = cf_add(acc, cf_from_rf(X, rf_ppow(g.c[static_cast<size_t>(j)], 1)));
    }
    return acc;
}

inline CurveFun cf_pfrob(CurveFun g, int k) {
    if (k < 0) throw input_error("negative Frobenius power of a function");
    for (int i = 0; i < k; ++i) g = cf_frob(g);
    return g;
}

/* Evaluate an ordinary polynomial at a function, by Horner. */
inline CurveFun cf_polyval(const FPoly& f, const CurveFun& at) {
    const Curve& X = *at.X;
    CurveFun r = cf_zero(X);
    for (size_t i = f.c.size(); i-- > 0;)
        r = cf_add(cf_mul(r, at), cf_from_rf(X, rf_const(f.c[i])));
    return r;
}

/* Pullback of g along x -> xi, y -> eta. The caller is responsible for the
 * image pair satisfying the curve equation; the result is reduced through
 * ordinary function arithmetic. */
inline CurveFun cf_subst(const CurveFun& g, const CurveFun& xi, const CurveFun& eta) {
    const Curve& X = *g.X;
    if (xi.X != &X || eta.X != &X) throw input_error("substitution images on a different curve");
    CurveFun out = cf_zero(X);
    CurveFun ypow = cf_one(X);
    for (size_t i = 0; i < g.c.size(); ++i) {
        const RatFun& r = g.c[i];
        if (!r.is_zero())
            out = cf_add(out, cf_mul(cf_div(cf_polyval(r.num, xi), cf_polyval(r.den, xi)), ypow));
        if (i + 1 < g.c.size()) ypow = cf_mul(ypow, eta);
    }
    return out;
}

/* The scalar a constant function equals, if it is one; the representation
 * is a normal form, so this is a structural test, not an evaluation. */
inline std::optional<FieldElement> cf_constant_value(const CurveFun& g) {
    if (g.is_zero()) return g.X->lat->zero(1);
    for (size_t i = 1; i < g.c.size(); ++i)
        if (!g.c[i].is_zero()) return std::nullopt;
    const RatFun& r = g.c.at(0);
    if (r.den.deg() != 0 || r.num.deg() != 0) return std::nullopt;
    return r.num.c.at(0);
}

/* Value at a place; nullopt marks a pole. */
inline std::optional<FieldElement> cf_value_at(const CurveFun& g, const Place& P) {
    if (g.is_zero()) return g.X->lat->zero(1);
    LSeries s = cf_expand(g, P, 1);
    if (ls_is_zero(s)) return g.X->lat->zero(1);
    if (ls_val(s) < 0) return std::nullopt;
    return ls_coeff(s, 0);
}

// Ring interface so generic polynomial and Witt arithmetic runs on functions.
inline CurveFun operator+(const CurveFun& a, const CurveFun& b) { return cf_add(a, b); }
inline CurveFun operator-(const CurveFun& a, const CurveFun& b) { return cf_sub(a, b); }
inline CurveFun operator-(const CurveFun& a) { return cf_neg(a); }
inline CurveFun operator*(const CurveFun& a, const CurveFun& b) { return cf_mul(a, b); }
inline bool operator==(const CurveFun& a, const CurveFun& b) { return cf_eq(a, b); }
inline bool operator!=(const CurveFun& a, const CurveFun& b) { return !cf_eq(a, b); }
inline CurveFun ring_zero_like(const CurveFun& x) { return cf_zero(*x.X); }
inline CurveFun ring_one_like(const CurveFun& x) { return cf_one(*x.X); }
inline bool ring_is_zero(const CurveFun& x) { return x.is_zero(); }
inline CurveFun ring_inv(const CurveFun& x) { return cf_inv(x); }
inline u32 ring_char(const CurveFun& x) { return x.X->lat->p(); }
inline CurveFun ring_from_int(const CurveFun& like, const Int& v) {
    Int r = v % like.X->lat->p();
    if (r < 0) r += like.X->lat->p();
    return cf_from_rf(*like.X, rf_const(like.X->lat->from_int(r.convert_to<long long>())));
}
inline CurveFun ring_frob(const CurveFun& x) { return cf_frob(x); }

// ---- places and local charts ----

inline Place place_finite(const Curve& X, const FieldElement& x0, const FieldElement& y0) {
    if (!curve_eval2(X.fc, x0, y0).is_zero()) throw input_error("point is not on the curve");
    // Store coordinates in their minimal subfields so place keys are canonical.
    return Place{false, X.lat->reduce_min(x0), X.lat->reduce_min(y0)};
}

inline Place place_infinite(const Curve& X) {
    if (X.kind != CurveKind::hyperelliptic)
        throw input_error("only the hyperelliptic model has a designated place at infinity");
    return Place{true, X.lat->zero(1), X.lat->zero(1)};
}

inline std::string place_key(const Curve& X, const Place& P) {
    if (P.infinite) return "inf";
    FieldLattice& lat = *X.lat;
    return lat.to_string(P.x0) + "|" + lat.to_string(P.y0);
}

inline bool place_eq(const Curve& X, const Place& P, const Place& Q) {
    if (P.infinite != Q.infinite) return false;
    if (P.infinite) return true;
    (void)X;
    return P.x0 == Q.x0 && P.y0 == Q.y0;
}

namespace detail {

/* Newton-solve G(w) = 0 for a series w with w(0) = w0, where G is a
 * y-polynomial with x-polynomial coefficients evaluated along xs and
 * dG/dy(xs(0), w0) is a unit. */
inline LSeries chart_newton(const Curve& X, const LSeries& xs, const FieldElement& w0, int prec) {
    FieldLattice& lat = *X.lat;
    std::vector<LSeries> coef, dcoef;
    for (const auto& f : X.fc) coef.push_back(ls_eval_poly(f, xs));
    for (const auto& f : X.fy) dcoef.push_back(ls_eval_poly(f, xs));
    auto horner = [&](const std::vector<LSeries>& cs, const LSeries& w) {
        LSeries acc = ls_zero(lat, prec);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it)
            acc = ls_add(ls_mul(acc, w), *it);
        return acc;
    };
    LSeries w = ls_const(w0, 1);
    int cur = 1;
    while (cur < prec) {
        cur = std::min(2 * cur, prec);
        // Lift the known digits; the Newton update then corrects the rest.
        LSeries wc = w.c.empty() ? ls_zero(lat, cur) : ls_make(lat, w.val, w.c, cur);
        LSeries num = horner(coef, wc);
        LSeries den = horner(dcoef, wc);
        w = ls_truncate(ls_sub(wc, ls_div(num, den)), cur);
    }
    LSeries resid = horner(coef, w);
    if (!ls_is_zero(ls_truncate(resid, prec)))
        throw math_error("local chart iteration failed to converge");
    return w;
}

} // namespace detail

/* Expansions of x and y at P in the designated uniformizer: x - x0 at finite
 * places where dF/dy does not vanish, y - y0 at finite ramification points,
 * and x^g / y at hyperelliptic infinity. */
inline const LocalChart& curve_chart(const Curve& X, const Place& P, int prec) {
    FieldLattice& lat = *X.lat;
    prec = std::max(prec, X.dy + 2); // enough room to read off ramification
    std::string key = place_key(X, P) + "#" + std::to_string(prec);
    auto it = X.chart_cache.find(key);
    if (it != X.chart_cache.end()) return it->second;
    LocalChart ch;
    if (!P.infinite) {
        FieldElement fyv = curve_eval2(X.fy, P.x0, P.y0);
        if (!fyv.is_zero()) {
            // t = x - x0, y expands as a power series.
            std::vector<FieldElement> xc{P.x0, lat.one(1)};
            ch.xs = ls_make(lat, 0, xc, prec);
            ch.ys = detail::chart_newton(X, ch.xs, P.y0, prec);
            ch.e = 1;
        } else {
            FieldElement fxv = curve_eval2(X.fx, P.x0, P.y0);
            if (fxv.is_zero()) throw math_error("curve is singular at the requested point");
            // t = y - y0, x expands as a power series; swap the roles of the
            // variables by viewing F as a polynomial in x along y = y0 + t.
            std::vector<FieldElement> yc{P.y0, lat.one(1)};
            ch.ys = ls_make(lat, 0, yc, prec);
            // Build the x-polynomial coefficients of F(x, y0 + t) as series
            // and run a bespoke Newton iteration in x.
            int degx = 0;
            for (const auto& f : X.fc) degx = std::max(degx, f.deg());
            std::vector<LSeries> coef(static_cast<size_t>(degx) + 1, ls_zero(lat, prec));
            for (size_t j = 0; j < X.fc.size(); ++j) {
                LSeries yj = ls_pow(ch.ys, static_cast<int>(j));
                for (int i = 0; i <= X.fc[j].deg(); ++i)
                    coef[static_cast<size_t>(i)] =
                        ls_add(coef[static_cast<size_t>(i)],
                               ls_scale(X.fc[j].c[static_cast<size_t>(i)], yj));
            }
            std::vector<LSeries> dcoef;
            for (size_t i = 1; i < coef.size(); ++i)
                dcoef.push_back(ls_scale(lat.from_int(static_cast<long long>(i)), coef[i]));
            auto horner = [&](const std::vector<LSeries>& cs, const LSeries& w) {
                LSeries acc = ls_zero(lat, prec);
                for (auto itc = cs.rbegin(); itc != cs.rend(); ++itc)
                    acc = ls_add(ls_mul(acc, w), *itc);
                return acc;
            };
            LSeries w = ls_const(P.x0, 1);
            int cur = 1;
            while (cur < prec) {
                cur = std::min(2 * cur, prec);
                LSeries wc = w.c.empty() ? ls_zero(lat, cur) : ls_make(lat, w.val, w.c, cur);
                w = ls_truncate(ls_sub(wc, ls_div(horner(coef, wc), horner(dcoef, wc))), cur);
            }
            if (!ls_is_zero(ls_truncate(horner(coef, w), prec)))
                throw math_error("local chart iteration failed to converge");
            ch.xs = w;
            LSeries diff = ls_sub(ch.xs, ls_const(P.x0, prec));
            if (ls_is_zero(diff)) throw math_error("x-coordinate is constant along the chart");
            ch.e = ls_val(diff);
        }
    } else {
        // u = 1/x satisfies u = t^2 fstar(u), fstar(u) = u^(2g+1) f(1/u),
        // where t is the uniformizer x^g / y. Fixed-point iteration gains two
        // orders of accuracy per round since the right side is O(t^2 u).
        FPoly fstar;
        for (int i = X.hf.deg(); i >= 0; --i) fstar.c.push_back(X.hf.c[static_cast<size_t>(i)]);
        fstar.trim();
        int target = prec + 2 * X.genus + 4;
        LSeries u = ls_zero(lat, target);
        LSeries t2 = ls_monomial(lat.one(1), 2, target);
        int rounds = target / 2 + 2;
        for (int i = 0; i < rounds; ++i) u = ls_truncate(ls_mul(t2, ls_eval_poly(fstar, u)), target);
        if (!ls_is_zero(ls_truncate(ls_sub(u, ls_mul(t2, ls_eval_poly(fstar, u))), target - 2)))
            throw math_error("chart iteration at infinity failed to converge");
        ch.xs = ls_inv(u);
        ch.ys = ls_shift(ls_pow(ch.xs, X.genus), -1);
        if (ch.xs.prec < prec || ch.ys.prec < prec)
            throw math_error("chart precision shortfall at infinity");
        ch.xs = ls_truncate(ch.xs, prec);
        ch.ys = ls_truncate(ch.ys, prec);
        ch.e = 2;
    }
    return X.chart_cache.emplace(std::move(key), std::move(ch)).first->second;
}

/* Laurent expansion of a function at a place, to absolute precision prec. */
inline LSeries cf_expand(const CurveFun& g, const Place& P, int prec) {
    const Curve& X = *g.X;
    FieldLattice& lat = *X.lat;
    int maxdeg = 0;
    for (const auto& r : g.c) maxdeg = std::max({maxdeg, r.num.deg(), r.den.deg()});
    int slack = 8 + 2 * maxdeg + X.dy * (2 * X.genus + X.dy + 2);
    for (int attempt = 0; attempt < 6; ++attempt) {
        int wp = prec + slack;
        const LocalChart& ch = curve_chart(X, P, wp);
        LSeries acc = ls_zero(lat, wp);
        bool retry = false;
        for (int j = X.dy - 1; j >= 0 && !retry; --j) {
            acc = ls_mul(acc, ch.ys);
            const RatFun& r = g.c[static_cast<size_t>(j)];
            if (!r.is_zero()) {
                LSeries den = ls_eval_poly(r.den, ch.xs);
                if (ls_is_zero(den)) {
                    retry = true;
                    break;
                }
                acc = ls_add(acc, ls_mul(ls_eval_poly(r.num, ch.xs), ls_inv(den)));
            }
        }
        if (!retry && acc.prec >= prec) return ls_truncate(std::move(acc), prec);
        slack *= 2;
    }
    throw math_error("expansion precision did not stabilize");
}

/* Valuation of a nonzero function at a place. */
inline int cf_val(const CurveFun& g, const Place& P) {
    if (g.is_zero()) throw input_error("valuation of the zero function");
    const Curve& X = *g.X;
    // Zeros of g cannot be deeper than the total pole degree.
    int polebound = 0;
    for (size_t j = 0; j < g.c.size(); ++j) {
        if (g.c[j].is_zero()) continue;
        int dd = std::max(g.c[j].num.deg(), g.c[j].den.deg());
        polebound += X.dy * dd + static_cast<int>(j) * (2 * X.genus + X.dy + 1);
    }
    int prec = 8;
    for (;;) {
        LSeries s = cf_expand(g, P, prec);
        if (!ls_is_zero(s)) return ls_val(s);
        if (prec > polebound + 8) throw math_error("nonzero function vanishes beyond its bound");
        prec *= 2;
    }
}

/* All places in the fiber over x = x0 with their ramification indices. */
inline std::vector<std::pair<Place, int>> curve_fiber(const Curve& X, const FieldElement& x0) {
    FPoly fib = curve_fiber_poly(X, x0);
    std::vector<std::pair<Place, int>> out;
    int total = 0;
    for (const FieldElement& y0 : poly_roots(fib)) {
        FPoly lin = poly_x(y0) - poly_constant(y0);
        FPoly g = fib;
        int mult = 0;
        while (poly_eval(g, y0).is_zero()) {
            g = poly_divrem(std::move(g), lin).first;
            ++mult;
        }
        out.push_back({place_finite(X, x0, y0), mult});
        total += mult;
    }
    if (total != X.dy) throw math_error("fiber degree mismatch");
    return out;
}

} // namespace asw
