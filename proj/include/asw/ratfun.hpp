#pragma once

/* Rational functions in one variable over the field lattice, kept in the
 * canonical form num/den with den monic and gcd(num, den) = 1. The zero
 * function is 0/1. Because the form is canonical, == is coordinatewise. */

#include <string>

#include "asw/field.hpp"
#include "asw/poly.hpp"

namespace asw {

using FPoly = Poly<FieldElement>;

struct RatFun {
    FPoly num, den; // den monic and nonzero, coprime to num

    bool is_zero() const { return num.is_zero(); }
    FieldLattice* lat() const { return den.c.at(0).lat; }
};

inline RatFun rf_normal(FPoly num, FPoly den) {
    if (den.is_zero()) throw math_error("division by the zero polynomial");
    if (num.is_zero()) return RatFun{FPoly{}, poly_constant(ring_one_like(den.lead()))};
    FPoly g = poly_gcd(num, den);
    if (g.deg() > 0) {
        num = poly_divrem(std::move(num), g).first;
        den = poly_divrem(std::move(den), g).first;
    }
    FieldElement li = ring_inv(den.lead());
    for (auto& c : num.c) c = c * li;
    for (auto& c : den.c) c = c * li;
    num.trim();
    den.trim();
    return RatFun{std::move(num), std::move(den)};
}

inline RatFun rf_from_poly(FPoly f, const FieldElement& like) {
    return RatFun{std::move(f), poly_constant(ring_one_like(like))};
}

inline RatFun rf_const(const FieldElement& v) {
    FPoly num = v.is_zero() ? FPoly{} : poly_constant(v);
    return RatFun{std::move(num), poly_constant(ring_one_like(v))};
}

inline RatFun rf_x(FieldLattice& lat) { return rf_from_poly(poly_x(lat.zero(1)), lat.zero(1)); }

inline RatFun operator+(const RatFun& a, const RatFun& b) {
    return rf_normal(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline RatFun operator-(const RatFun& a) { return RatFun{-a.num, a.den}; }

inline RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

inline RatFun operator*(const RatFun& a, const RatFun& b) {
    return rf_normal(a.num * b.num, a.den * b.den);
}

inline RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw math_error("division by the zero function");
    return rf_normal(a.num * b.den, a.den * b.num);
}

inline bool operator==(const RatFun& a, const RatFun& b) {
    return a.num == b.num && a.den == b.den;
}

inline bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

// ring customization points, so generic polynomial code runs over RatFun
inline RatFun ring_zero_like(const RatFun& x) { return rf_const(ring_zero_like(x.den.lead())); }
inline RatFun ring_one_like(const RatFun& x) { return rf_const(ring_one_like(x.den.lead())); }
inline bool ring_is_zero(const RatFun& x) { return x.is_zero(); }
inline RatFun ring_inv(const RatFun& x) {
    if (x.is_zero()) throw math_error("inverse of the zero function");
    return rf_normal(x.den, x.num);
}
inline u32 ring_char(const RatFun& x) { return x.lat()->p(); }

inline FieldElement rf_eval(const RatFun& f, const FieldElement& x0) {
    FieldElement d = poly_eval(f.den, x0);
    if (d.is_zero()) throw math_error("evaluation at a pole");
    return poly_eval(f.num, x0) * ring_inv(d);
}

/* Order of vanishing of a nonzero polynomial at x0. */
inline int poly_ord_at(const FPoly& f, const FieldElement& x0) {
    if (f.is_zero()) throw input_error("order of the zero polynomial");
    FPoly g = f;
    FPoly lin = poly_x(x0) - poly_constant(x0);
    int ord = 0;
    while (poly_eval(g, x0).is_zero()) {
        g = poly_divrem(std::move(g), lin).first;
        ++ord;
    }
    return ord;
}

/* Valuation of a nonzero rational function at the place x = x0. */
inline int rf_val_at(const RatFun& f, const FieldElement& x0) {
    if (f.is_zero()) throw input_error("valuation of the zero function");
    if (poly_eval(f.den, x0).is_zero()) return -poly_ord_at(f.den, x0);
    return poly_ord_at(f.num, x0);
}

/* Valuation at the place at infinity of the x-line. */
inline int rf_val_inf(const RatFun& f) {
    if (f.is_zero()) throw input_error("valuation of the zero function");
    return f.den.deg() - f.num.deg();
}

inline RatFun rf_derivative(const RatFun& f) {
    const FieldElement like = f.den.lead();
    return rf_normal(poly_derivative(f.num, like) * f.den - f.num * poly_derivative(f.den, like),
                     f.den * f.den);
}

/* k-fold coordinatewise p-power of a polynomial: (sum c_i x^i)^(p^k). */
inline FPoly poly_ppow(const FPoly& f, long long k, FieldLattice& lat) {
    if (k < 0) throw input_error("negative polynomial Frobenius power");
    if (f.is_zero() || k == 0) return f;
    u64 e = ipow_u64(lat.p(), static_cast<unsigned>(k));
    FPoly r;
    r.c.assign(static_cast<size_t>(f.deg()) * e + 1, ring_zero_like(f.c[0]));
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i * e] = lat.p_power(f.c[i], k);
    r.trim();
    return r;
}

/* Fast (p^k)-th power of a rational function. */
inline RatFun rf_ppow(const RatFun& f, long long k) {
    if (f.is_zero()) return f;
    FieldLattice& lat = *f.lat();
    return RatFun{poly_ppow(f.num, k, lat), poly_ppow(f.den, k, lat)};
}

inline std::string poly_fx_to_string(const FPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    FieldLattice& lat = *f.c.at(f.c.size() - 1).lat;
    std::string out;
    for (int i = f.deg(); i >= 0; --i) {
        const FieldElement& c = f.c[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = lat.to_string(c);
        bool unit = (cs == "1");
        std::string term;
        if (i == 0) {
            term = (cs.find(' ') != std::string::npos) ? "(" + cs + ")" : cs;
        } else {
            std::string xs = (i == 1) ? var : var + "^" + std::to_string(i);
            if (unit) term = xs;
            else if (cs.find(' ') != std::string::npos) term = "(" + cs + ")*" + xs;
            else term = cs + "*" + xs;
        }
        out += out.empty() ? term : " + " + term;
    }
    return out;
}

inline std::string rf_to_string(const RatFun& f, const std::string& var = "x") {
    if (f.den.deg() == 0) return poly_fx_to_string(f.num, var);
    return "(" + poly_fx_to_string(f.num, var) + ")/(" + poly_fx_to_string(f.den, var) + ")";
}

} // namespace asw
