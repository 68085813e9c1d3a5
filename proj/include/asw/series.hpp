#pragma once

/* Truncated Laurent series over the field lattice. A series stores exact
 * coefficients for exponents in [val, prec); everything below prec is
 * determined, everything from prec on is unknown. Invariant: either the
 * coefficient list is empty (the series vanishes to its precision and
 * val == prec) or its first entry is nonzero.
 *
 * Multiplication shrinks precision by the usual rule
 *   prec(ab) = min(prec(a) + val(b), prec(b) + val(a)),
 * so callers must start with enough slack for the expressions they build. */

#include <vector>

#include "asw/field.hpp"
#include "asw/poly.hpp"

namespace asw {

struct LSeries {
    FieldLattice* lat = nullptr;
    int val = 0;
    int prec = 0;
    std::vector<FieldElement> c; // c[i] is the coefficient of t^(val+i)
};

inline LSeries ls_normalize(LSeries s) {
    size_t lead = 0;
    while (lead < s.c.size() && s.c[lead].is_zero()) ++lead;
    if (lead > 0) {
        s.c.erase(s.c.begin(), s.c.begin() + static_cast<long>(lead));
        s.val += static_cast<int>(lead);
    }
    if (s.c.empty()) s.val = s.prec;
    return s;
}

inline LSeries ls_make(FieldLattice& lat, int val, std::vector<FieldElement> coeffs, int prec) {
    if (val + static_cast<int>(coeffs.size()) > prec) throw input_error("series longer than its precision");
    LSeries s{&lat, val, prec, std::move(coeffs)};
    s.c.resize(static_cast<size_t>(prec - val), lat.zero(1));
    return ls_normalize(std::move(s));
}

inline LSeries ls_zero(FieldLattice& lat, int prec) { return LSeries{&lat, prec, prec, {}}; }

inline LSeries ls_monomial(const FieldElement& coeff, int k, int prec) {
    FieldLattice& lat = *coeff.lat;
    if (coeff.is_zero() || k >= prec) return ls_zero(lat, prec);
    return ls_make(lat, k, {coeff}, prec);
}

inline LSeries ls_const(const FieldElement& x, int prec) { return ls_monomial(x, 0, prec); }

inline bool ls_is_zero(const LSeries& s) { return s.c.empty(); }

inline int ls_val(const LSeries& s) {
    if (s.c.empty()) throw math_error("series vanishes to its precision; valuation unknown");
    return s.val;
}

inline FieldElement ls_coeff(const LSeries& s, int k) {
    if (k >= s.prec) throw math_error("series coefficient beyond precision");
    if (k < s.val) return s.lat->zero(1);
    return s.c[static_cast<size_t>(k - s.val)];
}

inline LSeries ls_truncate(LSeries s, int prec) {
    if (prec >= s.prec) return s;
    s.prec = prec;
    if (s.val >= prec) {
        s.val = prec;
        s.c.clear();
        return s;
    }
    s.c.resize(static_cast<size_t>(prec - s.val));
    return ls_normalize(std::move(s));
}

inline LSeries ls_shift(LSeries s, int k) {
    s.val += k;
    s.prec += k;
    return s;
}

inline LSeries ls_add(const LSeries& a, const LSeries& b) {
    FieldLattice& lat = *a.lat;
    int prec = std::min(a.prec, b.prec);
    if (a.c.empty() && b.c.empty()) return ls_zero(lat, prec);
    int lo = std::min(a.c.empty() ? prec : a.val, b.c.empty() ? prec : b.val);
    if (lo >= prec) return ls_zero(lat, prec);
    std::vector<FieldElement> c(static_cast<size_t>(prec - lo), lat.zero(1));
    for (size_t i = 0; i < a.c.size() && a.val + static_cast<int>(i) < prec; ++i)
        c[static_cast<size_t>(a.val - lo) + i] = c[static_cast<size_t>(a.val - lo) + i] + a.c[i];
    for (size_t i = 0; i < b.c.size() && b.val + static_cast<int>(i) < prec; ++i)
        c[static_cast<size_t>(b.val - lo) + i] = c[static_cast<size_t>(b.val - lo) + i] + b.c[i];
    return ls_normalize(LSeries{&lat, lo, prec, std::move(c)});
}

inline LSeries ls_neg(LSeries s) {
    for (auto& x : s.c) x = -x;
    return s;
}

inline LSeries ls_sub(const LSeries& a, const LSeries& b) { return ls_add(a, ls_neg(b)); }

inline LSeries ls_scale(const FieldElement& k, const LSeries& s) {
    if (k.is_zero()) return ls_zero(*s.lat, s.prec);
    LSeries r = s;
    for (auto& x : r.c) x = k * x;
    return ls_normalize(std::move(r));
}

inline LSeries ls_mul(const LSeries& a, const LSeries& b) {
    FieldLattice& lat = *a.lat;
    int av = a.c.empty() ? a.prec : a.val;
    int bv = b.c.empty() ? b.prec : b.val;
    int prec = std::min(a.prec + bv, b.prec + av);
    if (a.c.empty() || b.c.empty()) return ls_zero(lat, prec);
    int lo = av + bv;
    if (lo >= prec) return ls_zero(lat, prec);
    std::vector<FieldElement> c(static_cast<size_t>(prec - lo), lat.zero(1));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            int e = a.val + static_cast<int>(i) + b.val + static_cast<int>(j);
            if (e >= prec) break;
            c[static_cast<size_t>(e - lo)] = c[static_cast<size_t>(e - lo)] + a.c[i] * b.c[j];
        }
    }
    return ls_normalize(LSeries{&lat, lo, prec, std::move(c)});
}

/* Inverse of a series with known valuation, to the same relative precision. */
inline LSeries ls_inv(const LSeries& s) {
    FieldLattice& lat = *s.lat;
    if (s.c.empty()) throw math_error("cannot invert a series that vanishes to its precision");
    size_t len = s.c.size();
    std::vector<FieldElement> r(len, lat.zero(1));
    FieldElement lead_inv = ring_inv(s.c[0]);
    r[0] = lead_inv;
    for (size_t n = 1; n < len; ++n) {
        FieldElement acc = lat.zero(1);
        for (size_t i = 1; i <= n; ++i) acc = acc + s.c[i] * r[n - i];
        r[n] = -(acc * lead_inv);
    }
    return LSeries{&lat, -s.val, -s.val + static_cast<int>(len), std::move(r)};
}

inline LSeries ls_div(const LSeries& a, const LSeries& b) { return ls_mul(a, ls_inv(b)); }

inline LSeries ls_pow(const LSeries& s, int e) {
    if (e < 0) return ls_pow(ls_inv(s), -e);
    FieldLattice& lat = *s.lat;
    if (e == 0) return ls_const(lat.one(1), s.prec);
    LSeries base = s;
    LSeries acc = base;
    --e;
    while (e > 0) {
        if (e & 1) acc = ls_mul(acc, base);
        e >>= 1;
        if (e > 0) base = ls_mul(base, base);
    }
    return acc;
}

/* Evaluation of a polynomial at a series by Horner's rule. */
inline LSeries ls_eval_poly(const Poly<FieldElement>& f, const LSeries& s) {
    FieldLattice& lat = *s.lat;
    if (f.is_zero()) return ls_zero(lat, s.prec);
    LSeries acc = ls_const(f.c.back(), s.prec);
    for (int i = f.deg() - 1; i >= 0; --i)
        acc = ls_add(ls_mul(acc, s), ls_const(f.c[static_cast<size_t>(i)], s.prec));
    return acc;
}

inline bool ls_eq(const LSeries& a, const LSeries& b) {
    int prec = std::min(a.prec, b.prec);
    for (int k = std::min(a.c.empty() ? prec : a.val, b.c.empty() ? prec : b.val); k < prec; ++k)
        if (!(ls_coeff(a, k) == ls_coeff(b, k))) return false;
    return true;
}

} // namespace asw
