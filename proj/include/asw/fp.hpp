#pragma once

/* Prime-field scalars and dense univariate polynomials over F_p.
 * Coefficients are uint32 in [0, p); p < 2^15 so products fit in uint64. */

#include <cstdint>
#include <vector>

#include "asw/common.hpp"

namespace asw {

inline u32 fp_add(u32 a, u32 b, u32 p) { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 fp_sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 fp_neg(u32 a, u32 p) { return a ? p - a : 0; }
inline u32 fp_mul(u32 a, u32 b, u32 p) { return static_cast<u32>((u64)a * b % p); }

inline u32 fp_pow(u32 a, u64 e, u32 p) {
    u32 r = 1 % p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u32 fp_inv(u32 a, u32 p) {
    if (a == 0) throw math_error("division by zero in F_p");
    return fp_pow(a, p - 2, p);
}

/* F_p[X] as coefficient vectors, index = exponent, no trailing zeros. */
using FpPoly = std::vector<u32>;

inline void fpp_trim(FpPoly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }
inline int fpp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

inline FpPoly fpp_add(const FpPoly& a, const FpPoly& b, u32 p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fp_add(r[i], b[i], p);
    fpp_trim(r);
    return r;
}

inline FpPoly fpp_sub(const FpPoly& a, const FpPoly& b, u32 p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fp_sub(r[i], b[i], p);
    fpp_trim(r);
    return r;
}

inline FpPoly fpp_mul(const FpPoly& a, const FpPoly& b, u32 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<u32>((r[i + j] + (u64)a[i] * b[j]) % p);
    }
    fpp_trim(r);
    return r;
}

/* Remainder of a modulo monic-normalisable b. */
inline FpPoly fpp_rem(FpPoly a, const FpPoly& b, u32 p) {
    if (b.empty()) throw math_error("polynomial division by zero");
    u32 linv = fp_inv(b.back(), p);
    while (static_cast<int>(a.size()) >= static_cast<int>(b.size())) {
        u32 c = fp_mul(a.back(), linv, p);
        size_t shift = a.size() - b.size();
        if (c != 0)
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = fp_sub(a[shift + i], fp_mul(c, b[i], p), p);
        a.pop_back();
        fpp_trim(a);
    }
    return a;
}

inline FpPoly fpp_gcd(FpPoly a, FpPoly b, u32 p) {
    while (!b.empty()) {
        FpPoly r = fpp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        u32 linv = fp_inv(a.back(), p);
        for (auto& c : a) c = fp_mul(c, linv, p);
    }
    return a;
}

inline FpPoly fpp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, u32 p) {
    return fpp_rem(fpp_mul(a, b, p), m, p);
}

inline FpPoly fpp_powmod(FpPoly a, u64 e, const FpPoly& m, u32 p) {
    FpPoly r{1};
    a = fpp_rem(std::move(a), m, p);
    while (e) {
        if (e & 1) r = fpp_mulmod(r, a, m, p);
        a = fpp_mulmod(a, a, m, p);
        e >>= 1;
    }
    return r;
}

/* a^(p^k) mod m, by k rounds of exponent-p powering (no big exponents). */
inline FpPoly fpp_frob_powmod(FpPoly a, unsigned k, const FpPoly& m, u32 p) {
    for (unsigned i = 0; i < k; ++i) a = fpp_powmod(std::move(a), p, m, p);
    return a;
}

/* Monic degree-m irreducibility over F_p: X^(p^m) == X mod f and
 * gcd(X^(p^(m/l)) - X, f) == 1 for every prime l | m. */
inline bool fpp_is_irreducible(const FpPoly& f, u32 p) {
    int m = fpp_deg(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    FpPoly x{0, 1};
    FpPoly xq = fpp_frob_powmod(x, static_cast<unsigned>(m), f, p);
    if (fpp_sub(xq, x, p) != FpPoly{}) return false;
    for (long long l : prime_factors(m)) {
        FpPoly xe = fpp_frob_powmod(x, static_cast<unsigned>(m / l), f, p);
        FpPoly g = fpp_gcd(fpp_sub(xe, x, p), f, p);
        if (fpp_deg(g) != 0) return false;
    }
    return true;
}

} // namespace asw
