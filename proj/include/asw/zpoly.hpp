#pragma once

/* Sparse multivariate polynomials over Z with arbitrary-precision integer
 * coefficients. Monomials are fixed-length exponent vectors; the number of
 * variables is part of the polynomial. Exact integer division and generic
 * evaluation are what the Witt structure-polynomial machinery needs. */

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "asw/common.hpp"

namespace asw {

using Monomial = std::vector<unsigned>;

struct ZPoly {
    size_t nvars = 0;
    std::map<Monomial, Int> t; // zero coefficients never stored

    bool is_zero() const { return t.empty(); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : t) {
            unsigned s = 0;
            for (unsigned e : m) s += e;
            if (s > d) d = s;
        }
        return d;
    }
};

inline ZPoly zp_zero(size_t nvars) { return ZPoly{nvars, {}}; }

inline ZPoly zp_const(size_t nvars, Int v) {
    ZPoly f{nvars, {}};
    if (v != 0) f.t.emplace(Monomial(nvars, 0), std::move(v));
    return f;
}

inline ZPoly zp_var(size_t nvars, size_t i) {
    if (i >= nvars) throw input_error("variable index out of range");
    ZPoly f{nvars, {}};
    Monomial m(nvars, 0);
    m[i] = 1;
    f.t.emplace(std::move(m), Int(1));
    return f;
}

inline void zp_check(const ZPoly& a, const ZPoly& b) {
    if (a.nvars != b.nvars) throw input_error("polynomials have different variable counts");
}

inline ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    zp_check(a, b);
    ZPoly r = a;
    for (const auto& [m, c] : b.t) {
        auto [it, fresh] = r.t.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.t.erase(it);
        }
    }
    return r;
}

inline ZPoly operator-(const ZPoly& a) {
    ZPoly r = a;
    for (auto& [m, c] : r.t) c = -c;
    return r;
}

inline ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    zp_check(a, b);
    ZPoly r = a;
    for (const auto& [m, c] : b.t) {
        auto [it, fresh] = r.t.emplace(m, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) r.t.erase(it);
        }
    }
    return r;
}

inline ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    zp_check(a, b);
    ZPoly r{a.nvars, {}};
    Monomial key(a.nvars);
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) {
            for (size_t i = 0; i < a.nvars; ++i) key[i] = ma[i] + mb[i];
            Int prod = ca * cb;
            auto [it, fresh] = r.t.emplace(key, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second == 0) r.t.erase(it);
            }
        }
    return r;
}

inline ZPoly operator*(const Int& s, const ZPoly& a) {
    if (s == 0) return zp_zero(a.nvars);
    ZPoly r = a;
    for (auto& [m, c] : r.t) c *= s;
    return r;
}

inline bool operator==(const ZPoly& a, const ZPoly& b) { return a.nvars == b.nvars && a.t == b.t; }
inline bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

inline ZPoly zp_pow(const ZPoly& a, u64 e) {
    ZPoly r = zp_const(a.nvars, 1), base = a;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

/* Divides every coefficient by d, requiring exactness. */
inline ZPoly zp_divexact(ZPoly a, const Int& d) {
    if (d == 0) throw input_error("division by zero");
    for (auto& [m, c] : a.t) {
        if (c % d != 0) throw math_error("inexact integer division in polynomial");
        c /= d;
    }
    return a;
}

/* Coefficients reduced into [0, mod); zero terms dropped. */
inline ZPoly zp_mod_int(const ZPoly& a, const Int& mod) {
    ZPoly r{a.nvars, {}};
    for (const auto& [m, c] : a.t) {
        Int v = c % mod;
        if (v < 0) v += mod;
        if (v != 0) r.t.emplace(m, std::move(v));
    }
    return r;
}

inline ZPoly zp_mod(const ZPoly& a, u32 p) { return zp_mod_int(a, Int(p)); }

/* Power with coefficient reduction after every product (mod = 0 means exact). */
inline ZPoly zp_pow_mod_int(const ZPoly& a, u64 e, const Int& mod) {
    ZPoly r = zp_const(a.nvars, 1), base = a;
    while (e) {
        if (e & 1) {
            r = r * base;
            if (mod != 0) r = zp_mod_int(r, mod);
        }
        e >>= 1;
        if (e) {
            base = base * base;
            if (mod != 0) base = zp_mod_int(base, mod);
        }
    }
    return r;
}

/* Substitutes 0 for the given variable. */
inline ZPoly zp_set_zero(const ZPoly& a, size_t var) {
    ZPoly r{a.nvars, {}};
    for (const auto& [m, c] : a.t)
        if (m[var] == 0) r.t.emplace(m, c);
    return r;
}

// ---- generic evaluation ----

// ring hooks for plain big integers (declared before the templates below,
// since cpp_int lives outside this namespace and ADL would not find them)
inline Int ring_zero_like(const Int&) { return Int(0); }
inline Int ring_one_like(const Int&) { return Int(1); }
inline bool ring_is_zero(const Int& x) { return x == 0; }
inline Int ring_from_int(const Int&, const Int& v) { return v; }

template <class R>
R ring_upow(R base, u64 e, const R& like) {
    R r = ring_one_like(like);
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

/* Evaluates at args (one per variable) in any commutative ring providing the
 * ring_* customization points; `like` supplies zero/one/integer images.
 * Powers of each argument are memoized across terms. */
template <class R>
R zp_eval(const ZPoly& f, const std::vector<R>& args, const R& like) {
    if (args.size() != f.nvars) throw input_error("wrong number of evaluation arguments");
    std::vector<std::map<unsigned, R>> memo(f.nvars);
    struct PowerCache {
        const std::vector<R>& args;
        std::vector<std::map<unsigned, R>>& memo;
        R get(size_t i, unsigned e) {
            auto it = memo[i].find(e);
            if (it != memo[i].end()) return it->second;
            R v = (e == 1) ? args[i] : [&] {
                R half = get(i, e / 2);
                R sq = half * half;
                return (e & 1) ? sq * args[i] : sq;
            }();
            memo[i].emplace(e, v);
            return v;
        }
    } cache{args, memo};
    R out = ring_zero_like(like);
    for (const auto& [m, c] : f.t) {
        R term = ring_from_int(like, c);
        for (size_t i = 0; i < f.nvars; ++i)
            if (m[i]) term = term * cache.get(i, m[i]);
        out = out + term;
    }
    return out;
}

// ring hooks so ZPoly can be substituted into ZPoly
inline ZPoly ring_zero_like(const ZPoly& x) { return zp_zero(x.nvars); }
inline ZPoly ring_one_like(const ZPoly& x) { return zp_const(x.nvars, 1); }
inline bool ring_is_zero(const ZPoly& x) { return x.is_zero(); }
inline ZPoly ring_from_int(const ZPoly& like, const Int& v) { return zp_const(like.nvars, v); }

/* Rendered with terms sorted by total degree (descending), ties broken by the
 * exponent vector (lexicographically descending); integer coefficients. */
inline std::string zp_to_string(const ZPoly& f, const std::vector<std::string>& names) {
    if (names.size() != f.nvars) throw input_error("wrong number of variable names");
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, Int>> terms(f.t.begin(), f.t.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        unsigned da = 0, db = 0;
        for (unsigned e : a.first) da += e;
        for (unsigned e : b.first) db += e;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_mono = true;
        for (unsigned e : m)
            if (e) unit_mono = false;
        if (a != 1 || unit_mono) {
            os << a.str();
            if (!unit_mono) os << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < f.nvars; ++i) {
            if (!m[i]) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << names[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

} // namespace asw
