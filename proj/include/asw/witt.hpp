#pragma once

/* Truncated p-typical Witt vectors over arbitrary rings of characteristic p.
 *
 * The structure polynomials (sum, product, negation, Frobenius, and the
 * carry polynomials of F(x) - x - y) are solved from the ghost-component
 * recursion  T_i = (G_i - sum_{j<i} p^j T_j^(p^(i-j))) / p^i  with exact
 * integer division. Two paths exist: an exact integer path (small levels,
 * and the source of printable integer carries), and a fast path that tracks
 * coefficients mod p^levels, which is sound because a class mod p^c has a
 * well-defined p^k-th power mod p^(c+k); the mod-p reductions drive all
 * in-characteristic arithmetic. */

#include <array>
#include <map>
#include <memory>
#include <mutex>

#include "asw/zpoly.hpp"

namespace asw {

/* Ghost component i of a coordinate block of `len` variables at `off`:
 * sum_{l <= i, l < len} p^l x_l^(p^(i-l)). */
inline ZPoly witt_ghost_poly(size_t nvars, size_t off, int len, int i, u32 p) {
    ZPoly g = zp_zero(nvars);
    for (int l = 0; l <= i && l < len; ++l)
        g = g + ipow_int(Int(p), static_cast<unsigned>(l)) *
                    zp_pow(zp_var(nvars, off + l), ipow_u64(p, static_cast<unsigned>(i - l)));
    return g;
}

/* Solves T_i from prescribed ghost components G_i, i < levels. With mod != 0
 * (which must be p^levels) coefficients are reduced along the way and T_i is
 * returned mod p^(levels - i); with mod == 0 the answer is exact over Z. */
inline std::vector<ZPoly> witt_ghost_solve(u32 p, int levels, const std::vector<ZPoly>& G,
                                           const Int& mod) {
    std::vector<ZPoly> T;
    T.reserve(levels);
    for (int i = 0; i < levels; ++i) {
        ZPoly num = G[i];
        for (int j = 0; j < i; ++j) {
            ZPoly pw = zp_pow_mod_int(T[j], ipow_u64(p, static_cast<unsigned>(i - j)), mod);
            num = num - ipow_int(Int(p), static_cast<unsigned>(j)) * pw;
        }
        if (mod != 0) num = zp_mod_int(num, mod);
        ZPoly ti = zp_divexact(std::move(num), ipow_int(Int(p), static_cast<unsigned>(i)));
        if (mod != 0) ti = zp_mod_int(ti, mod / ipow_int(Int(p), static_cast<unsigned>(i)));
        T.push_back(std::move(ti));
    }
    return T;
}

// ---- exact integer structure polynomials ----

/* Coordinates of x + y; 2n variables (x block, then y block). */
inline std::vector<ZPoly> witt_sum_int(u32 p, int n) {
    std::vector<ZPoly> G;
    for (int i = 0; i < n; ++i)
        G.push_back(witt_ghost_poly(2 * n, 0, n, i, p) + witt_ghost_poly(2 * n, n, n, i, p));
    return witt_ghost_solve(p, n, G, 0);
}

/* Coordinates of x * y; 2n variables. */
inline std::vector<ZPoly> witt_prod_int(u32 p, int n) {
    std::vector<ZPoly> G;
    for (int i = 0; i < n; ++i)
        G.push_back(witt_ghost_poly(2 * n, 0, n, i, p) * witt_ghost_poly(2 * n, n, n, i, p));
    return witt_ghost_solve(p, n, G, 0);
}

/* Coordinates of -x; n variables. */
inline std::vector<ZPoly> witt_neg_int(u32 p, int n) {
    std::vector<ZPoly> G;
    for (int i = 0; i < n; ++i) G.push_back(-witt_ghost_poly(n, 0, n, i, p));
    return witt_ghost_solve(p, n, G, 0);
}

/* Coordinates of the Witt Frobenius (ghost shift); n+1 variables, n outputs. */
inline std::vector<ZPoly> witt_frob_int(u32 p, int n) {
    std::vector<ZPoly> G;
    for (int i = 0; i < n; ++i) G.push_back(witt_ghost_poly(n + 1, 0, n + 1, i + 1, p));
    return witt_ghost_solve(p, n, G, 0);
}

/* Carry polynomial: coordinate j of F(X) - X - Y for X = (x_0..x_{j-1}, 0),
 * Y = (y_0..y_{j-1}, 0). Its mod-p reduction C_j satisfies, in W_{j+1} of any
 * ring of characteristic p,
 *   (F(r) - r - h)_j = r_j^p - r_j - h_j + C_j(r_0..r_{j-1}, h_0..h_{j-1}).
 * 2j variables. */
inline ZPoly witt_carry_solve(u32 p, int j, const Int& mod) {
    std::vector<ZPoly> G;
    for (int i = 0; i <= j; ++i)
        G.push_back(witt_ghost_poly(2 * j, 0, j, i + 1, p) - witt_ghost_poly(2 * j, 0, j, i, p) -
                    witt_ghost_poly(2 * j, j, j, i, p));
    return witt_ghost_solve(p, j + 1, G, mod).back();
}

inline ZPoly witt_carry_int(u32 p, int j) { return witt_carry_solve(p, j, 0); }

// ---- cached mod-p structure constants ----

class WittRing {
public:
    const u32 p;
    const int n;
    std::vector<ZPoly> sum_p;   // 2n vars, coefficients in [0, p)
    std::vector<ZPoly> prod_p;  // 2n vars
    std::vector<ZPoly> neg_p;   // n vars
    std::vector<ZPoly> carry_p; // carry_p[j] has 2j vars

    static const WittRing& get(u32 p, int n) {
        static std::map<std::pair<u32, int>, std::unique_ptr<WittRing>> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> g(mu);
        auto key = std::make_pair(p, n);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::unique_ptr<WittRing>(new WittRing(p, n))).first;
        return *it->second;
    }

    /* Exact integer carry polynomial (printable coefficients), cached. */
    const ZPoly& carry_int(int j) const {
        if (j < 0 || j >= n) throw input_error("carry level out of range");
        std::lock_guard<std::mutex> g(mu_);
        auto it = carry_int_cache_.find(j);
        if (it == carry_int_cache_.end())
            it = carry_int_cache_.emplace(j, witt_carry_int(p, j)).first;
        return it->second;
    }

private:
    WittRing(u32 p_, int n_) : p(p_), n(n_) {
        if (n <= 0) throw input_error("Witt length must be positive");
        if (!is_prime_u64(p)) throw input_error("Witt prime must be prime");
        const Int pn = ipow_int(Int(p), static_cast<unsigned>(n));
        {
            std::vector<ZPoly> G;
            for (int i = 0; i < n; ++i)
                G.push_back(witt_ghost_poly(2 * n, 0, n, i, p) +
                            witt_ghost_poly(2 * n, n, n, i, p));
            for (auto& t : witt_ghost_solve(p, n, G, pn)) sum_p.push_back(zp_mod(t, p));
        }
        {
            std::vector<ZPoly> G;
            for (int i = 0; i < n; ++i)
                G.push_back(witt_ghost_poly(2 * n, 0, n, i, p) *
                            witt_ghost_poly(2 * n, n, n, i, p));
            for (auto& t : witt_ghost_solve(p, n, G, pn)) prod_p.push_back(zp_mod(t, p));
        }
        {
            std::vector<ZPoly> G;
            for (int i = 0; i < n; ++i) G.push_back(-witt_ghost_poly(n, 0, n, i, p));
            for (auto& t : witt_ghost_solve(p, n, G, pn)) neg_p.push_back(zp_mod(t, p));
        }
        for (int j = 0; j < n; ++j)
            carry_p.push_back(
                zp_mod(witt_carry_solve(p, j, ipow_int(Int(p), static_cast<unsigned>(j + 1))), p));
    }

    mutable std::mutex mu_;
    mutable std::map<int, ZPoly> carry_int_cache_;
};

// ---- Witt vectors over a characteristic-p ring ----

template <class R>
struct WittVector {
    std::vector<R> a;
    int len() const { return static_cast<int>(a.size()); }
};

namespace detail {

template <class R>
std::vector<R> witt_pair_args(const WittRing& W, const WittVector<R>& x, const WittVector<R>& y) {
    const R& like = x.a.at(0);
    std::vector<R> args;
    args.reserve(2 * W.n);
    for (int i = 0; i < W.n; ++i)
        args.push_back(i < x.len() ? x.a[i] : ring_zero_like(like));
    for (int i = 0; i < W.n; ++i)
        args.push_back(i < y.len() ? y.a[i] : ring_zero_like(like));
    return args;
}

template <class R>
void witt_check(const WittRing& W, const WittVector<R>& x) {
    if (x.len() == 0 || x.len() > W.n) throw input_error("Witt vector length out of range");
}

} // namespace detail

template <class R>
WittVector<R> witt_zero(const R& like, int len) {
    WittVector<R> z;
    z.a.assign(static_cast<size_t>(len), ring_zero_like(like));
    return z;
}

template <class R>
WittVector<R> witt_teichmuller(const R& r, int len) {
    WittVector<R> t = witt_zero(r, len);
    t.a[0] = r;
    return t;
}

template <class R>
WittVector<R> witt_add(const WittRing& W, const WittVector<R>& x, const WittVector<R>& y) {
    detail::witt_check(W, x);
    detail::witt_check(W, y);
    if (x.len() != y.len()) throw input_error("Witt vector lengths differ");
    auto args = detail::witt_pair_args(W, x, y);
    WittVector<R> out;
    for (int i = 0; i < x.len(); ++i) out.a.push_back(zp_eval(W.sum_p[i], args, x.a[0]));
    return out;
}

template <class R>
WittVector<R> witt_mul(const WittRing& W, const WittVector<R>& x, const WittVector<R>& y) {
    detail::witt_check(W, x);
    detail::witt_check(W, y);
    if (x.len() != y.len()) throw input_error("Witt vector lengths differ");
    auto args = detail::witt_pair_args(W, x, y);
    WittVector<R> out;
    for (int i = 0; i < x.len(); ++i) out.a.push_back(zp_eval(W.prod_p[i], args, x.a[0]));
    return out;
}

template <class R>
WittVector<R> witt_neg(const WittRing& W, const WittVector<R>& x) {
    detail::witt_check(W, x);
    const R& like = x.a[0];
    std::vector<R> args;
    for (int i = 0; i < W.n; ++i) args.push_back(i < x.len() ? x.a[i] : ring_zero_like(like));
    WittVector<R> out;
    for (int i = 0; i < x.len(); ++i) out.a.push_back(zp_eval(W.neg_p[i], args, like));
    return out;
}

template <class R>
WittVector<R> witt_sub(const WittRing& W, const WittVector<R>& x, const WittVector<R>& y) {
    return witt_add(W, x, witt_neg(W, y));
}

/* In characteristic p the Witt Frobenius is the coordinatewise p-th power. */
template <class R>
WittVector<R> witt_frobenius(const WittVector<R>& x) {
    WittVector<R> out;
    for (const R& v : x.a) out.a.push_back(ring_frob(v));
    return out;
}

/* Verschiebung as an endomorphism of the truncated ring: shift, drop last. */
template <class R>
WittVector<R> witt_verschiebung(const WittVector<R>& x) {
    WittVector<R> out;
    out.a.push_back(ring_zero_like(x.a.at(0)));
    for (int i = 0; i + 1 < x.len(); ++i) out.a.push_back(x.a[i]);
    return out;
}

/* The additive Artin-Schreier-Witt operator F - id. */
template <class R>
WittVector<R> witt_wp(const WittRing& W, const WittVector<R>& x) {
    return witt_sub(W, witt_frobenius(x), x);
}

/* Image of the integer k (taken mod p^len). */
template <class R>
WittVector<R> witt_from_int(const WittRing& W, Int k, int len, const R& like) {
    const Int pn = ipow_int(Int(W.p), static_cast<unsigned>(len));
    k %= pn;
    if (k < 0) k += pn;
    WittVector<R> out = witt_zero(like, len);
    WittVector<R> addend = witt_teichmuller(ring_one_like(like), len);
    while (k > 0) {
        if ((k & 1) != 0) out = witt_add(W, out, addend);
        k >>= 1;
        if (k > 0) addend = witt_add(W, addend, addend);
    }
    return out;
}

template <class R>
bool witt_eq(const WittVector<R>& x, const WittVector<R>& y) {
    if (x.len() != y.len()) return false;
    for (int i = 0; i < x.len(); ++i)
        if (!(x.a[i] == y.a[i])) return false;
    return true;
}

/* Evaluates the mod-p carry polynomial C_j at (xs, ys), each of length j. */
template <class R>
R witt_carry_eval(const WittRing& W, int j, const std::vector<R>& xs, const std::vector<R>& ys,
                  const R& like) {
    if (j < 0 || j >= static_cast<int>(W.carry_p.size()))
        throw input_error("carry level out of range");
    if (static_cast<int>(xs.size()) < j || static_cast<int>(ys.size()) < j)
        throw input_error("carry evaluation needs j leading coordinates");
    std::vector<R> args;
    args.reserve(2 * j);
    for (int i = 0; i < j; ++i) args.push_back(xs[i]);
    for (int i = 0; i < j; ++i) args.push_back(ys[i]);
    return zp_eval(W.carry_p[j], args, like);
}

/* Inverse of witt_from_int on the prime ring Z/p^n inside W_n(R).  Walks the
 * p^n integer classes; fine at our scale (p^n <= a few thousand). */
template <typename R>
inline u64 witt_to_int(const WittRing& W, const WittVector<R>& x) {
    if (x.len() == 0)
        throw input_error("witt_to_int needs a nonempty vector");
    const R like = ring_zero_like(x.a[0]);
    WittVector<R> acc = witt_zero(like, x.len());
    const WittVector<R> one = witt_from_int(W, Int(1), x.len(), like);
    const u64 q = ipow_u64(W.p, static_cast<unsigned>(x.len()));
    for (u64 k = 0; k < q; ++k) {
        if (witt_eq(x, acc))
            return k;
        acc = witt_add(W, acc, one);
    }
    throw math_error("Witt vector is not an integer class");
}

/* Ghost component over the integers (test oracle). */
inline Int witt_ghost_int(u32 p, const std::vector<Int>& x, int i) {
    Int g = 0;
    for (int l = 0; l <= i && l < static_cast<int>(x.size()); ++l)
        g += ipow_int(Int(p), static_cast<unsigned>(l)) *
             ipow_int(x[l], ipow_u64(p, static_cast<unsigned>(i - l)));
    return g;
}

} // namespace asw
