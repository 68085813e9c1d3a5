#pragma once

/* Root finding over the field lattice with controlled degree growth, plus the
 * Artin-Schreier scalar solver and root spaces of q-linearized polynomials. */

#include <algorithm>
#include <vector>

#include "asw/field.hpp"
#include "asw/fp_linalg.hpp"
#include "asw/poly.hpp"

namespace asw {

inline u64 poly_fingerprint(const Poly<FieldElement>& f) {
    u64 h = 0xf00dULL;
    for (const auto& c : f.c) {
        h = hash_combine(h, static_cast<u64>(c.deg));
        for (u32 v : c.c) h = hash_combine(h, v);
    }
    return h;
}

/* Monic polynomial with the same roots, each of multiplicity one. */
inline Poly<FieldElement> squarefree_part(Poly<FieldElement> f) {
    if (f.is_zero()) throw input_error("squarefree part of the zero polynomial");
    f = poly_monic(std::move(f));
    if (f.deg() <= 1) return f;
    FieldLattice& lat = *f.c[0].lat;
    const u32 p = lat.p();
    Poly<FieldElement> d = poly_derivative(f, f.c[0]);
    if (d.is_zero()) {
        // f = g(X^p); coefficients of g are p-th roots
        Poly<FieldElement> g;
        g.c.reserve(f.c.size() / p + 1);
        for (size_t i = 0; i < f.c.size(); i += p) g.c.push_back(lat.p_power(f.c[i], -1));
        g.trim();
        return squarefree_part(std::move(g));
    }
    Poly<FieldElement> gc = poly_gcd(f, d);
    if (gc.deg() == 0) return f;
    // w carries every factor whose multiplicity is not divisible by p
    Poly<FieldElement> w = poly_divrem(f, gc).first;
    // strip w-factors from f; what remains is a p-th power
    Poly<FieldElement> y = f;
    while (true) {
        Poly<FieldElement> t = poly_gcd(y, w);
        if (t.deg() == 0) break;
        y = poly_divrem(y, t).first;
    }
    if (y.deg() == 0) return poly_monic(std::move(w));
    Poly<FieldElement> z;
    z.c.reserve(y.c.size() / p + 1);
    for (size_t i = 0; i < y.c.size(); i += p) z.c.push_back(lat.p_power(y.c[i], -1));
    z.trim();
    return w * squarefree_part(std::move(z));
}

/* Distinct factor degrees of a squarefree monic f over F_{p^m0} (the common
 * coefficient field), by distinct-degree factorization. Deterministic. */
inline std::vector<int> factor_degrees(Poly<FieldElement> f, int m0) {
    FieldLattice& lat = *f.c.at(0).lat;
    const Int q = ipow_int(Int(lat.p()), static_cast<unsigned>(m0));
    std::vector<int> degs;
    Poly<FieldElement> x = poly_x(f.c[0]);
    Poly<FieldElement> t = poly_rem(x, f);
    int e = 0;
    while (f.deg() >= 2 * (e + 1)) {
        ++e;
        t = poly_powmod(t, q, f, f.c[0]);
        Poly<FieldElement> g = poly_gcd(t - x, f);
        if (g.deg() > 0) {
            degs.push_back(e);
            f = poly_divrem(f, g).first;
            if (f.deg() == 0) break;
            t = poly_rem(t, f);
        }
    }
    if (f.deg() > 0) degs.push_back(f.deg());
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    return degs;
}

namespace detail {

/* All roots of a monic squarefree polynomial that splits into linear factors
 * over the coefficient field F_{p^L}; seeded equal-degree splitting. */
inline void collect_linear_roots(Poly<FieldElement> f, int L, SplitMix64& rng,
                                 std::vector<FieldElement>& out) {
    FieldLattice& lat = *f.c.at(0).lat;
    const u32 p = lat.p();
    if (f.deg() == 0) return;
    if (f.deg() == 1) {
        out.push_back(lat.neg(f.c[0]));
        return;
    }
    // strip a root at zero if present
    if (f.c[0].is_zero()) {
        out.push_back(lat.zero(L));
        f.c.erase(f.c.begin());
        collect_linear_roots(std::move(f), L, rng, out);
        return;
    }
    int guard = 0;
    while (true) {
        if (++guard > 20000) throw math_error("root splitting did not converge");
        std::vector<u32> coords(static_cast<size_t>(L), 0);
        for (int i = 0; i < L; ++i) coords[i] = static_cast<u32>(rng.below(p));
        FieldElement a = lat.make(L, std::move(coords));
        Poly<FieldElement> g;
        if (p != 2) {
            Poly<FieldElement> base = poly_x(f.c[0]) + poly_constant(a);
            Int e = (ipow_int(Int(p), static_cast<unsigned>(L)) - 1) / 2;
            Poly<FieldElement> s = poly_powmod(base, e, f, f.c[0]);
            g = poly_gcd(s - poly_constant(lat.one(L)), f);
        } else {
            Poly<FieldElement> t = poly_constant(a) * poly_x(f.c[0]);
            Poly<FieldElement> acc = t;
            for (int i = 1; i < L; ++i) {
                t = poly_mulmod(t, t, f);
                acc = acc + t;
            }
            g = poly_gcd(acc, f);
        }
        if (g.deg() > 0 && g.deg() < f.deg()) {
            Poly<FieldElement> h = poly_divrem(f, g).first;
            collect_linear_roots(std::move(g), L, rng, out);
            collect_linear_roots(std::move(h), L, rng, out);
            return;
        }
    }
}

} // namespace detail

/* All distinct roots of f in the algebraic closure, as elements of the
 * splitting field F_{p^L}; L is minimal up to the coefficient normalization. */
inline std::vector<FieldElement> poly_roots(Poly<FieldElement> f) {
    f.trim();
    if (f.is_zero()) throw input_error("root finding on the zero polynomial");
    if (f.deg() == 0) return {};
    FieldLattice& lat = *f.c[0].lat;
    long long m0 = 1;
    for (auto& c : f.c) {
        c = lat.reduce_min(c);
        m0 = ilcm(m0, c.deg);
    }
    for (auto& c : f.c) c = lat.embed(c, static_cast<int>(m0));
    Poly<FieldElement> sf = squarefree_part(f);
    if (sf.deg() == 0) return {};
    long long L = m0;
    for (int e : factor_degrees(sf, static_cast<int>(m0))) L = ilcm(L, m0 * e);
    lat.get_field(L);
    for (auto& c : sf.c) c = lat.embed(c, static_cast<int>(L));
    SplitMix64 rng = lat.stream("polyroots", static_cast<u64>(L), poly_fingerprint(sf));
    std::vector<FieldElement> out;
    detail::collect_linear_roots(std::move(sf), static_cast<int>(L), rng, out);
    return out;
}

/* Roots of f lying in F_{p^c}, represented there. */
inline std::vector<FieldElement> poly_roots_in(Poly<FieldElement> f, int c) {
    FieldLattice& lat = *f.c.at(0).lat;
    std::vector<FieldElement> out;
    for (auto& r : poly_roots(std::move(f))) {
        FieldElement rm = lat.reduce_min(r);
        if (c % rm.deg == 0) out.push_back(lat.embed(rm, c));
    }
    return out;
}

/* Matrix over F_p of the map x -> x^(p^a) - x on F_{p^m}. */
inline FpMat artin_schreier_matrix(FieldLattice& lat, int a, int m) {
    lat.get_field(m);
    FpMat M(static_cast<size_t>(m), std::vector<u32>(static_cast<size_t>(m), 0));
    for (int j = 0; j < m; ++j) {
        std::vector<u32> ej(static_cast<size_t>(m), 0);
        ej[j] = 1;
        FieldElement img = lat.p_power(FieldElement{&lat, m, std::move(ej)}, a);
        for (int i = 0; i < m; ++i) M[i][j] = img.c[i];
        M[j][j] = fp_sub(M[j][j], 1, lat.p());
    }
    return M;
}

/* Canonical solution of lambda^q - lambda = c with q = p^a. Solutions exist in
 * F_{p^m'} iff the trace to F_q vanishes there; if not, degree m'*p always
 * works. The representative is canonical over the solution coset lambda + F_q
 * (lex-smallest coordinates when |F_q| <= 4096, pivot-zeroed otherwise). */
inline FieldElement solve_artin_schreier_scalar(FieldLattice& lat, int a, const FieldElement& c) {
    if (a <= 0) throw input_error("Artin-Schreier twist exponent must be positive");
    const u32 p = lat.p();
    FieldElement cm = lat.reduce_min(c);
    const long long m1 = ilcm(cm.deg, a);
    for (long long m : {m1, m1 * p}) {
        lat.get_field(m);
        FieldElement cc = lat.embed(cm, static_cast<int>(m));
        FpMat M = artin_schreier_matrix(lat, a, static_cast<int>(m));
        auto sol = fp_solve(M, cc.c, p);
        if (!sol) continue;
        auto ker = fp_kernel(std::move(M), p);
        if (static_cast<int>(ker.size()) != a)
            throw math_error("Artin-Schreier kernel has unexpected dimension");
        std::vector<u32> best = *sol;
        bool small = a < 20 && ipow_u64(p, static_cast<unsigned>(a)) <= 4096;
        if (small) {
            const u64 count = ipow_u64(p, static_cast<unsigned>(a));
            for (u64 idx = 0; idx < count; ++idx) {
                std::vector<u32> cand = *sol;
                u64 t = idx;
                for (int i = 0; i < a; ++i, t /= p) {
                    const u32 co = static_cast<u32>(t % p);
                    if (!co) continue;
                    for (size_t j = 0; j < cand.size(); ++j)
                        cand[j] = static_cast<u32>((cand[j] + (u64)co * ker[i][j]) % p);
                }
                if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(),
                                                 best.end()))
                    best = std::move(cand);
            }
        } else {
            FpSpan span(p);
            for (auto& kv : ker) span.add(kv);
            for (size_t r = 0; r < span.rows.size(); ++r) {
                const u32 f = best[span.pivots[r]];
                if (!f) continue;
                for (size_t j = 0; j < best.size(); ++j)
                    best[j] = fp_sub(best[j], fp_mul(f, span.rows[r][j], p), p);
            }
        }
        return lat.make(static_cast<int>(m), std::move(best));
    }
    throw math_error("Artin-Schreier solve failed in the guaranteed degree");
}

/* F_q-basis of the root space of the separable q-linearized polynomial
 * L(X) = sum_i coeffs[i] * X^(q^i), q = p^a, inside its splitting field. */
inline std::vector<FieldElement> linearized_root_basis(FieldLattice& lat, int a,
                                                       std::vector<FieldElement> coeffs) {
    if (a <= 0) throw input_error("linearized twist exponent must be positive");
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty()) throw input_error("linearized polynomial is identically zero");
    const int v = static_cast<int>(coeffs.size()) - 1;
    if (v == 0) return {}; // L = c0 * X, only the zero root
    if (coeffs[0].is_zero()) throw math_error("linearized polynomial is not separable");
    const u32 p = lat.p();
    long long m0 = a;
    for (auto& c : coeffs) {
        c = lat.reduce_min(c);
        m0 = ilcm(m0, c.deg);
    }
    // ordinary polynomial of degree q^v for the splitting-degree computation
    Poly<FieldElement> f;
    {
        const u64 qv = ipow_u64(p, static_cast<unsigned>(a * v));
        if (qv > (1u << 22)) throw math_error("linearized polynomial degree too large");
        f.c.assign(qv + 1, lat.zero(static_cast<int>(m0)));
        for (int i = 0; i <= v; ++i)
            f.c[ipow_u64(p, static_cast<unsigned>(a * i))] = lat.embed(coeffs[i],
                                                                       static_cast<int>(m0));
        f.trim();
        f = poly_monic(std::move(f));
    }
    long long L = m0;
    for (int e : factor_degrees(f, static_cast<int>(m0))) L = ilcm(L, m0 * e);
    lat.get_field(L);
    // F_p-matrix of x -> L(x) on F_{p^L}
    std::vector<FieldElement> cl;
    for (auto& c : coeffs) cl.push_back(lat.embed(c, static_cast<int>(L)));
    FpMat M(static_cast<size_t>(L), std::vector<u32>(static_cast<size_t>(L), 0));
    for (long long j = 0; j < L; ++j) {
        std::vector<u32> ej(static_cast<size_t>(L), 0);
        ej[j] = 1;
        FieldElement x{&lat, static_cast<int>(L), std::move(ej)};
        FieldElement acc = lat.zero(static_cast<int>(L));
        FieldElement t = x;
        for (int i = 0; i <= v; ++i) {
            if (!cl[i].is_zero()) acc = lat.add(acc, lat.mul(cl[i], t));
            if (i < v) t = lat.p_power(t, a);
        }
        for (long long i = 0; i < L; ++i) M[i][j] = acc.c[i];
    }
    auto ker = fp_kernel(std::move(M), p);
    if (ker.size() % static_cast<size_t>(a) != 0)
        throw math_error("linearized root space is not an F_q vector space");
    // greedy F_q-basis: take kernel vectors not yet in the F_p-span of the
    // F_q-multiples of those already chosen
    std::vector<FieldElement> qbasis;
    for (int t = 0; t < a; ++t)
        qbasis.push_back(lat.embed(lat.pow(lat.generator(a), t), static_cast<int>(L)));
    FpSpan span(p);
    std::vector<FieldElement> chosen;
    for (auto& kv : ker) {
        if (span.contains(kv)) continue;
        FieldElement w = lat.make(static_cast<int>(L), kv);
        for (const auto& u : qbasis) span.add(lat.mul(w, u).c);
        chosen.push_back(std::move(w));
    }
    if (chosen.size() * static_cast<size_t>(a) != ker.size())
        throw math_error("linearized root basis extraction failed");
    return chosen;
}

} // namespace asw
