#pragma once

/* Lazily grown lattice of finite fields F_{p^m} with compatible embeddings.
 *
 * Moduli are found deterministically from (seed, p, m). Embeddings d -> c are
 * chosen as the lexicographically smallest root of the degree-d modulus in
 * F_{p^c} subject to compatibility with every already-chosen embedding of a
 * proper divisor; registering a degree first registers all of its divisors,
 * which makes such a root exist (CRT on Frobenius-orbit indices). Triangles
 * phi_{b->c} . phi_{a->b} = phi_{a->c} therefore commute by construction.
 *
 * Elements are coefficient vectors over F_p in the degree-m generator z<m>;
 * binary operations lift both operands into the lcm degree first. */

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <vector>

#include "asw/common.hpp"
#include "asw/fp.hpp"
#include "asw/fp_linalg.hpp"
#include "asw/poly.hpp"

namespace asw {

class FieldLattice;

struct FieldElement {
    FieldLattice* lat = nullptr;
    int deg = 0;
    std::vector<u32> c; // length deg

    bool is_zero() const {
        for (u32 v : c)
            if (v) return false;
        return true;
    }
};

// Declared ahead of FieldLattice so templates instantiated inside its member
// functions (poly_gcd etc.) can find them regardless of instantiation point.
inline FieldElement operator+(const FieldElement& a, const FieldElement& b);
inline FieldElement operator-(const FieldElement& a, const FieldElement& b);
inline FieldElement operator-(const FieldElement& a);
inline FieldElement operator*(const FieldElement& a, const FieldElement& b);
inline FieldElement operator/(const FieldElement& a, const FieldElement& b);
inline bool operator==(const FieldElement& a, const FieldElement& b);
inline bool operator!=(const FieldElement& a, const FieldElement& b);
inline FieldElement ring_zero_like(const FieldElement& x);
inline FieldElement ring_one_like(const FieldElement& x);
inline bool ring_is_zero(const FieldElement& x);
inline FieldElement ring_inv(const FieldElement& x);
inline FieldElement ring_pow(const FieldElement& x, Int e);
inline u32 ring_char(const FieldElement& x);
inline FieldElement ring_from_int(const FieldElement& like, const Int& v);
inline FieldElement ring_frob(const FieldElement& x);

class FieldLattice {
public:
    explicit FieldLattice(u32 p, u64 seed = 0xa5c1ee5eedULL, u64 cap = 1000000)
        : p_(p), seed_(seed), cap_(cap) {
        if (!is_prime_u64(p)) throw input_error("characteristic must be prime");
        if (p >= (1u << 15)) throw input_error("characteristic too large");
        get_field(1);
    }

    FieldLattice(const FieldLattice&) = delete;
    FieldLattice& operator=(const FieldLattice&) = delete;

    u32 p() const { return p_; }
    u64 seed() const { return seed_; }
    u64 degree_cap() const { return cap_; }
    void set_degree_cap(u64 c) { cap_ = c; }

    /* Registers F_{p^m} together with all divisor subfields; returns m. */
    int get_field(long long m) {
        if (m <= 0) throw input_error("field degree must be positive");
        if (static_cast<u64>(m) > cap_)
            throw math_error("field degree " + std::to_string(m) + " exceeds degree cap " +
                             std::to_string(cap_));
        std::lock_guard<std::recursive_mutex> g(mu_);
        if (reg_.count(m)) return static_cast<int>(m);
        for (long long d : divisors_of(m))
            if (!reg_.count(d)) register_one(static_cast<int>(d));
        return static_cast<int>(m);
    }

    bool registered(long long m) const {
        std::lock_guard<std::recursive_mutex> g(mu_);
        return reg_.count(m) != 0;
    }

    std::vector<int> registered_degrees() const {
        std::lock_guard<std::recursive_mutex> g(mu_);
        std::vector<int> out;
        for (auto& [d, _] : reg_) out.push_back(static_cast<int>(d));
        return out;
    }

    const FpPoly& modulus(int m) {
        get_field(m);
        std::lock_guard<std::recursive_mutex> g(mu_);
        return entry(m).f;
    }

    // ---- element factories ----

    FieldElement make(int m, std::vector<u32> coeffs) {
        get_field(m);
        coeffs.resize(m, 0);
        for (auto& v : coeffs) v %= p_;
        return FieldElement{this, m, std::move(coeffs)};
    }

    FieldElement zero(int m = 1) {
        return FieldElement{this, get_field(m), std::vector<u32>(static_cast<size_t>(m), 0)};
    }

    FieldElement one(int m = 1) {
        std::vector<u32> v(static_cast<size_t>(m), 0);
        v[0] = 1 % p_;
        return FieldElement{this, get_field(m), std::move(v)};
    }

    FieldElement from_int(long long n) {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return make(1, {static_cast<u32>(r)});
    }

    FieldElement generator(int m) {
        get_field(m);
        std::vector<u32> v(static_cast<size_t>(m), 0);
        if (m == 1) return make(1, {0}); // modulus X: the generator is 0
        v[1] = 1;
        return FieldElement{this, m, std::move(v)};
    }

    // ---- arithmetic ----

    FieldElement add(const FieldElement& a, const FieldElement& b) {
        auto [x, y] = align(a, b);
        std::vector<u32> r(x.c.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = fp_add(x.c[i], y.c[i], p_);
        return FieldElement{this, x.deg, std::move(r)};
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) {
        auto [x, y] = align(a, b);
        std::vector<u32> r(x.c.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = fp_sub(x.c[i], y.c[i], p_);
        return FieldElement{this, x.deg, std::move(r)};
    }

    FieldElement neg(const FieldElement& a) {
        std::vector<u32> r(a.c.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = fp_neg(a.c[i], p_);
        return FieldElement{this, a.deg, std::move(r)};
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) {
        auto [x, y] = align(a, b);
        std::lock_guard<std::recursive_mutex> g(mu_);
        return FieldElement{this, x.deg, raw_mul(x.deg, x.c, y.c)};
    }

    FieldElement inv(const FieldElement& a) {
        if (a.is_zero()) throw math_error("inverse of zero field element");
        std::lock_guard<std::recursive_mutex> g(mu_);
        return FieldElement{this, a.deg, raw_inv(a.deg, a.c)};
    }

    FieldElement div(const FieldElement& a, const FieldElement& b) { return mul(a, inv(b)); }

    FieldElement pow(const FieldElement& a, Int e) {
        if (e < 0) return pow(inv(a), -e);
        FieldElement r = one(a.deg), base = a;
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return r;
    }

    bool eq(const FieldElement& a, const FieldElement& b) {
        auto [x, y] = align(a, b);
        return x.c == y.c;
    }

    /* x^(p^k) via the cached Frobenius matrix. */
    FieldElement p_power(const FieldElement& a, long long k) {
        std::lock_guard<std::recursive_mutex> g(mu_);
        const Entry& e = entry(a.deg);
        long long kk = ((k % a.deg) + a.deg) % a.deg;
        std::vector<u32> v = a.c;
        for (long long i = 0; i < kk; ++i) v = fp_mat_apply(e.frob, v, p_);
        return FieldElement{this, a.deg, std::move(v)};
    }

    /* x^(q^e) with q = p^a. */
    FieldElement frobenius_q(const FieldElement& x, long long a, long long e = 1) {
        return p_power(x, a * e);
    }

    /* Trace into F_{p^a} (of the extension F_{p^lcm(deg,a)} / F_{p^a}). */
    FieldElement trace_to(const FieldElement& x, int a) {
        FieldElement y = embed(x, static_cast<int>(ilcm(x.deg, a)));
        const int m = y.deg;
        FieldElement acc = zero(m), t = y;
        for (int i = 0; i < m / a; ++i) {
            acc = add(acc, t);
            t = p_power(t, a);
        }
        auto pr = project(acc, a);
        if (!pr) throw math_error("trace did not land in the target subfield");
        return *pr;
    }

    // ---- embeddings ----

    FieldElement embed(const FieldElement& a, int to) {
        if (to == a.deg) return a;
        if (to % a.deg != 0) throw math_error("embedding target degree must be a multiple");
        get_field(to);
        std::lock_guard<std::recursive_mutex> g(mu_);
        const FpMat& E = entry(a.deg).up.at(to); // a.deg rows, `to` cols
        std::vector<u32> r(static_cast<size_t>(to), 0);
        for (int i = 0; i < a.deg; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; j < to; ++j)
                r[j] = static_cast<u32>((r[j] + (u64)a.c[i] * E[i][j]) % p_);
        }
        return FieldElement{this, to, std::move(r)};
    }

    std::optional<FieldElement> project(const FieldElement& a, int to) {
        if (to == a.deg) return a;
        if (a.deg % to != 0) return std::nullopt;
        get_field(a.deg);
        std::lock_guard<std::recursive_mutex> g(mu_);
        const FpMat& E = entry(to).up.at(a.deg); // to rows, a.deg cols
        FpMat Et(static_cast<size_t>(a.deg), std::vector<u32>(static_cast<size_t>(to), 0));
        for (int i = 0; i < to; ++i)
            for (int j = 0; j < a.deg; ++j) Et[j][i] = E[i][j];
        auto sol = fp_solve(std::move(Et), a.c, p_);
        if (!sol) return std::nullopt;
        return FieldElement{this, to, std::move(*sol)};
    }

    /* Smallest-degree representation of the same value. */
    FieldElement reduce_min(const FieldElement& a) {
        for (long long d : divisors_of(a.deg)) {
            if (d == a.deg) break;
            auto pr = project(a, static_cast<int>(d));
            if (pr) return *pr;
        }
        return a;
    }

    /* Canonical total order: minimal degree first, then coefficient tuple. */
    int cmp(const FieldElement& a, const FieldElement& b) {
        FieldElement x = reduce_min(a), y = reduce_min(b);
        if (x.deg != y.deg) return x.deg < y.deg ? -1 : 1;
        for (int i = 0; i < x.deg; ++i)
            if (x.c[i] != y.c[i]) return x.c[i] < y.c[i] ? -1 : 1;
        return 0;
    }

    std::string to_string(const FieldElement& a) {
        FieldElement x = reduce_min(a);
        if (x.is_zero()) return "0";
        if (x.deg == 1) return std::to_string(x.c[0]);
        std::string name = "z" + std::to_string(x.deg);
        std::ostringstream os;
        bool first = true;
        for (int i = x.deg - 1; i >= 0; --i) {
            if (x.c[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) {
                os << x.c[i];
                continue;
            }
            if (x.c[i] != 1) os << x.c[i] << "*";
            os << name;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

    /* All roots in F_{p^c} of the degree-d modulus (its Frobenius orbit). */
    std::vector<FieldElement> modulus_roots_in(int d, int c) {
        if (c % d != 0) throw math_error("no roots: degree does not divide");
        get_field(c);
        std::lock_guard<std::recursive_mutex> g(mu_);
        FieldElement r0 = find_modulus_root(d, c);
        std::vector<FieldElement> orbit{r0};
        for (int i = 1; i < d; ++i) orbit.push_back(p_power(orbit.back(), 1));
        return orbit;
    }

    /* Test hook: every registered triangle a | b | c commutes on generators. */
    void verify_embeddings() {
        std::lock_guard<std::recursive_mutex> g(mu_);
        for (auto& [a, ea] : reg_)
            for (auto& [b, Eab] : ea.up) {
                (void)Eab;
                for (auto& [c, Ebc] : reg_.at(b).up) {
                    (void)Ebc;
                    if (!ea.up.count(static_cast<int>(c))) continue;
                    FieldElement ga = generator(static_cast<int>(a));
                    FieldElement via = embed(embed(ga, static_cast<int>(b)), static_cast<int>(c));
                    FieldElement direct = embed(ga, static_cast<int>(c));
                    if (!(via.c == direct.c))
                        throw math_error("embedding triangle failed to commute");
                }
            }
    }

    /* Value-deterministic stream for a named purpose. */
    SplitMix64 stream(const std::string& tag, u64 k1 = 0, u64 k2 = 0) const {
        u64 h = seed_;
        h = hash_combine(h, p_);
        for (char ch : tag) h = hash_combine(h, static_cast<u64>(static_cast<unsigned char>(ch)));
        h = hash_combine(h, k1);
        h = hash_combine(h, k2);
        return SplitMix64(h);
    }

private:
    struct Entry {
        int m = 0;
        FpPoly f;                // monic modulus of degree m
        std::vector<FpPoly> red; // red[i] = X^(m+i) mod f, each length m
        FpMat frob;              // matrix of x -> x^p, m x m, column j = (z^j)^p
        std::map<int, FpMat> up; // embeddings into registered multiples
    };

    u32 p_;
    u64 seed_;
    u64 cap_;
    std::map<long long, Entry> reg_;
    mutable std::recursive_mutex mu_;

    Entry& entry(long long m) {
        auto it = reg_.find(m);
        if (it == reg_.end()) throw math_error("field degree not registered");
        return it->second;
    }

    std::pair<FieldElement, FieldElement> align(const FieldElement& a, const FieldElement& b) {
        if (a.lat != b.lat || a.lat != this)
            throw math_error("field elements belong to different lattices");
        if (a.deg == b.deg) return {a, b};
        int L = static_cast<int>(ilcm(a.deg, b.deg));
        return {embed(a, L), embed(b, L)};
    }

    std::vector<u32> raw_mul(int m, const std::vector<u32>& a, const std::vector<u32>& b) {
        const Entry& e = entry(m);
        std::vector<u64> conv(2 * static_cast<size_t>(m) - 1, 0);
        for (int i = 0; i < m; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < m; ++j) conv[i + j] = (conv[i + j] + (u64)a[i] * b[j]) % p_;
        }
        std::vector<u32> r(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) r[i] = static_cast<u32>(conv[i]);
        for (int i = 2 * m - 2; i >= m; --i) {
            const u64 v = conv[i];
            if (!v) continue;
            const FpPoly& row = e.red[i - m];
            for (int j = 0; j < m; ++j) r[j] = static_cast<u32>((r[j] + v * row[j]) % p_);
        }
        return r;
    }

    std::vector<u32> raw_inv(int m, const std::vector<u32>& a) {
        // extended Euclid in F_p[X] against the modulus
        const Entry& e = entry(m);
        FpPoly r0 = e.f, r1(a);
        fpp_trim(r1);
        FpPoly s0{}, s1{1};
        while (!r1.empty()) {
            FpPoly q;
            FpPoly rem = r0;
            const u32 linv = fp_inv(r1.back(), p_);
            if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
            while (rem.size() >= r1.size() && !rem.empty()) {
                u32 f = fp_mul(rem.back(), linv, p_);
                size_t shift = rem.size() - r1.size();
                q[shift] = f;
                for (size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] = fp_sub(rem[shift + i], fp_mul(f, r1[i], p_), p_);
                fpp_trim(rem);
            }
            FpPoly s2 = fpp_sub(s0, fpp_mul(q, s1, p_), p_);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (fpp_deg(r0) != 0) throw math_error("element not invertible");
        const u32 scale = fp_inv(r0[0], p_);
        std::vector<u32> out(static_cast<size_t>(m), 0);
        for (size_t i = 0; i < s0.size(); ++i) out[i] = fp_mul(s0[i], scale, p_);
        return out;
    }

    void register_one(int m) {
        // all proper divisors are already registered (get_field guarantees it)
        Entry e;
        e.m = m;
        e.f = (m == 1) ? FpPoly{0, 1} : find_modulus(m);
        e.red.resize(m > 1 ? m - 1 : 0);
        if (m > 1) {
            FpPoly cur(m, 0);
            cur.push_back(1); // X^m
            cur = fpp_rem(cur, e.f, p_);
            cur.resize(m, 0);
            for (int i = 0; i + 1 < m; ++i) {
                e.red[i] = cur;
                FpPoly nxt(m, 0);
                for (int j = 0; j + 1 < m; ++j) nxt[j + 1] = cur[j];
                const u32 top = cur[m - 1];
                if (top)
                    for (int j = 0; j < m; ++j)
                        nxt[j] = fp_sub(nxt[j], fp_mul(top, e.f[j], p_), p_);
                cur = std::move(nxt);
            }
        }
        reg_[m] = std::move(e);
        {
            Entry& en = entry(m);
            en.frob.assign(m, std::vector<u32>(static_cast<size_t>(m), 0));
            std::vector<u32> zp(static_cast<size_t>(m), 0);
            if (m > 1) {
                FpPoly xp = fpp_frob_powmod(FpPoly{0, 1}, 1, en.f, p_);
                xp.resize(m, 0);
                for (int i = 0; i < m; ++i) zp[i] = xp[i];
            }
            std::vector<u32> cur(static_cast<size_t>(m), 0);
            cur[0] = 1;
            for (int j = 0; j < m; ++j) {
                for (int i = 0; i < m; ++i) en.frob[i][j] = cur[i];
                if (j + 1 < m) cur = raw_mul(m, cur, zp);
            }
        }
        std::vector<int> divs, mults;
        for (auto& [d, _] : reg_) {
            if (d < m && m % d == 0) divs.push_back(static_cast<int>(d));
            if (d > m && d % m == 0) mults.push_back(static_cast<int>(d));
        }
        for (int d : divs) choose_embedding(d, m);
        for (int mm : mults) choose_embedding(m, mm);
    }

    FpPoly find_modulus(int m) {
        SplitMix64 rng = stream("modulus", static_cast<u64>(m));
        for (int tries = 0; tries < 200000; ++tries) {
            FpPoly f(m + 1, 0);
            f[m] = 1;
            for (int i = 0; i < m; ++i) f[i] = static_cast<u32>(rng.below(p_));
            if (f[0] == 0) f[0] = 1;
            if (fpp_is_irreducible(f, p_)) return f;
        }
        throw math_error("modulus search failed");
    }

    /* One root of the degree-d modulus inside F_{p^c} (d | c, d > 1), found by
     * seeded equal-degree splitting with samples from the degree-d subfield. */
    FieldElement find_modulus_root(int d, int c) {
        if (d == 1) return zero(c);
        FpMat fd = fp_mat_identity(c);
        for (int i = 0; i < d; ++i) fd = fp_mat_mul(entry(c).frob, fd, p_);
        for (int i = 0; i < c; ++i) fd[i][i] = fp_sub(fd[i][i], 1, p_);
        auto sub_basis = fp_kernel(std::move(fd), p_);
        if (static_cast<int>(sub_basis.size()) != d)
            throw math_error("subfield dimension mismatch in the lattice");
        const FpPoly fdpoly = entry(d).f;
        Poly<FieldElement> F;
        F.c.reserve(fdpoly.size());
        for (u32 coef : fdpoly) {
            std::vector<u32> v(static_cast<size_t>(c), 0);
            v[0] = coef;
            F.c.push_back(FieldElement{this, c, std::move(v)});
        }
        F.trim();
        u64 fhash = 0;
        for (u32 coef : fdpoly) fhash = hash_combine(fhash, coef);
        SplitMix64 rng =
            stream("embroot", static_cast<u64>(d) * 1000003u + static_cast<u64>(c), fhash);
        return split_to_root(std::move(F), sub_basis, d, rng);
    }

    FieldElement split_to_root(Poly<FieldElement> F, const std::vector<std::vector<u32>>& sub_basis,
                               int d, SplitMix64& rng) {
        const int c = F.c.at(0).deg;
        int guard = 0;
        while (F.deg() > 1) {
            if (++guard > 20000) throw math_error("root splitting did not converge");
            std::vector<u32> coords(static_cast<size_t>(c), 0);
            for (const auto& bv : sub_basis) {
                const u32 t = static_cast<u32>(rng.below(p_));
                if (!t) continue;
                for (int i = 0; i < c; ++i)
                    coords[i] = static_cast<u32>((coords[i] + (u64)t * bv[i]) % p_);
            }
            FieldElement a{this, c, coords};
            Poly<FieldElement> g;
            if (p_ != 2) {
                Poly<FieldElement> base = poly_x(F.c[0]) + poly_constant(a);
                Int e = (ipow_int(Int(p_), static_cast<unsigned>(d)) - 1) / 2;
                Poly<FieldElement> s = poly_powmod(base, e, F, F.c[0]);
                g = poly_gcd(s - poly_constant(one(c)), F);
            } else {
                // trace polynomial sum_{i<d} (aX)^(2^i) mod F
                Poly<FieldElement> t = poly_constant(a) * poly_x(F.c[0]);
                Poly<FieldElement> acc = t;
                for (int i = 1; i < d; ++i) {
                    t = poly_mulmod(t, t, F);
                    acc = acc + t;
                }
                g = poly_gcd(acc, F);
            }
            if (g.deg() > 0 && g.deg() < F.deg()) {
                Poly<FieldElement> other = poly_divrem(F, g).first;
                F = (g.deg() <= other.deg()) ? std::move(g) : std::move(other);
            }
        }
        if (F.deg() != 1) throw math_error("root splitting failed");
        return neg(mul(F.c[0], inv(F.c[1])));
    }

    /* Embedding d -> c: the lex-smallest constrained root's power rows. */
    void choose_embedding(int d, int c) {
        Entry& ed = entry(d);
        if (ed.up.count(c)) return;
        FieldElement chosen = zero(c);
        if (d > 1) {
            std::vector<FieldElement> cands;
            cands.push_back(find_modulus_root(d, c));
            for (int i = 1; i < d; ++i) cands.push_back(p_power(cands.back(), 1));
            // compatibility with every registered proper divisor of d
            struct Constraint {
                FpPoly gimg;             // coords of gen_dd inside F_d
                std::vector<u32> target; // coords of its image inside F_c
            };
            std::vector<Constraint> cons;
            for (auto& [dd, edd] : reg_) {
                if (dd <= 1 || dd >= d || d % dd != 0) continue;
                Constraint cn;
                cn.gimg.assign(edd.up.at(d)[1].begin(), edd.up.at(d)[1].end());
                fpp_trim(cn.gimg);
                cn.target = edd.up.at(c)[1];
                cons.push_back(std::move(cn));
            }
            bool found = false;
            for (const auto& r : cands) {
                bool ok = true;
                for (const auto& cn : cons) {
                    FieldElement val = zero(c);
                    for (auto it = cn.gimg.rbegin(); it != cn.gimg.rend(); ++it) {
                        val = mul(val, r);
                        if (*it) {
                            std::vector<u32> kv(static_cast<size_t>(c), 0);
                            kv[0] = *it;
                            val = add(val, FieldElement{this, c, std::move(kv)});
                        }
                    }
                    if (!(val.c == cn.target)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                if (!found || std::lexicographical_compare(r.c.begin(), r.c.end(), chosen.c.begin(),
                                                           chosen.c.end())) {
                    chosen = r;
                    found = true;
                }
            }
            if (!found) throw math_error("no compatible embedding root");
        }
        FpMat E(static_cast<size_t>(d), std::vector<u32>(static_cast<size_t>(c), 0));
        FieldElement pw = one(c);
        for (int i = 0; i < d; ++i) {
            E[i] = pw.c;
            if (i + 1 < d) pw = mul(pw, chosen);
        }
        ed.up[c] = std::move(E);
    }
};

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return a.lat->add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a.lat->sub(a, b); }
inline FieldElement operator-(const FieldElement& a) { return a.lat->neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.lat->mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a.lat->div(a, b); }
inline bool operator==(const FieldElement& a, const FieldElement& b) { return a.lat->eq(a, b); }
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

inline FieldElement ring_zero_like(const FieldElement& x) { return x.lat->zero(x.deg); }
inline FieldElement ring_one_like(const FieldElement& x) { return x.lat->one(x.deg); }
inline bool ring_is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement ring_inv(const FieldElement& x) { return x.lat->inv(x); }
inline FieldElement ring_pow(const FieldElement& x, Int e) { return x.lat->pow(x, std::move(e)); }
inline u32 ring_char(const FieldElement& x) { return x.lat->p(); }
inline FieldElement ring_from_int(const FieldElement& like, const Int& v) {
    Int r = v % like.lat->p();
    if (r < 0) r += like.lat->p();
    FieldElement k = like.lat->from_int(r.convert_to<long long>());
    return like.lat->embed(k, like.deg);
}
/* p-th power along the fast Frobenius path. */
inline FieldElement ring_frob(const FieldElement& x) { return x.lat->p_power(x, 1); }

} // namespace asw
