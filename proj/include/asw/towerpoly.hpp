#pragma once

/* The coordinate ring of the degree-p^{ns} cover as a quotient polynomial
 * ring: K_X[t_j^(i)] / (t_j^p = t_j - U_j(t_{<j}) + h_j), one block of n
 * generators per basis branch i. Elements are kept in reduced form, every
 * exponent below p, so equality of reduced representations decides equality
 * in the quotient (the monomials with exponents < p form a K_X-basis).
 *
 * Rewriting replaces t_v^p at the highest offending variable first. A step
 * never touches variables above v and strictly lowers the exponent at v
 * (the rule's right side is linear in t_v), so the exponent tuples drop in
 * the lexicographic well-order and reduction terminates.
 *
 * TowerPoly carries a pointer to its ring, which makes the generic Witt
 * machinery applicable: WittVector<TowerPoly> works out of the box, and
 * ℘(t^(i)) = h^(i) can be certified inside the ring. */

#include <map>
#include <memory>

#include "asw/tower.hpp"

namespace asw {

struct TowerPoly;

struct TowerRing {
    const Curve* X = nullptr;
    u32 p = 0;
    int rank = 0;  // branches s
    int level = 0; // Witt length n
    std::vector<TowerPoly> rhs; // rhs[i * level + j] = reduced image of t_j^(i)^p

    TowerRing() = default;
    TowerRing(const TowerRing&) = delete;            // rhs points back here
    TowerRing& operator=(const TowerRing&) = delete;
    int vars() const { return rank * level; }
    int var(int branch, int index) const { return branch * level + index; }
};

struct TowerPoly {
    const TowerRing* R = nullptr;
    std::map<std::vector<u16>, CurveFun> t; // reduced exponents, no zero coefficients

    bool is_zero() const { return t.empty(); }
};

inline TowerPoly tp_zero(const TowerRing& R) { return TowerPoly{&R, {}}; }

inline TowerPoly tp_const(const TowerRing& R, CurveFun c) {
    TowerPoly r{&R, {}};
    if (!ring_is_zero(c)) r.t.emplace(std::vector<u16>(static_cast<size_t>(R.vars()), 0), std::move(c));
    return r;
}

inline TowerPoly tp_one(const TowerRing& R) { return tp_const(R, cf_one(*R.X)); }

inline TowerPoly tp_var(const TowerRing& R, int branch, int index) {
    if (branch < 0 || branch >= R.rank || index < 0 || index >= R.level)
        throw input_error("tower generator out of range");
    TowerPoly r{&R, {}};
    std::vector<u16> m(static_cast<size_t>(R.vars()), 0);
    m[static_cast<size_t>(R.var(branch, index))] = 1;
    r.t.emplace(std::move(m), cf_one(*R.X));
    return r;
}

namespace detail {

inline void tp_accum(std::map<std::vector<u16>, CurveFun>& dst, const std::vector<u16>& m,
                     const CurveFun& c) {
    auto it = dst.find(m);
    if (it == dst.end()) {
        if (!ring_is_zero(c)) dst.emplace(m, c);
        return;
    }
    it->second = cf_add(it->second, c);
    if (ring_is_zero(it->second)) dst.erase(it);
}

/* Rewrite until every exponent is < p. Highest variable first; see header. */
inline TowerPoly tp_reduce(const TowerRing& R, std::map<std::vector<u16>, CurveFun> pending) {
    TowerPoly out{&R, {}};
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::vector<u16>& m = node.key();
        const CurveFun& c = node.mapped();
        int v = -1;
        for (int i = R.vars() - 1; i >= 0; --i)
            if (m[static_cast<size_t>(i)] >= R.p) {
                v = i;
                break;
            }
        if (v < 0) {
            tp_accum(out.t, m, c);
            continue;
        }
        std::vector<u16> base = m;
        base[static_cast<size_t>(v)] = static_cast<u16>(base[static_cast<size_t>(v)] - R.p);
        for (const auto& [mr, cr] : R.rhs[static_cast<size_t>(v)].t) {
            std::vector<u16> prod = base;
            for (size_t i = 0; i < prod.size(); ++i)
                prod[i] = static_cast<u16>(prod[i] + mr[i]);
            tp_accum(pending, prod, cf_mul(c, cr));
        }
    }
    return out;
}

inline const TowerRing& tp_common(const TowerPoly& a, const TowerPoly& b) {
    if (a.R == nullptr || a.R != b.R) throw input_error("tower polynomials from different rings");
    return *a.R;
}

} // namespace detail

inline TowerPoly tp_add(const TowerPoly& a, const TowerPoly& b) {
    detail::tp_common(a, b);
    TowerPoly r = a;
    for (const auto& [m, c] : b.t) detail::tp_accum(r.t, m, c);
    return r;
}

inline TowerPoly tp_neg(const TowerPoly& a) {
    TowerPoly r = a;
    for (auto& [m, c] : r.t) c = cf_neg(c);
    return r;
}

inline TowerPoly tp_sub(const TowerPoly& a, const TowerPoly& b) { return tp_add(a, tp_neg(b)); }

inline TowerPoly tp_mul(const TowerPoly& a, const TowerPoly& b) {
    const TowerRing& R = detail::tp_common(a, b);
    std::map<std::vector<u16>, CurveFun> raw;
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) {
            std::vector<u16> m = ma;
            for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<u16>(m[i] + mb[i]);
            detail::tp_accum(raw, m, cf_mul(ca, cb));
        }
    return detail::tp_reduce(R, std::move(raw));
}

inline TowerPoly tp_pow(const TowerPoly& a, Int e) {
    if (e < 0) throw input_error("negative tower polynomial power");
    TowerPoly r = tp_one(*a.R);
    TowerPoly b = a;
    while (e > 0) {
        if ((e & 1) != 0) r = tp_mul(r, b);
        e >>= 1;
        if (e > 0) b = tp_mul(b, b);
    }
    return r;
}

inline bool tp_eq(const TowerPoly& a, const TowerPoly& b) {
    detail::tp_common(a, b);
    if (a.t.size() != b.t.size()) return false;
    auto ia = a.t.begin();
    auto ib = b.t.begin();
    for (; ia != a.t.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!cf_eq(ia->second, ib->second)) return false;
    }
    return true;
}

/* Ring hooks; Frobenius is the p-power map, an endomorphism in char p. */
inline TowerPoly ring_zero_like(const TowerPoly& x) { return tp_zero(*x.R); }
inline TowerPoly ring_one_like(const TowerPoly& x) { return tp_one(*x.R); }
inline bool ring_is_zero(const TowerPoly& x) { return x.is_zero(); }
inline u32 ring_char(const TowerPoly& x) { return x.R->p; }
inline TowerPoly ring_from_int(const TowerPoly& like, const Int& v) {
    return tp_const(*like.R, ring_from_int(cf_zero(*like.R->X), v));
}
inline TowerPoly ring_frob(const TowerPoly& x) { return tp_pow(x, Int(x.R->p)); }
inline TowerPoly operator+(const TowerPoly& a, const TowerPoly& b) { return tp_add(a, b); }
inline TowerPoly operator-(const TowerPoly& a, const TowerPoly& b) { return tp_sub(a, b); }
inline TowerPoly operator-(const TowerPoly& a) { return tp_neg(a); }
inline TowerPoly operator*(const TowerPoly& a, const TowerPoly& b) { return tp_mul(a, b); }
inline bool operator==(const TowerPoly& a, const TowerPoly& b) { return tp_eq(a, b); }
inline bool operator!=(const TowerPoly& a, const TowerPoly& b) { return !tp_eq(a, b); }

/* Substitute generator images and map coefficients through `base`; the
 * images must live in `to`. Used to express ring maps such as cover
 * automorphisms (base = pullback along the base-curve automorphism). */
template <class BaseMap>
TowerPoly tp_subst(const TowerPoly& x, const TowerRing& to,
                   const std::vector<TowerPoly>& images, BaseMap&& base) {
    if (static_cast<int>(images.size()) != x.R->vars())
        throw input_error("substitution image count mismatch");
    for (const TowerPoly& im : images)
        if (im.R != &to) throw input_error("substitution image in the wrong ring");
    // Power cache per variable; exponents are < p after reduction.
    std::vector<std::vector<TowerPoly>> pows(images.size());
    TowerPoly out = tp_zero(to);
    for (const auto& [m, c] : x.t) {
        TowerPoly term = tp_const(to, base(c));
        for (size_t v = 0; v < images.size(); ++v) {
            u16 e = m[v];
            if (e == 0) continue;
            auto& pv = pows[v];
            if (pv.empty()) pv.push_back(images[v]); // pv[k] = images[v]^{k+1}
            while (pv.size() < e) pv.push_back(tp_mul(pv.back(), images[v]));
            term = tp_mul(term, pv[static_cast<size_t>(e - 1)]);
        }
        out = tp_add(out, term);
    }
    return out;
}

/* Generator names "t{branch}_{index}"; unambiguous across branches. */
inline std::string tp_var_name(const TowerRing& R, int v) {
    return "t" + std::to_string(v / R.level) + "_" + std::to_string(v % R.level);
}

/* Deterministic rendering: total degree descending, lexicographic ties on
 * the exponent tuples, coefficients parenthesised unless they are plain. */
inline std::string tp_to_string(const TowerPoly& x) {
    if (x.t.empty()) return "0";
    const TowerRing& R = *x.R;
    std::vector<std::pair<std::vector<u16>, const CurveFun*>> order;
    for (const auto& [m, c] : x.t) order.emplace_back(m, &c);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (u16 e : a.first) da += e;
        for (u16 e : b.first) db += e;
        if (da != db) return da > db;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, pc] : order) {
        if (!first) os << " + ";
        first = false;
        std::string cs = cf_to_string(*pc);
        bool trivial_coeff = cs == "1";
        int deg = 0;
        for (u16 e : m) deg += e;
        if (!trivial_coeff || deg == 0) {
            bool wrap = cs.find_first_of(" +*/") != std::string::npos;
            os << (wrap ? "(" + cs + ")" : cs);
        }
        bool need_star = !trivial_coeff && deg > 0;
        for (int v = 0; v < R.vars(); ++v) {
            u16 e = m[static_cast<size_t>(v)];
            if (e == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << tp_var_name(R, v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

/* Build the quotient ring for a computed basis. Heap placement keeps the
 * ring address stable: its own rhs entries point back at it. rhs entries
 * are produced in ascending Witt index, so each level's universal
 * polynomial is evaluated with the lower levels' rules already in place. */
inline std::unique_ptr<TowerRing> tr_make(const H1EtBasis& B) {
    auto H = std::make_unique<TowerRing>();
    TowerRing& R = *H;
    R.X = B.X;
    R.p = B.X->lat->p();
    R.rank = B.rank();
    R.level = B.level;
    R.rhs.resize(static_cast<size_t>(R.vars()), TowerPoly{&R, {}});
    for (int i = 0; i < R.rank; ++i)
        for (int j = 0; j < R.level; ++j) {
            // t_j^p = t_j - U_j(t_0..t_{j-1}) + h_j, reduced.
            TowerPoly rhs = tp_var(R, i, j);
            if (j > 0) {
                ZPoly U = tower_universal_modp(R.p, j);
                std::vector<TowerPoly> args;
                for (int k = 0; k < j; ++k) args.push_back(tp_var(R, i, k));
                rhs = tp_sub(rhs, zp_eval(U, args, tp_zero(R)));
            }
            rhs = tp_add(rhs, tp_const(R, B.h[static_cast<size_t>(i)][static_cast<size_t>(j)]));
            R.rhs[static_cast<size_t>(R.var(i, j))] = std::move(rhs);
        }
    return H;
}

} // namespace asw
