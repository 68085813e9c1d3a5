#pragma once

/* Artin-Schreier-Witt tower equations for the maximal abelian étale cover of
 * exponent p^n.
 *
 * With (r, h) a basis of H¹ét(X, ℤ/pⁿℤ) and its companion functions, the
 * cover's function field is generated by t_0..t_{n-1} per basis branch with
 * ℘(t) = h as Witt vectors. Equating coordinate j and isolating t_j gives
 *
 *   t_j^p - t_j = -U_j(t_0, ..., t_{j-1}) + h_j
 *
 * where U_j is the universal integer polynomial with (F(r) - r)_j =
 * r_j^p - r_j + U_j(r_{<j}) in W_{j+1} of any characteristic-p ring. U_j is
 * the carry polynomial of F(x) - x - y with the y block set to zero; it is
 * unique (the ghost map over ℤ is injective), so the integer-coefficient
 * display is canonical. Working-field equations reduce it mod p; both forms
 * are rendered deterministically (total degree descending, lexicographic
 * ties, explicit ^). */

#include "asw/wittadele.hpp"

namespace asw {

/* U_j over ℤ in j variables t_0..t_{j-1} (zero when j = 0). */
inline ZPoly tower_universal_int(u32 p, int j) {
    if (j < 0) throw input_error("tower level must be nonnegative");
    if (j == 0) return zp_zero(0);
    ZPoly c = WittRing::get(p, j + 1).carry_int(j); // 2j vars: x block, y block
    for (int v = j; v < 2 * j; ++v) c = zp_set_zero(c, static_cast<size_t>(v));
    ZPoly r = zp_zero(static_cast<size_t>(j));
    for (const auto& [m, co] : c.t) {
        Monomial mm(m.begin(), m.begin() + j);
        r.t.emplace(std::move(mm), co);
    }
    return r;
}

inline ZPoly tower_universal_modp(u32 p, int j) { return zp_mod(tower_universal_int(p, j), p); }

/* One defining equation t_j^p - t_j = -U_j(t_{<j}) + h of branch i. */
struct TowerEquation {
    int branch = 0;  // basis element index, 0-based
    int index = 0;   // Witt level j: the generator t_j of this branch
    ZPoly universal; // U_j over ℤ in t_0..t_{j-1}; the equation subtracts it
    CurveFun h;      // branch-specific function term
};

struct CoverTower {
    const Curve* X = nullptr;
    int level = 0; // n
    H1EtBasis basis;
    std::vector<TowerEquation> eqs; // branch-major: (i, 0), (i, 1), ..., (i, n-1)
    int rank() const { return basis.rank(); }
    Int degree() const {
        return ipow_int(Int(X->lat->p()), static_cast<unsigned>(level * basis.rank()));
    }
};

inline std::vector<std::string> tower_var_names(int j) {
    std::vector<std::string> names;
    for (int i = 0; i < j; ++i) names.push_back("t_" + std::to_string(i));
    return names;
}

/* "t_j^p - t_j = <poly> + <h>". Generators are named per branch (each branch
 * is an independent cyclic extension); integer_coeffs selects the canonical
 * ℤ form of the universal part over its mod-p reduction. */
inline std::string tower_equation_string(const TowerEquation& e, u32 p, bool integer_coeffs) {
    std::ostringstream os;
    os << "t_" << e.index << "^" << p << " - t_" << e.index << " = ";
    ZPoly u = integer_coeffs ? -e.universal : zp_mod(-e.universal, p);
    bool have_poly = !u.is_zero();
    if (have_poly) os << zp_to_string(u, tower_var_names(e.index));
    if (!ring_is_zero(e.h)) {
        std::string hs = cf_to_string(e.h);
        if (have_poly) os << " + ";
        os << (hs.find(' ') != std::string::npos ? "(" + hs + ")" : hs);
    } else if (!have_poly) {
        os << "0";
    }
    return os.str();
}

/* Full pipeline: H¹ét basis from the Hasse-Witt matrix, then one equation
 * per basis branch and Witt level. */
inline CoverTower compute_maximal_cover(const Curve& X, int n, const std::vector<Place>& S,
                                        const H1Basis& B_O, const Matrix<FieldElement>& HW) {
    const u32 p = X.lat->p();
    CoverTower T;
    T.X = &X;
    T.level = n;
    T.basis = compute_h1_from_hw(X, n, S, B_O, HW);
    for (int i = 0; i < T.basis.rank(); ++i)
        for (int j = 0; j < n; ++j) {
            TowerEquation e;
            e.branch = i;
            e.index = j;
            e.universal = tower_universal_int(p, j);
            if (Int(e.universal.total_degree()) >
                ipow_int(Int(p), static_cast<unsigned>(j + 1)))
                throw math_error("universal tower polynomial exceeds its degree bound");
            e.h = T.basis.h[static_cast<size_t>(i)][static_cast<size_t>(j)];
            T.eqs.push_back(std::move(e));
        }
    return T;
}

} // namespace asw
