#include <catch2/catch_amalgamated.hpp>

#include "asw/towerpoly.hpp"

using namespace asw;

namespace {

Curve golden_hyper(FieldLattice& lat) {
    FPoly f;
    f.c = {lat.one(1), lat.zero(1), lat.one(1), lat.zero(1), lat.zero(1), lat.one(1)};
    return curve_hyperelliptic(lat, f);
}

Curve nilpotent_cubic(FieldLattice& lat) {
    FPoly f;
    f.c = {lat.zero(1), lat.from_int(2), lat.zero(1), lat.one(1)};
    return curve_hyperelliptic(lat, f);
}

H1EtBasis golden_basis(const Curve& H, int n) {
    FieldLattice& lat = *H.lat;
    Place P02 = place_finite(H, lat.zero(1), lat.from_int(2));
    Place P22 = place_finite(H, lat.from_int(2), lat.from_int(2));
    H1Basis B = h1_basis_from_points(H, {P02, P22});
    Matrix<FieldElement> HW = mat_make(2, 2, lat.zero(1));
    HW.at(0, 0) = lat.one(1);
    return compute_h1_from_hw(H, n, B.pts, B, HW);
}

} // namespace

TEST_CASE("generator power rewrites to the defining right-hand side", "[towerpoly]") {
    FieldLattice lat(3, 7601);
    Curve H = golden_hyper(lat);
    H1EtBasis B = golden_basis(H, 2);
    REQUIRE(B.rank() == 1);
    auto R = tr_make(B);

    TowerPoly t0 = tp_var(*R, 0, 0);
    TowerPoly t1 = tp_var(*R, 0, 1);
    // t_0^3 = t_0 + h_0 and t_1^3 = t_1 - U_1(t_0) + h_1, both via tp_mul.
    REQUIRE(tp_pow(t0, 3) == R->rhs[static_cast<size_t>(R->var(0, 0))]);
    REQUIRE(tp_pow(t1, 3) == R->rhs[static_cast<size_t>(R->var(0, 1))]);
    TowerPoly expect0 = tp_add(t0, tp_const(*R, B.h[0][0]));
    REQUIRE(tp_pow(t0, 3) == expect0);
    // U_1 = t_0^7 - t_0^5 for p = 3: check the level-one rule explicitly.
    TowerPoly u1 = tp_sub(tp_pow(t0, 7), tp_pow(t0, 5));
    TowerPoly expect1 = tp_add(tp_sub(t1, u1), tp_const(*R, B.h[0][1]));
    REQUIRE(tp_pow(t1, 3) == expect1);
}

TEST_CASE("tower generators satisfy the Witt equation inside the ring", "[towerpoly]") {
    FieldLattice lat(3, 7602);
    Curve H = golden_hyper(lat);
    const int n = 2;
    H1EtBasis B = golden_basis(H, n);
    auto R = tr_make(B);
    const WittRing& W = WittRing::get(3, n);

    // ℘(t) computed with the full structure polynomials must reproduce h.
    // This exercises a different route than the rewrite rules' construction.
    WittVector<TowerPoly> t;
    for (int j = 0; j < n; ++j) t.a.push_back(tp_var(*R, 0, j));
    WittVector<TowerPoly> h;
    for (int j = 0; j < n; ++j) h.a.push_back(tp_const(*R, B.h[0][static_cast<size_t>(j)]));
    REQUIRE(witt_eq(witt_wp(W, t), h));
}

TEST_CASE("reduced ring obeys the ring laws", "[towerpoly]") {
    FieldLattice lat(3, 7603);
    Curve H = golden_hyper(lat);
    H1EtBasis B = golden_basis(H, 2);
    auto R = tr_make(B);

    TowerPoly t0 = tp_var(*R, 0, 0);
    TowerPoly t1 = tp_var(*R, 0, 1);
    TowerPoly a = tp_add(t0, tp_const(*R, cf_x(H)));
    TowerPoly b = tp_add(tp_mul(tp_const(*R, cf_y(H)), tp_pow(t0, 2)), tp_one(*R));
    TowerPoly c = tp_mul(t1, tp_sub(t0, tp_one(*R)));

    REQUIRE(tp_mul(a, b) == tp_mul(b, a));
    REQUIRE(tp_mul(tp_mul(a, b), c) == tp_mul(a, tp_mul(b, c)));
    REQUIRE(tp_mul(tp_add(a, b), c) == tp_add(tp_mul(a, c), tp_mul(b, c)));
    REQUIRE(tp_sub(a, a).is_zero());
    REQUIRE(tp_mul(a, tp_zero(*R)).is_zero());
    REQUIRE(tp_mul(a, tp_one(*R)) == a);
    // Every exponent in a product stays below p.
    TowerPoly big = tp_mul(tp_pow(a, 4), tp_pow(c, 3));
    for (const auto& [m, co] : big.t)
        for (u16 e : m) REQUIRE(e < 3);
}

TEST_CASE("frobenius hook is the p-power endomorphism", "[towerpoly]") {
    FieldLattice lat(3, 7604);
    Curve H = golden_hyper(lat);
    H1EtBasis B = golden_basis(H, 2);
    auto R = tr_make(B);

    TowerPoly a = tp_add(tp_var(*R, 0, 0), tp_const(*R, cf_y(H)));
    TowerPoly b = tp_mul(tp_var(*R, 0, 1), tp_const(*R, cf_x(H)));
    REQUIRE(ring_frob(a) == tp_pow(a, 3));
    REQUIRE(ring_frob(tp_add(a, b)) == tp_add(ring_frob(a), ring_frob(b)));
    REQUIRE(ring_frob(tp_mul(a, b)) == tp_mul(ring_frob(a), ring_frob(b)));
    REQUIRE(ring_char(a) == 3);
    REQUIRE(ring_from_int(a, Int(5)) == tp_const(*R, ring_from_int(cf_zero(H), Int(5))));
}

TEST_CASE("translation by an integer Witt vector respects the tower relations", "[towerpoly]") {
    FieldLattice lat(3, 7605);
    Curve H = golden_hyper(lat);
    const int n = 2;
    H1EtBasis B = golden_basis(H, n);
    auto R = tr_make(B);
    const WittRing& W = WittRing::get(3, n);

    WittVector<TowerPoly> t;
    for (int j = 0; j < n; ++j) t.a.push_back(tp_var(*R, 0, j));
    WittVector<TowerPoly> h;
    for (int j = 0; j < n; ++j) h.a.push_back(tp_const(*R, B.h[0][static_cast<size_t>(j)]));

    // c in W_n(F_p) is fixed by Frobenius, so ℘(t ⊕ c) = ℘(t) = h: the
    // translated generators satisfy the same equations, which is what makes
    // t -> t ⊕ c extend to a ring automorphism.
    for (int k = 1; k < 9; ++k) {
        WittVector<TowerPoly> c = witt_from_int(W, Int(k), n, tp_one(*R));
        WittVector<TowerPoly> tc = witt_add(W, t, c);
        REQUIRE(witt_eq(witt_wp(W, tc), h));
    }
}

TEST_CASE("substitution along translated generators is a ring map", "[towerpoly]") {
    FieldLattice lat(3, 7606);
    Curve H = golden_hyper(lat);
    const int n = 2;
    H1EtBasis B = golden_basis(H, n);
    auto R = tr_make(B);
    const WittRing& W = WittRing::get(3, n);

    WittVector<TowerPoly> t;
    for (int j = 0; j < n; ++j) t.a.push_back(tp_var(*R, 0, j));
    WittVector<TowerPoly> tc = witt_add(W, t, witt_from_int(W, Int(4), n, tp_one(*R)));
    std::vector<TowerPoly> images = tc.a;
    auto ident = [](const CurveFun& c) { return c; };

    TowerPoly a = tp_add(tp_mul(tp_var(*R, 0, 0), tp_const(*R, cf_y(H))), tp_var(*R, 0, 1));
    TowerPoly b = tp_sub(tp_pow(tp_var(*R, 0, 0), 2), tp_const(*R, cf_x(H)));
    TowerPoly sa = tp_subst(a, *R, images, ident);
    TowerPoly sb = tp_subst(b, *R, images, ident);
    REQUIRE(tp_subst(tp_add(a, b), *R, images, ident) == tp_add(sa, sb));
    REQUIRE(tp_subst(tp_mul(a, b), *R, images, ident) == tp_mul(sa, sb));
    // Identity images give the identity map.
    std::vector<TowerPoly> idim;
    for (int j = 0; j < n; ++j) idim.push_back(tp_var(*R, 0, j));
    REQUIRE(tp_subst(a, *R, idim, ident) == a);
}

TEST_CASE("rendering is deterministic and degree-ordered", "[towerpoly]") {
    FieldLattice lat(3, 7607);
    Curve H = golden_hyper(lat);
    H1EtBasis B = golden_basis(H, 2);
    auto R = tr_make(B);

    REQUIRE(tp_to_string(tp_zero(*R)) == "0");
    REQUIRE(tp_to_string(tp_one(*R)) == "1");
    TowerPoly t0 = tp_var(*R, 0, 0);
    TowerPoly t1 = tp_var(*R, 0, 1);
    REQUIRE(tp_to_string(t0) == "t0_0");
    TowerPoly s = tp_add(tp_pow(t1, 2), tp_add(t0, tp_one(*R)));
    REQUIRE(tp_to_string(s) == "t0_1^2 + t0_0 + 1");
    TowerPoly m = tp_mul(tp_const(*R, cf_from_rf(H, rf_const(lat.from_int(2)))), tp_mul(t0, t1));
    REQUIRE(tp_to_string(m) == "2*t0_0*t0_1");
}

TEST_CASE("mixing rings is rejected", "[towerpoly]") {
    FieldLattice lat(3, 7608);
    Curve H = golden_hyper(lat);
    H1EtBasis B = golden_basis(H, 2);
    auto R1 = tr_make(B);
    auto R2 = tr_make(B);
    REQUIRE_THROWS_AS(tp_add(tp_var(*R1, 0, 0), tp_var(*R2, 0, 0)), input_error);
}

TEST_CASE("rank zero ring carries constants only", "[towerpoly]") {
    FieldLattice lat(3, 7609);
    Curve E = nilpotent_cubic(lat);
    Place P00 = place_finite(E, lat.zero(1), lat.zero(1));
    H1Basis B0 = h1_basis_from_points(E, {P00});
    Matrix<FieldElement> HW = mat_make(1, 1, lat.zero(1));
    H1EtBasis B = compute_h1_from_hw(E, 2, B0.pts, B0, HW);
    REQUIRE(B.rank() == 0);
    auto R = tr_make(B);
    REQUIRE(R->vars() == 0);
    TowerPoly a = tp_const(*R, cf_x(E));
    REQUIRE(tp_mul(a, a) == tp_const(*R, cf_mul(cf_x(E), cf_x(E))));
    REQUIRE(tp_to_string(tp_one(*R)) == "1");
}
