#include <catch2/catch_amalgamated.hpp>

#include "asw/ratfun.hpp"
#include "asw/series.hpp"

using namespace asw;

namespace {

FieldElement rnd_elt(FieldLattice& lat, SplitMix64& rng, int m) {
    std::vector<u32> d(static_cast<size_t>(m));
    for (auto& x : d) x = static_cast<u32>(rng.below(lat.p()));
    return lat.make(m, d);
}

FPoly rnd_poly(FieldLattice& lat, SplitMix64& rng, int m, int maxdeg) {
    FPoly f;
    int d = static_cast<int>(rng.below(static_cast<u64>(maxdeg) + 1));
    for (int i = 0; i <= d; ++i) f.c.push_back(rnd_elt(lat, rng, m));
    f.trim();
    return f;
}

RatFun rnd_rat(FieldLattice& lat, SplitMix64& rng, int m, int maxdeg) {
    FPoly den;
    do {
        den = rnd_poly(lat, rng, m, maxdeg);
    } while (den.is_zero());
    return rf_normal(rnd_poly(lat, rng, m, maxdeg), den);
}

} // namespace

TEST_CASE("rational functions stay in lowest terms with monic denominators") {
    FieldLattice lat(5, 7001);
    FPoly x = poly_x(lat.zero(1));
    FPoly three = poly_constant(lat.from_int(3));
    // 3(x^2 - 1) / 3(x - 1) reduces to x + 1.
    RatFun r = rf_normal(three * (x * x - poly_constant(lat.one(1))),
                         three * (x - poly_constant(lat.one(1))));
    REQUIRE(r.den.deg() == 0);
    REQUIRE(r.den.c[0] == lat.one(1));
    REQUIRE(r.num == x + poly_constant(lat.one(1)));

    SplitMix64 rng(901);
    for (int trial = 0; trial < 30; ++trial) {
        RatFun a = rnd_rat(lat, rng, 2, 4), b = rnd_rat(lat, rng, 2, 4);
        for (const RatFun& v : {a + b, a * b, a - b}) {
            if (v.is_zero()) {
                REQUIRE(v.num.is_zero());
                REQUIRE(v.den.deg() == 0);
                continue;
            }
            REQUIRE(v.den.lead() == lat.one(1));
            REQUIRE(poly_gcd(v.num, v.den).deg() == 0);
        }
    }
}

TEST_CASE("rational function field laws") {
    FieldLattice lat(3, 7002);
    SplitMix64 rng(902);
    RatFun one = rf_const(lat.one(1));
    for (int trial = 0; trial < 20; ++trial) {
        RatFun a = rnd_rat(lat, rng, 2, 3), b = rnd_rat(lat, rng, 2, 3),
               c = rnd_rat(lat, rng, 2, 3);
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == rf_const(lat.zero(1)));
        if (!a.is_zero()) {
            REQUIRE(a * ring_inv(a) == one);
            REQUIRE((b / a) * a == b);
        }
    }
    REQUIRE_THROWS_AS(ring_inv(rf_const(lat.zero(1))), math_error);
}

TEST_CASE("valuations at finite points and infinity are additive") {
    FieldLattice lat(5, 7003);
    FPoly x = poly_x(lat.zero(1));
    FieldElement one = lat.one(1);
    // f = (x - 1)^2 / x
    RatFun f = rf_normal((x - poly_constant(one)) * (x - poly_constant(one)), x);
    REQUIRE(rf_val_at(f, one) == 2);
    REQUIRE(rf_val_at(f, lat.zero(1)) == -1);
    REQUIRE(rf_val_at(f, lat.from_int(2)) == 0);
    REQUIRE(rf_val_inf(f) == -1);

    SplitMix64 rng(903);
    for (int trial = 0; trial < 25; ++trial) {
        RatFun a = rnd_rat(lat, rng, 1, 4), b = rnd_rat(lat, rng, 1, 4);
        if (a.is_zero() || b.is_zero()) continue;
        FieldElement x0 = rnd_elt(lat, rng, 1);
        REQUIRE(rf_val_at(a * b, x0) == rf_val_at(a, x0) + rf_val_at(b, x0));
        REQUIRE(rf_val_inf(a * b) == rf_val_inf(a) + rf_val_inf(b));
        REQUIRE(rf_val_at(a * b, x0) >= std::min(rf_val_at(a, x0), rf_val_at(b, x0)));
    }
}

TEST_CASE("p-power maps on rational functions match repeated multiplication") {
    FieldLattice lat(3, 7004);
    SplitMix64 rng(904);
    for (int trial = 0; trial < 10; ++trial) {
        RatFun a = rnd_rat(lat, rng, 2, 3);
        RatFun cube = a * a * a;
        REQUIRE(rf_ppow(a, 1) == cube);
        REQUIRE(rf_ppow(a, 2) == cube * cube * cube);
        REQUIRE(rf_ppow(rf_ppow(a, 1), 1) == rf_ppow(a, 2));
        REQUIRE(rf_ppow(a, 0) == a);
        if (!a.is_zero()) {
            REQUIRE(rf_ppow(a, 1).den.lead() == lat.one(1));
            REQUIRE(poly_gcd(rf_ppow(a, 1).num, rf_ppow(a, 1).den).deg() == 0);
        }
    }
    REQUIRE_THROWS_AS(rf_ppow(rf_x(lat), -1), input_error);
}

TEST_CASE("derivatives satisfy the Leibniz rule") {
    FieldLattice lat(5, 7005);
    SplitMix64 rng(905);
    FPoly x = poly_x(lat.zero(1));
    RatFun xr = rf_x(lat);
    // d/dx x^3 = 3x^2
    REQUIRE(rf_derivative(xr * xr * xr) == rf_normal(poly_constant(lat.from_int(3)) * x * x,
                                                     poly_constant(lat.one(1))));
    // d/dx x^5 = 0 in characteristic 5
    RatFun x5 = xr * xr * xr * xr * xr;
    REQUIRE(rf_derivative(x5).is_zero());
    for (int trial = 0; trial < 15; ++trial) {
        RatFun a = rnd_rat(lat, rng, 1, 4), b = rnd_rat(lat, rng, 1, 4);
        REQUIRE(rf_derivative(a * b) == rf_derivative(a) * b + a * rf_derivative(b));
        REQUIRE(rf_derivative(a + b) == rf_derivative(a) + rf_derivative(b));
    }
}

TEST_CASE("rational function evaluation and pole detection") {
    FieldLattice lat(7, 7006);
    FPoly x = poly_x(lat.zero(1));
    RatFun f = rf_normal(x * x + poly_constant(lat.one(1)), x - poly_constant(lat.from_int(2)));
    FieldElement x0 = lat.from_int(3);
    REQUIRE(rf_eval(f, x0) == lat.from_int(10) / lat.from_int(1));
    REQUIRE_THROWS_AS(rf_eval(f, lat.from_int(2)), math_error);
}

TEST_CASE("series constructors keep the normalized representation") {
    FieldLattice lat(5, 7010);
    FieldElement z = lat.zero(1), o = lat.one(1);
    LSeries s = ls_make(lat, -1, {z, z, o, lat.from_int(2)}, 6);
    REQUIRE(s.val == 1);
    REQUIRE(s.prec == 6);
    REQUIRE(ls_coeff(s, 1) == o);
    REQUIRE(ls_coeff(s, -1) == z);
    REQUIRE(ls_coeff(s, 0) == z);
    REQUIRE_THROWS_AS(ls_coeff(s, 6), math_error);
    REQUIRE_THROWS_AS(ls_make(lat, 0, {o, o, o}, 2), input_error);
    LSeries zero = ls_zero(lat, 4);
    REQUIRE(ls_is_zero(zero));
    REQUIRE_THROWS_AS(ls_val(zero), math_error);
}

TEST_CASE("series multiplication follows the precision rule") {
    FieldLattice lat(5, 7011);
    FieldElement o = lat.one(1);
    LSeries a = ls_make(lat, -1, {o, o}, 5);  // t^-1 + 1, known below t^5
    LSeries b = ls_monomial(o, 2, 9);         // t^2, known below t^9
    LSeries ab = ls_mul(a, b);
    REQUIRE(ab.val == 1);
    REQUIRE(ab.prec == 7); // min(5 + 2, 9 - 1)
    LSeries zz = ls_mul(ls_zero(lat, 5), b);
    REQUIRE(ls_is_zero(zz));
    REQUIRE(zz.prec == 7); // min(5 + 2, 9 + 5)
    LSeries sum = ls_add(a, b);
    REQUIRE(sum.prec == 5);
    REQUIRE(sum.val == -1);
}

TEST_CASE("series inversion and division") {
    FieldLattice lat(3, 7012);
    FieldElement o = lat.one(1);
    // 1/(1 - t) = 1 + t + t^2 + ...
    LSeries geom = ls_inv(ls_make(lat, 0, {o, -o}, 12));
    for (int k = 0; k < 12; ++k) REQUIRE(ls_coeff(geom, k) == o);

    SplitMix64 rng(906);
    for (int trial = 0; trial < 12; ++trial) {
        int val = static_cast<int>(rng.below(7)) - 3;
        std::vector<FieldElement> c;
        c.push_back(lat.from_int(1 + static_cast<long long>(rng.below(2))));
        for (int i = 0; i < 6; ++i) c.push_back(rnd_elt(lat, rng, 2));
        LSeries s = ls_make(lat, val, c, val + 10);
        LSeries prod = ls_mul(s, ls_inv(s));
        REQUIRE(!ls_is_zero(prod));
        REQUIRE(ls_val(prod) == 0);
        REQUIRE(ls_eq(prod, ls_const(o, prod.prec)));
    }
    REQUIRE_THROWS_AS(ls_inv(ls_zero(lat, 3)), math_error);
}

TEST_CASE("series powers agree with repeated multiplication") {
    FieldLattice lat(5, 7013);
    SplitMix64 rng(907);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<FieldElement> c{lat.one(1)};
        for (int i = 0; i < 5; ++i) c.push_back(rnd_elt(lat, rng, 1));
        LSeries s = ls_make(lat, -2, c, 6);
        LSeries byhand = s;
        for (int e = 2; e <= 4; ++e) {
            byhand = ls_mul(byhand, s);
            LSeries direct = ls_pow(s, e);
            REQUIRE(ls_eq(direct, byhand));
            REQUIRE(ls_val(direct) == -2 * e);
        }
        REQUIRE(ls_eq(ls_pow(s, -2), ls_mul(ls_inv(s), ls_inv(s))));
        LSeries id = ls_pow(s, 0);
        REQUIRE(ls_coeff(id, 0) == lat.one(1));
    }
}

TEST_CASE("polynomial evaluation on series matches direct expansion") {
    FieldLattice lat(7, 7014);
    FieldElement o = lat.one(1);
    FPoly f;
    f.c = {lat.from_int(1), lat.from_int(2), o}; // 1 + 2x + x^2
    LSeries s = ls_make(lat, 1, {o, lat.from_int(3)}, 8); // t + 3t^2
    LSeries direct = ls_eval_poly(f, s);
    LSeries expect = ls_add(ls_add(ls_mul(s, s), ls_scale(lat.from_int(2), s)),
                            ls_const(o, s.prec));
    REQUIRE(ls_eq(direct, expect));
    // (x0 + t)^2 expands binomially.
    FieldElement x0 = lat.from_int(3);
    LSeries lin = ls_make(lat, 0, {x0, o}, 8);
    FPoly sq;
    sq.c = {lat.zero(1), lat.zero(1), o};
    LSeries ev = ls_eval_poly(sq, lin);
    REQUIRE(ls_coeff(ev, 0) == x0 * x0);
    REQUIRE(ls_coeff(ev, 1) == lat.from_int(6));
    REQUIRE(ls_coeff(ev, 2) == o);
    REQUIRE(ls_coeff(ev, 3) == lat.zero(1));
}
