#include <catch2/catch_amalgamated.hpp>

#include "asw/field.hpp"

using namespace asw;

namespace {

FieldElement random_element(FieldLattice& lat, int m, SplitMix64& rng) {
    std::vector<u32> v(static_cast<size_t>(m));
    for (auto& x : v) x = static_cast<u32>(rng.below(lat.p()));
    return lat.make(m, std::move(v));
}

} // namespace

TEST_CASE("prime field scalars") {
    REQUIRE(fp_add(2, 2, 3) == 1);
    REQUIRE(fp_sub(0, 1, 5) == 4);
    REQUIRE(fp_mul(4, 4, 5) == 1);
    for (u32 p : {2u, 3u, 5u, 7u, 101u})
        for (u32 a = 1; a < p; ++a) {
            REQUIRE(fp_mul(a, fp_inv(a, p), p) == 1);
            REQUIRE(fp_pow(a, p, p) == a);
        }
}

TEST_CASE("irreducibility over F_p") {
    // X^2 + 1: -1 is a non-square mod 3, a square mod 5
    REQUIRE(fpp_is_irreducible(FpPoly{1, 0, 1}, 3));
    REQUIRE_FALSE(fpp_is_irreducible(FpPoly{1, 0, 1}, 5));
    // X^2 - 1 = (X-1)(X+1)
    REQUIRE_FALSE(fpp_is_irreducible(FpPoly{2, 0, 1}, 3));
    // X^3 - X - 1 has no root mod 3 and degree 3, hence irreducible
    REQUIRE(fpp_is_irreducible(FpPoly{2, 2, 0, 1}, 3));
    REQUIRE(fpp_is_irreducible(FpPoly{0, 1}, 2));
    REQUIRE_FALSE(fpp_is_irreducible(FpPoly{0, 0, 1}, 2));
}

TEST_CASE("lattice moduli are deterministic and irreducible") {
    for (u32 p : {2u, 3u, 5u}) {
        FieldLattice a(p), b(p);
        for (int m : {2, 3, 5, 8}) {
            a.get_field(m);
            b.get_field(m);
            REQUIRE(a.modulus(m) == b.modulus(m));
            REQUIRE(fpp_deg(a.modulus(m)) == m);
            REQUIRE(fpp_is_irreducible(a.modulus(m), p));
        }
    }
}

TEST_CASE("field arithmetic laws") {
    for (u32 p : {2u, 3u, 5u}) {
        FieldLattice lat(p);
        SplitMix64 rng(91 + p);
        for (int m : {1, 2, 3, 6}) {
            lat.get_field(m);
            for (int it = 0; it < 25; ++it) {
                FieldElement x = random_element(lat, m, rng);
                FieldElement y = random_element(lat, m, rng);
                FieldElement z = random_element(lat, m, rng);
                REQUIRE((x + y) * z == x * z + y * z);
                REQUIRE(x * y == y * x);
                REQUIRE((x + y) + z == x + (y + z));
                REQUIRE(x + lat.neg(x) == lat.zero(m));
                if (!x.is_zero()) {
                    REQUIRE(x * lat.inv(x) == lat.one(m));
                    REQUIRE(x / x == lat.one(m));
                }
                // characteristic
                FieldElement s = lat.zero(m);
                for (u32 i = 0; i < p; ++i) s = s + x;
                REQUIRE(s.is_zero());
            }
        }
    }
}

TEST_CASE("Frobenius matrix path matches generic powering") {
    for (u32 p : {2u, 3u, 5u}) {
        FieldLattice lat(p);
        SplitMix64 rng(7 + p);
        for (int m : {2, 4, 5}) {
            lat.get_field(m);
            for (int it = 0; it < 20; ++it) {
                FieldElement x = random_element(lat, m, rng);
                REQUIRE(lat.p_power(x, 1) == lat.pow(x, Int(p)));
                REQUIRE(lat.p_power(x, 2) == lat.pow(x, ipow_int(Int(p), 2)));
                REQUIRE(lat.p_power(x, m) == x); // full orbit closes
            }
        }
    }
}

TEST_CASE("embeddings commute under scrambled registration order") {
    for (u32 p : {2u, 3u}) {
        FieldLattice lat(p);
        for (int m : {4, 6, 2, 12, 3, 8, 24}) lat.get_field(m);
        REQUIRE_NOTHROW(lat.verify_embeddings());
        SplitMix64 rng(13 * p);
        for (int d : {2, 3, 4, 6}) {
            for (int it = 0; it < 10; ++it) {
                FieldElement x = random_element(lat, d, rng);
                FieldElement y = random_element(lat, d, rng);
                // ring homomorphism
                REQUIRE(lat.embed(x, 24) * lat.embed(y, 24) == lat.embed(x * y, 24));
                REQUIRE(lat.embed(x, 24) + lat.embed(y, 24) == lat.embed(x + y, 24));
                // round trip
                auto back = lat.project(lat.embed(x, 24), d);
                REQUIRE(back.has_value());
                REQUIRE(back->c == x.c);
            }
            REQUIRE(lat.embed(lat.one(d), 24) == lat.one(24));
        }
    }
}

TEST_CASE("registration order does not change the embeddings") {
    FieldLattice a(3), b(3);
    for (int m : {12, 2, 8}) a.get_field(m);
    for (int m : {8, 12, 2}) b.get_field(m);
    for (int d : {2, 3, 4, 6}) {
        FieldElement ga = a.generator(d), gb = b.generator(d);
        REQUIRE(a.embed(ga, 24).c == b.embed(gb, 24).c);
    }
}

TEST_CASE("trace lands in the base and is Frobenius invariant") {
    for (u32 p : {2u, 3u, 5u}) {
        FieldLattice lat(p);
        SplitMix64 rng(55 + p);
        for (int m : {4, 6}) {
            lat.get_field(m);
            for (int it = 0; it < 15; ++it) {
                FieldElement x = random_element(lat, m, rng);
                FieldElement t = lat.trace_to(x, 1);
                REQUIRE(t.deg == 1);
                REQUIRE(lat.trace_to(lat.p_power(x, 1), 1) == t);
                FieldElement y = random_element(lat, m, rng);
                REQUIRE(lat.trace_to(x + y, 1) == lat.trace_to(x, 1) + lat.trace_to(y, 1));
            }
            // trace to an intermediate field, a = 2
            if (m % 2 == 0)
                for (int it = 0; it < 10; ++it) {
                    FieldElement x = random_element(lat, m, rng);
                    FieldElement t = lat.trace_to(x, 2);
                    REQUIRE(lat.p_power(lat.embed(t, m), 2) == lat.embed(t, m));
                }
        }
    }
}

TEST_CASE("fixed points of Frobenius are the prime field") {
    FieldLattice lat(3);
    lat.get_field(4);
    SplitMix64 rng(2024);
    int fixed_seen = 0;
    for (int it = 0; it < 200; ++it) {
        FieldElement x = random_element(lat, 4, rng);
        bool fixed = lat.p_power(x, 1) == x;
        bool in_prime = lat.reduce_min(x).deg == 1;
        REQUIRE(fixed == in_prime);
        if (fixed) ++fixed_seen;
    }
    // embedded prime-field values are always fixed
    for (int v = 0; v < 3; ++v) {
        FieldElement x = lat.embed(lat.from_int(v), 4);
        REQUIRE(lat.p_power(x, 1) == x);
    }
    (void)fixed_seen;
}

TEST_CASE("element printing") {
    FieldLattice lat(3);
    REQUIRE(lat.to_string(lat.zero()) == "0");
    REQUIRE(lat.to_string(lat.from_int(2)) == "2");
    REQUIRE(lat.to_string(lat.generator(2)) == "z2");
    FieldElement x = lat.make(2, {1, 2});
    REQUIRE(lat.to_string(x) == "2*z2 + 1");
    // embedded copies print through their minimal field
    REQUIRE(lat.to_string(lat.embed(x, 4)) == "2*z2 + 1");
    REQUIRE(lat.to_string(lat.embed(lat.from_int(1), 6)) == "1");
    FieldElement g4 = lat.generator(4);
    REQUIRE(lat.to_string(lat.mul(g4, g4)) == "z4^2");
}

TEST_CASE("canonical comparison is embedding independent") {
    FieldLattice lat(5);
    lat.get_field(6);
    SplitMix64 rng(99);
    for (int it = 0; it < 30; ++it) {
        FieldElement x = random_element(lat, 3, rng);
        FieldElement y = random_element(lat, 3, rng);
        int c1 = lat.cmp(x, y);
        int c2 = lat.cmp(lat.embed(x, 6), lat.embed(y, 6));
        REQUIRE(c1 == c2);
        REQUIRE(lat.cmp(x, x) == 0);
        REQUIRE(lat.cmp(x, y) == -lat.cmp(y, x));
    }
}

TEST_CASE("modulus roots form a full orbit") {
    FieldLattice lat(3);
    auto roots = lat.modulus_roots_in(2, 4);
    REQUIRE(roots.size() == 2);
    REQUIRE(roots[0].c != roots[1].c);
    for (const auto& r : roots) {
        // r satisfies the degree-2 modulus
        const FpPoly& f = lat.modulus(2);
        FieldElement acc = lat.zero(4);
        for (auto it = f.rbegin(); it != f.rend(); ++it) {
            acc = acc * r;
            acc = acc + lat.embed(lat.from_int(static_cast<long long>(*it)), 4);
        }
        REQUIRE(acc.is_zero());
    }
}

TEST_CASE("degree cap stops runaway growth") {
    FieldLattice lat(3, 0x5eedULL, 16);
    REQUIRE_NOTHROW(lat.get_field(16));
    REQUIRE_THROWS_AS(lat.get_field(17), math_error);
}
