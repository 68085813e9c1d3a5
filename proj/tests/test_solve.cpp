#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "asw/solve.hpp"

using namespace asw;

namespace {

FieldElement random_element(FieldLattice& lat, int m, SplitMix64& rng) {
    std::vector<u32> v(static_cast<size_t>(m));
    for (auto& x : v) x = static_cast<u32>(rng.below(lat.p()));
    return lat.make(m, std::move(v));
}

/* Multiset-free comparison of root sets via the canonical order. */
bool same_value_set(FieldLattice& lat, std::vector<FieldElement> a, std::vector<FieldElement> b) {
    auto key = [&](const FieldElement& x) {
        FieldElement m = lat.reduce_min(x);
        return std::make_pair(m.deg, m.c);
    };
    std::set<std::pair<int, std::vector<u32>>> sa, sb;
    for (auto& x : a) sa.insert(key(x));
    for (auto& x : b) sb.insert(key(x));
    return sa == sb;
}

Poly<FieldElement> poly_from_roots(FieldLattice& lat, const std::vector<FieldElement>& roots) {
    Poly<FieldElement> f = poly_constant(lat.one());
    for (const auto& r : roots) {
        Poly<FieldElement> lin;
        lin.c = {lat.neg(r), lat.one(r.deg)};
        f = f * lin;
    }
    return f;
}

} // namespace

TEST_CASE("roots of frozen small polynomials") {
    FieldLattice lat(3);
    // X^2 + 1 over F_3: two conjugate roots of degree 2
    Poly<FieldElement> f;
    f.c = {lat.one(), lat.zero(), lat.one()};
    auto roots = poly_roots(f);
    REQUIRE(roots.size() == 2);
    for (auto& r : roots) {
        REQUIRE(lat.reduce_min(r).deg == 2);
        REQUIRE(r * r + lat.one(r.deg) == lat.zero(r.deg));
    }
    // X^2 - 1 over F_3 splits already in F_3
    Poly<FieldElement> g;
    g.c = {lat.neg(lat.one()), lat.zero(), lat.one()};
    auto roots2 = poly_roots(g);
    REQUIRE(roots2.size() == 2);
    REQUIRE(same_value_set(lat, roots2, {lat.from_int(1), lat.from_int(2)}));
}

TEST_CASE("roots of random products across mixed degrees") {
    for (u32 p : {2u, 3u, 5u}) {
        FieldLattice lat(p);
        SplitMix64 rng(1000 + p);
        for (int it = 0; it < 6; ++it) {
            std::vector<FieldElement> roots;
            for (int d : {1, 2, 3})
                for (int k = 0; k < 2; ++k) roots.push_back(random_element(lat, d, rng));
            // duplicate one root to exercise multiplicity collapsing
            roots.push_back(roots[0]);
            Poly<FieldElement> f = poly_from_roots(lat, roots);
            auto found = poly_roots(f);
            REQUIRE(same_value_set(lat, found, roots));
        }
    }
}

TEST_CASE("squarefree part handles vanishing derivative") {
    FieldLattice lat(3);
    FieldElement c = lat.generator(2);
    // (X - c)^3 = X^3 - c^3 has zero derivative
    Poly<FieldElement> lin;
    lin.c = {lat.neg(c), lat.one(2)};
    Poly<FieldElement> f = lin * lin * lin;
    Poly<FieldElement> sf = squarefree_part(f);
    REQUIRE(sf.deg() == 1);
    auto roots = poly_roots(f);
    REQUIRE(roots.size() == 1);
    REQUIRE(lat.reduce_min(roots[0]).c == c.c);
}

TEST_CASE("roots restricted to a fixed field") {
    FieldLattice lat(3);
    // X^9 - X splits exactly over F_9
    Poly<FieldElement> f;
    f.c.assign(10, lat.zero());
    f.c[1] = lat.neg(lat.one());
    f.c[9] = lat.one();
    auto all = poly_roots_in(f, 2);
    REQUIRE(all.size() == 9);
    auto base = poly_roots_in(f, 1);
    REQUIRE(base.size() == 3);
}

TEST_CASE("Artin-Schreier scalar solutions are exact and canonical") {
    for (u32 p : {2u, 3u, 5u}) {
        FieldLattice lat(p);
        SplitMix64 rng(777 + p);
        for (int a : {1, 2}) {
            for (int m : {1, 2, 3}) {
                lat.get_field(m);
                for (int it = 0; it < 12; ++it) {
                    FieldElement c = random_element(lat, m, rng);
                    FieldElement l = solve_artin_schreier_scalar(lat, a, c);
                    REQUIRE(lat.p_power(l, a) - l == lat.embed(lat.reduce_min(c), l.deg));
                    // canonical: recomputation yields the identical representative
                    FieldElement l2 = solve_artin_schreier_scalar(lat, a, c);
                    REQUIRE(l2.deg == l.deg);
                    REQUIRE(l2.c == l.c);
                    // any other solution differs by an element of F_q
                    FieldElement shift = lat.embed(lat.generator(a), l.deg);
                    FieldElement other = l + shift;
                    REQUIRE(lat.p_power(other, a) - other == lat.embed(lat.reduce_min(c), l.deg));
                }
            }
        }
    }
}

TEST_CASE("Artin-Schreier growth matches the trace criterion") {
    for (u32 p : {2u, 3u, 5u}) {
        FieldLattice lat(p);
        SplitMix64 rng(4242 + p);
        const int a = 1, m = 2;
        lat.get_field(m);
        for (int it = 0; it < 30; ++it) {
            FieldElement c = random_element(lat, m, rng);
            FieldElement cmin = lat.reduce_min(c);
            const long long mm = ilcm(cmin.deg, a); // solver works from the minimal field
            FieldElement tr = lat.trace_to(cmin, a);
            FieldElement l = solve_artin_schreier_scalar(lat, a, c);
            if (tr.is_zero())
                REQUIRE(l.deg == mm); // no growth needed
            else
                REQUIRE(l.deg == mm * static_cast<long long>(p));
        }
    }
}

TEST_CASE("linearized root spaces") {
    for (u32 p : {2u, 3u, 5u}) {
        FieldLattice lat(p);
        // X^p - X: root space F_p, dimension 1
        {
            auto basis = linearized_root_basis(lat, 1, {lat.neg(lat.one()), lat.one()});
            REQUIRE(basis.size() == 1);
            REQUIRE(lat.reduce_min(basis[0]).deg == 1);
        }
        // X^(p^2) - X as a p-linearized polynomial: root space F_{p^2}, dim 2
        {
            auto basis =
                linearized_root_basis(lat, 1, {lat.neg(lat.one()), lat.zero(), lat.one()});
            REQUIRE(basis.size() == 2);
            for (auto& b : basis) REQUIRE(lat.p_power(b, 2) == b);
        }
        // X^(q^2) - X with q = p^2: root space F_{q^2}, dim 2 over F_q
        {
            auto basis =
                linearized_root_basis(lat, 2, {lat.neg(lat.one()), lat.zero(), lat.one()});
            REQUIRE(basis.size() == 2);
            for (auto& b : basis) REQUIRE(lat.p_power(b, 4) == b);
        }
    }
}

TEST_CASE("linearized root space is closed under F_q combinations") {
    FieldLattice lat(3);
    SplitMix64 rng(31337);
    // build L(X) = (X^q - X) o (X^q - g X) style composite with q = 3
    FieldElement g = lat.generator(2);
    // L(X) = X^{q^2} - (g^q + 1) X^q + g^{q+1}... compose explicitly instead:
    // inner(X) = X^q - g X, outer(Y) = Y^q - Y, L = outer(inner)
    // L(X) = X^{q^2} - g^q X^q - X^q + g X = X^{q^2} - (g^q + 1) X^q + g X
    std::vector<FieldElement> coeffs = {g, lat.neg(lat.p_power(g, 1) + lat.one(2)), lat.one(2)};
    auto eval = [&](const FieldElement& x) {
        FieldElement acc = lat.zero(x.deg);
        FieldElement t = x;
        for (int i = 0; i < 3; ++i) {
            acc = acc + coeffs[i] * t;
            t = lat.p_power(t, 1);
        }
        return acc;
    };
    auto basis = linearized_root_basis(lat, 1, coeffs);
    REQUIRE(basis.size() == 2);
    for (auto& b : basis) REQUIRE(eval(b).is_zero());
    for (int it = 0; it < 10; ++it) {
        u32 s = static_cast<u32>(rng.below(3)), t = static_cast<u32>(rng.below(3));
        FieldElement combo = lat.from_int(s) * basis[0] + lat.from_int(t) * basis[1];
        REQUIRE(eval(combo).is_zero());
    }
}
