#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "asw/group.hpp"

using namespace asw;

namespace {

using Perm = std::vector<int>;

Perm pcompose(const Perm& a, const Perm& b) { // apply b, then a
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
    return r;
}

std::string pkey(const Perm& a) {
    std::string s;
    for (int v : a) s += static_cast<char>('0' + v);
    return s;
}

GroupClosure<Perm> sym3() {
    Perm id = {0, 1, 2};
    Perm swap01 = {1, 0, 2};
    Perm cyc = {1, 2, 0};
    return group_closure(id, {swap01, cyc}, pcompose, pkey, 6, 1000);
}

} // namespace

TEST_CASE("closure of a transposition and a 3-cycle is the symmetric group", "[group]") {
    GroupClosure<Perm> G = sym3();
    REQUIRE(G.table.order == 6);
    REQUIRE_FALSE(gt_is_abelian(G.table));
    std::vector<int> orders;
    for (int a = 0; a < 6; ++a) orders.push_back(gt_order_of(G.table, a));
    std::sort(orders.begin(), orders.end());
    REQUIRE(orders == std::vector<int>{1, 2, 2, 2, 3, 3});
    // The table must agree with honest composition everywhere.
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            Perm prod = pcompose(G.elems[static_cast<size_t>(a)], G.elems[static_cast<size_t>(b)]);
            REQUIRE(pkey(prod) == pkey(G.elems[static_cast<size_t>(G.table.at(a, b))]));
        }
    for (int a = 0; a < 6; ++a) REQUIRE(G.table.at(a, gt_inverse(G.table, a)) == G.table.identity);
}

TEST_CASE("closure of coordinate translations is the full translation group", "[group]") {
    using V = std::pair<int, int>;
    auto add = [](const V& a, const V& b) { return V{(a.first + b.first) % 4, (a.second + b.second) % 4}; };
    auto vkey = [](const V& a) { return std::to_string(a.first) + "," + std::to_string(a.second); };
    GroupClosure<V> G = group_closure(V{0, 0}, {V{1, 0}, V{0, 1}}, add, vkey, 16, 1000);
    REQUIRE(G.table.order == 16);
    REQUIRE(gt_is_abelian(G.table));
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            V expect = add(G.elems[static_cast<size_t>(a)], G.elems[static_cast<size_t>(b)]);
            REQUIRE(vkey(expect) == vkey(G.elems[static_cast<size_t>(G.table.at(a, b))]));
        }
}

TEST_CASE("closure enforces the expected order and the cap", "[group]") {
    auto add8 = [](int a, int b) { return (a + b) % 8; };
    auto ikey = [](int a) { return std::to_string(a); };
    REQUIRE_THROWS_AS(group_closure(0, {1}, add8, ikey, 4, 1000), math_error);
    REQUIRE_THROWS_AS(group_closure(0, {1}, add8, ikey, 8, 5), math_error);
    REQUIRE_NOTHROW(group_closure(0, {1}, add8, ikey, 8, 8));
    REQUIRE_NOTHROW(group_closure(0, {1}, add8, ikey, 0, 1000)); // order check skipped
}

TEST_CASE("collide hook sees products that land on known keys", "[group]") {
    // Key ignores the string payload, so wrapping around 0 mod 3 revisits
    // the identity key with a different payload.
    using T = std::pair<int, std::string>;
    auto mul = [](const T& a, const T& b) { return T{(a.first + b.first) % 3, a.second + b.second}; };
    auto tkey = [](const T& a) { return std::to_string(a.first); };
    int collisions = 0;
    int mismatched = 0;
    group_closure(
        T{0, ""}, {T{1, "x"}}, mul, tkey, 3, 100, [&](const T& olde, const T& newe) {
            ++collisions;
            if (olde.second != newe.second) ++mismatched;
        });
    REQUIRE(collisions > 0);
    REQUIRE(mismatched > 0);
    // A collide hook that rejects the payload aborts the closure.
    auto reject = [](const T& a, const T& b) {
        if (a.second != b.second) throw math_error("payload mismatch");
    };
    REQUIRE_THROWS_AS(group_closure(T{0, ""}, {T{1, "x"}}, mul, tkey, 3, 100, reject), math_error);
}

TEST_CASE("verification rejects corrupted tables", "[group]") {
    FiniteGroupTable G = sym3().table;
    REQUIRE_NOTHROW(gt_verify(G));

    FiniteGroupTable bad = G;
    bad.identity = (G.identity + 1) % G.order;
    REQUIRE_THROWS_AS(gt_verify(bad), math_error);

    bad = G;
    bad.mul[7] = bad.mul[8]; // duplicate entry breaks the row permutation
    REQUIRE_THROWS_AS(gt_verify(bad), math_error);

    bad = G;
    bad.mul[3] = 99; // out of range
    REQUIRE_THROWS_AS(gt_verify(bad), math_error);

    bad = G;
    bad.gens = {}; // nothing marked, nothing generates
    REQUIRE_THROWS_AS(gt_verify(bad), math_error);

    bad = G;
    bad.gens = {G.identity};
    REQUIRE_THROWS_AS(gt_verify(bad), math_error);
}

TEST_CASE("associativity failure is caught through the generator test", "[group]") {
    // Order-5 loop: a Latin square with identity that is not a group (a
    // group of order 5 is cyclic, but element 1 squares to the identity).
    FiniteGroupTable L;
    L.order = 5;
    L.identity = 0;
    L.gens = {1, 2};
    L.mul = {
        0, 1, 2, 3, 4, //
        1, 0, 3, 4, 2, //
        2, 4, 0, 1, 3, //
        3, 2, 4, 0, 1, //
        4, 3, 1, 2, 0, //
    };
    REQUIRE_THROWS_AS(gt_verify(L), math_error);
    try {
        gt_verify(L);
    } catch (const math_error& e) {
        REQUIRE(std::string(e.what()).find("associativity") != std::string::npos);
    }
}
