#pragma once

/* Finite groups as explicit multiplication tables, plus a generic closure
 * builder that assembles the table from an identity element and a list of
 * generators under an ambient associative operation.
 *
 * Verification is deliberately strong: a table is accepted only if rows and
 * columns permute, the identity behaves, the marked generators reach every
 * element, and Light's associativity criterion holds over those generators.
 * For a table with identity whose marked set generates, checking
 * (a g) b = a (g b) for generators g alone forces associativity everywhere,
 * at cost |gens| * order^2 instead of order^3. */

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asw/common.hpp"

namespace asw {

struct FiniteGroupTable {
    int order = 0;
    int identity = 0;
    std::vector<int> mul; // order x order, row-major: mul[a * order + b] = a b
    std::vector<int> gens;

    int at(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
};

inline void gt_verify(const FiniteGroupTable& G) {
    const int m = G.order;
    if (m <= 0) throw math_error("group table is empty");
    if (G.mul.size() != static_cast<size_t>(m) * m) throw math_error("group table has wrong size");
    for (int v : G.mul)
        if (v < 0 || v >= m) throw math_error("group table entry out of range");
    if (G.identity < 0 || G.identity >= m) throw math_error("group identity out of range");
    for (int a = 0; a < m; ++a)
        if (G.at(a, G.identity) != a || G.at(G.identity, a) != a)
            throw math_error("group identity does not act trivially");
    std::vector<char> seen(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < m; ++b) seen[static_cast<size_t>(G.at(a, b))] = 1;
        for (char s : seen)
            if (!s) throw math_error("group table row is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < m; ++b) seen[static_cast<size_t>(G.at(b, a))] = 1;
        for (char s : seen)
            if (!s) throw math_error("group table column is not a permutation");
    }
    for (int g : G.gens)
        if (g < 0 || g >= m) throw math_error("group generator index out of range");
    // Generators must reach every element; Light's criterion needs this.
    std::vector<char> reached(static_cast<size_t>(m));
    reached[static_cast<size_t>(G.identity)] = 1;
    std::vector<int> queue = {G.identity};
    while (!queue.empty()) {
        int a = queue.back();
        queue.pop_back();
        for (int g : G.gens) {
            int b = G.at(a, g);
            if (!reached[static_cast<size_t>(b)]) {
                reached[static_cast<size_t>(b)] = 1;
                queue.push_back(b);
            }
        }
    }
    for (char r : reached)
        if (!r) throw math_error("marked generators do not generate the group");
    for (int g : G.gens)
        for (int a = 0; a < m; ++a) {
            int ag = G.at(a, g);
            for (int b = 0; b < m; ++b)
                if (G.at(ag, b) != G.at(a, G.at(g, b)))
                    throw math_error("group table fails associativity");
        }
}

inline int gt_inverse(const FiniteGroupTable& G, int a) {
    for (int b = 0; b < G.order; ++b)
        if (G.at(a, b) == G.identity) return b;
    throw math_error("group element has no inverse");
}

inline int gt_order_of(const FiniteGroupTable& G, int a) {
    int x = a, k = 1;
    while (x != G.identity) {
        x = G.at(x, a);
        ++k;
        if (k > G.order) throw math_error("element order exceeds group order");
    }
    return k;
}

inline bool gt_is_abelian(const FiniteGroupTable& G) {
    for (int a = 0; a < G.order; ++a)
        for (int b = a + 1; b < G.order; ++b)
            if (G.at(a, b) != G.at(b, a)) return false;
    return true;
}

template <class T>
struct GroupClosure {
    std::vector<T> elems; // elems[table.identity] is the identity
    FiniteGroupTable table;
};

/* Close {identity, gens...} under an associative operation and lay out the
 * full table. Only closure edges e * g are computed with the real operation;
 * general products follow from stored generator words, so the expensive op
 * runs order * |gens| times. `collide` is invoked whenever a product lands
 * on an already-known key, to let the caller cross-check any payload the
 * key does not capture. Throws when the closure exceeds `cap` or misses
 * `expected_order` (pass 0 to skip that check). */
template <class T, class MulFn, class KeyFn, class CollideFn>
GroupClosure<T> group_closure(const T& identity, const std::vector<T>& gens, MulFn&& mul,
                              KeyFn&& key, u64 expected_order, u64 cap, CollideFn&& collide) {
    GroupClosure<T> out;
    std::map<std::string, int> index;
    std::vector<std::pair<int, int>> word; // elem i = elems[word.first] * gens[word.second]
    std::vector<int> gen_index;

    auto insert = [&](const T& t, int parent, int glast) -> int {
        std::string k = key(t);
        auto it = index.find(k);
        if (it != index.end()) {
            collide(out.elems[static_cast<size_t>(it->second)], t);
            return it->second;
        }
        int idx = static_cast<int>(out.elems.size());
        if (static_cast<u64>(idx) >= cap)
            throw math_error("group closure exceeds the configured cap of " + std::to_string(cap) +
                             " elements");
        index.emplace(std::move(k), idx);
        out.elems.push_back(t);
        word.emplace_back(parent, glast);
        return idx;
    };

    insert(identity, -1, -1);
    for (size_t i = 0; i < gens.size(); ++i)
        gen_index.push_back(insert(gens[i], 0, static_cast<int>(i)));

    // BFS records every closure edge a * g, the only real multiplications.
    std::vector<std::vector<int>> right_by_gen(gens.size());
    for (size_t at = 0; at < out.elems.size(); ++at)
        for (size_t g = 0; g < gens.size(); ++g) {
            T prod = mul(out.elems[at], gens[g]);
            right_by_gen[g].push_back(insert(prod, static_cast<int>(at), static_cast<int>(g)));
        }

    const int m = static_cast<int>(out.elems.size());
    if (expected_order != 0 && static_cast<u64>(m) != expected_order)
        throw math_error("group closure has order " + std::to_string(m) + ", expected " +
                         std::to_string(expected_order));

    // a * elem_j by peeling j's generator word: a * (parent g) = (a * parent) g.
    // Earlier BFS indices are always complete before later ones need them.
    FiniteGroupTable& G = out.table;
    G.order = m;
    G.identity = 0;
    G.gens = gen_index;
    G.mul.assign(static_cast<size_t>(m) * m, -1);
    for (int a = 0; a < m; ++a) G.mul[static_cast<size_t>(a) * m] = a; // a * identity
    for (int j = 1; j < m; ++j) {
        auto [parent, glast] = word[static_cast<size_t>(j)];
        for (int a = 0; a < m; ++a) {
            int ap = G.mul[static_cast<size_t>(a) * m + parent];
            G.mul[static_cast<size_t>(a) * m + j] = right_by_gen[static_cast<size_t>(glast)][static_cast<size_t>(ap)];
        }
    }
    gt_verify(G);
    return out;
}

template <class T, class MulFn, class KeyFn>
GroupClosure<T> group_closure(const T& identity, const std::vector<T>& gens, MulFn&& mul,
                              KeyFn&& key, u64 expected_order, u64 cap) {
    return group_closure(identity, gens, std::forward<MulFn>(mul), std::forward<KeyFn>(key),
                         expected_order, cap, [](const T&, const T&) {});
}

} // namespace asw
