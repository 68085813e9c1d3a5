#pragma once

/* Generic dense univariate polynomials over a field-like coefficient type.
 * T must provide, via ADL: ring_zero_like, ring_one_like, ring_is_zero,
 * ring_inv, operator+ - * ==, unary -. The zero polynomial is {} so
 * operations that must create coefficients take a `like` context element. */

#include <vector>
#include <string>

#include "asw/common.hpp"

namespace asw {

template <class T>
struct Poly {
    std::vector<T> c; // c[i] multiplies X^i, trimmed

    Poly() = default;
    explicit Poly(std::vector<T> v) : c(std::move(v)) { trim(); }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
    }
    const T& lead() const {
        if (c.empty()) throw math_error("lead of zero polynomial");
        return c.back();
    }
};

template <class T>
Poly<T> poly_constant(const T& v) {
    Poly<T> r;
    if (!ring_is_zero(v)) r.c.push_back(v);
    return r;
}

/* X, built in the coefficient context of `like` */
template <class T>
Poly<T> poly_x(const T& like) {
    Poly<T> r;
    r.c = {ring_zero_like(like), ring_one_like(like)};
    return r;
}

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r;
    const size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < a.c.size() && i < b.c.size()) r.c.push_back(a.c[i] + b.c[i]);
        else if (i < a.c.size()) r.c.push_back(a.c[i]);
        else r.c.push_back(b.c[i]);
    }
    r.trim();
    return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& a) {
    Poly<T> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) { return a + (-b); }

template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, ring_zero_like(a.c[0]));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (ring_is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

template <class T>
Poly<T> operator*(const T& s, const Poly<T>& a) {
    Poly<T> r = a;
    for (auto& x : r.c) x = s * x;
    r.trim();
    return r;
}

template <class T>
bool operator==(const Poly<T>& a, const Poly<T>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}

template <class T>
std::pair<Poly<T>, Poly<T>> poly_divrem(Poly<T> a, const Poly<T>& b) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    Poly<T> q;
    if (a.deg() < b.deg()) return {q, a};
    const T linv = ring_inv(b.lead());
    q.c.assign(a.c.size() - b.c.size() + 1, ring_zero_like(b.lead()));
    while (!a.is_zero() && a.deg() >= b.deg()) {
        T f = a.lead() * linv;
        const int shift = a.deg() - b.deg();
        q.c[shift] = f;
        for (size_t i = 0; i < b.c.size(); ++i)
            a.c[shift + i] = a.c[shift + i] - f * b.c[i];
        a.trim();
    }
    q.trim();
    return {q, a};
}

template <class T>
Poly<T> poly_rem(Poly<T> a, const Poly<T>& b) { return poly_divrem(std::move(a), b).second; }

template <class T>
Poly<T> poly_monic(Poly<T> a) {
    if (a.is_zero()) return a;
    const T linv = ring_inv(a.lead());
    for (auto& x : a.c) x = x * linv;
    return a;
}

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero()) {
        Poly<T> r = poly_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

/* extended gcd: returns (g, u, v) with u*a + v*b = g, g monic */
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> poly_xgcd(Poly<T> a, Poly<T> b) {
    Poly<T> u0, u1, v0, v1;
    if (!a.is_zero()) u0 = poly_constant(ring_one_like(a.c[0]));
    else if (!b.is_zero()) u0 = Poly<T>{};
    if (!b.is_zero()) v1 = poly_constant(ring_one_like(b.c[0]));
    while (!b.is_zero()) {
        auto [q, r] = poly_divrem(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<T> nu = u0 - q * u1, nv = v0 - q * v1;
        u0 = std::move(u1); u1 = std::move(nu);
        v0 = std::move(v1); v1 = std::move(nv);
    }
    if (!a.is_zero()) {
        const T linv = ring_inv(a.lead());
        for (auto& x : a.c) x = x * linv;
        for (auto& x : u0.c) x = x * linv;
        for (auto& x : v0.c) x = x * linv;
        u0.trim(); v0.trim();
    }
    return {a, u0, v0};
}

template <class T>
T poly_eval(const Poly<T>& f, const T& x) {
    T acc = ring_zero_like(x);
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

template <class T>
Poly<T> poly_derivative(const Poly<T>& f, const T& like) {
    Poly<T> r;
    if (f.c.size() < 2) return r;
    r.c.reserve(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) {
        T m = ring_zero_like(like);
        for (size_t k = 0; k < i; ++k) m = m + f.c[i]; // i * c_i by repeated addition
        r.c.push_back(m);
    }
    r.trim();
    return r;
}

template <class T>
Poly<T> poly_mulmod(const Poly<T>& a, const Poly<T>& b, const Poly<T>& m) {
    return poly_rem(a * b, m);
}

template <class T>
Poly<T> poly_powmod(Poly<T> a, Int e, const Poly<T>& m, const T& like) {
    Poly<T> r = poly_constant(ring_one_like(like));
    a = poly_rem(std::move(a), m);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mulmod(r, a, m);
        a = poly_mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace asw
