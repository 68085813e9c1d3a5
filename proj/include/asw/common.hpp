#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace asw {

using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

using Int = boost::multiprecision::cpp_int;

/* Input/format problems: bad files, unparsable expressions, malformed data. */
struct input_error : std::runtime_error {
    explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

/* Mathematical inconsistency: failed certification, inconsistent linear
 * systems, violated invariants, resource caps. */
struct math_error : std::runtime_error {
    explicit math_error(const std::string& m) : std::runtime_error(m) {}
};

inline long long igcd(long long a, long long b) { return std::gcd(a, b); }
inline long long ilcm(long long a, long long b) { return std::lcm(a, b); }

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/* ipow with overflow guard; desk-scale exponents only. */
inline std::uint64_t ipow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (b != 0 && r > UINT64_MAX / b) throw math_error("integer overflow in ipow");
        r *= b;
    }
    return r;
}

inline Int ipow_int(const Int& b, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

/* splitmix64: deterministic, platform-independent stream. */
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /* uniform in [0, n) by rejection; n > 0 */
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }
};

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

inline std::vector<long long> divisors_of(long long n) {
    std::vector<long long> small, big;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) big.push_back(n / d);
        }
    }
    for (auto it = big.rbegin(); it != big.rend(); ++it) small.push_back(*it);
    return small;
}

inline std::vector<long long> prime_factors(long long n) {
    std::vector<long long> ps;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace asw
