// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nplc {

// Exact arithmetic backbone: arbitrary-precision integers and rationals.
// Nothing in the library ever touches floating point.
using Z = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

using ZVec = std::vector<Z>;
using QVec = std::vector<Q>;

inline Z dot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Z s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Z vec_gcd(const ZVec& v) {
    Z g = 0;
    for (const Z& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

/// Divides out the gcd of the entries; the zero vector is left alone.
inline void make_primitive(ZVec& v) {
    Z g = vec_gcd(v);
    if (g > 1)
        for (Z& x : v) x /= g;
}

inline bool is_zero_vec(const ZVec& v) {
    for (const Z& x : v)
        if (x != 0) return false;
    return true;
}

inline bool lex_less(const ZVec& a, const ZVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline Q parse_rational(const std::string& s) {
    try {
        return Q(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational literal: '" + s + "'");
    }
}

inline std::string to_string(const Q& q) { return q.str(); }
inline std::string to_string(const Z& z) { return z.str(); }

/// Floor of a rational (exact).
inline Z floor_q(const Q& q) {
    Z n = numerator(q), d = denominator(q);
    Z quo = n / d, rem = n % d;
    if (rem != 0 && n < 0) quo -= 1;
    return quo;
}

/// Ceiling of a rational (exact).
inline Z ceil_q(const Q& q) { return -floor_q(-q); }

inline std::int64_t to_int64(const Z& z) {
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer too large for int64 fast path");
    return static_cast<std::int64_t>(z);
}

// Deterministic PRNG (splitmix64). Used by the randomized verification
// harnesses; identical seed means identical trial sequence on every
// platform, unlike the std distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace nplc
