// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nplc {

/// Exponent vector of a monomial; length is the ambient variable count.
using Exponent = std::vector<std::int64_t>;

/// Graded-lexicographic order (total degree first, then lex).
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        std::int64_t da = 0, db = 0;
        for (auto x : a) da += x;
        for (auto x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

// Exact sparse multivariate polynomial over Q. Terms are kept in a
// canonical map: no zero coefficients, all exponents of length nvars.
// The zero polynomial is the empty map. Values are immutable in spirit:
// every operation returns a fresh polynomial.
class Poly {
  public:
    using TermMap = std::map<Exponent, Q, GrlexLess>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Q& c);
    static Poly monomial(Exponent e, const Q& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c * x^e, combining like terms and dropping zeros.
    void add_term(const Exponent& e, const Q& c);

    const Q* coeff(const Exponent& e) const;

    /// Leading term in grlex (largest); polynomial must be nonzero.
    std::pair<Exponent, Q> leading_term() const;

    std::int64_t total_degree() const;

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    int nvars_;
    TermMap terms_;
};

/// Parses a polynomial expression in variables x1..xn: sums, differences,
/// products, nonnegative integer powers, parentheses, integer or rational
/// coefficients. Whitespace-insensitive. Throws std::invalid_argument with
/// the offending position on bad input.
Poly parse_poly(const std::string& text, int nvars);

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Poly& p, const Q& c);
Poly negate(const Poly& p);

Z exponent_dot(const Exponent& e, const ZVec& v);

/// Terms of p lying on the hyperplane <v, .> = c. With
/// c = min_{supp p} <v, .> this is the face truncation p_delta.
Poly face_part(const Poly& p, const ZVec& v, const Z& c);

/// Minimum of <v, .> over the support of p (p nonzero).
Z support_min(const Poly& p, const ZVec& v);

/// x_i * d/dx_i: each term c*x^a becomes (c*a_i)*x^a. Variable index is
/// 1-based.
Poly log_derivative(const Poly& p, int i);

/// True iff p restricted to each coordinate axis is nonzero, i.e. the
/// support contains a point k*e_i (k >= 0) for every axis; a nonzero
/// constant term satisfies all axes at once.
bool axis_condition(const Poly& p);

/// Substitutes 0 for the given (1-based) variable.
Poly substitute_zero(const Poly& p, int i);

/// Quotient and remainder of single-divisor division in grlex order.
/// remainder == 0 iff divisor | p (a singleton is a Groebner basis of the
/// principal ideal it generates).
struct DivisionResult {
    Poly quotient;
    Poly remainder;
};
DivisionResult divide(const Poly& p, const Poly& divisor);

bool divides(const Poly& divisor, const Poly& p);

// Coefficient-wise reduction mod a small prime.
struct PolyModP {
    std::uint32_t prime = 0;
    int nvars = 0;
    std::vector<std::pair<Exponent, std::uint32_t>> terms;  // sorted grlex, nonzero coeffs

    bool is_zero() const { return terms.empty(); }
};

/// Reduces every coefficient mod prime (dropping terms that vanish).
/// Throws if a denominator is divisible by the prime.
PolyModP mod_p_reduce(const Poly& p, std::uint32_t prime);

}  // namespace nplc
