// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nplc {

/// Monomial space F^a + (ideal generators): a polynomial belongs iff each
/// of its terms lies in the dilate or is divisible by some generator.
struct MonomialSumSpace {
    Q dilation;                        // a >= 0
    std::vector<HalfSpace> region;     // compact facets of Delta, or Delta_1 halfspaces
    int nvars = 0;
    std::vector<Exponent> ideal_gens;  // monomial generators, e.g. x_i^k or (x_1...x_n)^k
};

MonomialSumSpace sum_space(const NewtonPolyhedron& np, const Q& a, std::vector<Exponent> ideal_gens);
MonomialSumSpace sum_space(const Delta1Region& d1, int nvars, const Q& a, std::vector<Exponent> ideal_gens);

/// x_i^k as an ideal generator (1-based axis).
Exponent axis_power(int nvars, int axis, std::int64_t k);
/// (x_1 ... x_n)^k.
Exponent diagonal_power(int nvars, std::int64_t k);

enum class TermBranch { Dilate, Ideal, Outside };

struct TermCertificate {
    Exponent exponent;
    TermBranch branch = TermBranch::Outside;
};

struct MembershipResult {
    bool contained = false;
    std::vector<TermCertificate> certificates;  // one per term, canonical order
};

/// Term-by-term membership test with certificates; the space is monomial,
/// so a polynomial belongs iff every term does.
MembershipResult in_sum_space(const Poly& p, const MonomialSumSpace& s);

/// Splits p by support: p1 = terms inside a*Delta, p2 = the rest.
std::pair<Poly, Poly> split_by_support(const Poly& p, const Q& a, const NewtonPolyhedron& np);

struct QuotientBasis {
    Q dilation;
    std::int64_t k = 0;
    int axis = 0;
    std::vector<Exponent> monomials;  // lattice points spanning P/(F_1^a + (x_axis^k))
};

QuotientBasis quotient_basis(const Delta1Region& d1, const Q& a, std::int64_t k,
                             const EnumerationLimits& limits = {});

struct InjectivityReport {
    std::int64_t a = 0;
    std::int64_t k = 0;
    int axis = 0;
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    int rank = 0;
    bool injective = false;
    std::string certification;          // how the rank was established
    std::optional<QVec> kernel_vector;  // coordinates over the domain basis
    std::vector<Exponent> domain_basis;
};

/// Checks injectivity of multiplication by f from P/(F_1^a + (x_i^k)) to
/// P/(F_1^{a+1} + (x_i^k)) by exact rank of the multiplication matrix.
InjectivityReport verify_injectivity(const Poly& f, std::int64_t a, std::int64_t k, int axis,
                                const EnumerationLimits& limits = {});

struct ImplicationReport {
    bool premise = false;
    bool conclusion = false;
    bool implication = false;
    bool within_hypothesis = false;  // k <= a
    MembershipResult premise_detail;
    MembershipResult conclusion_detail;
};

enum class IdealVariant { SingleAxis, AllAxes };

/// Tests: g*f in F^a + ideal  =>  g in F^{a-1} + ideal, where the ideal is
/// (x_i^k) or ((x_1...x_n)^k). A true premise with a false conclusion is a
/// counterexample to the divisibility property and is surfaced verbatim.
ImplicationReport verify_divisibility(const Poly& f, const Poly& g, std::int64_t a, std::int64_t k,
                                 IdealVariant variant, int axis = 1);

struct NormalizeResult {
    enum class Status { Ok, PreconditionFailed, SplitGuaranteeFailed } status = Status::Ok;
    Poly h_prime;
    Poly g1, g2;
    std::string message;
};

/// Improves a representative: given h in F^m and a witness g with
/// h - g*f in ((x_1...x_n)^m), splits g at dilation m-1 and returns
/// h' = h - g1*f, which lies in F^m ∩ ((x_1...x_n)^m) and equals h mod fP.
/// Status SplitGuaranteeFailed (g2 outside the ideal) would contradict the
/// divisibility implication and carries the full data.
NormalizeResult normalize_representative(const Poly& f, const Poly& h, const Poly& g, std::int64_t m);

/// Monomial exponents b with |b| <= cutoff, b >= (m,...,m), b in m*Delta,
/// in canonical (grlex) order.
std::vector<Exponent> logform_basis(const Poly& f, std::int64_t m, std::int64_t cutoff);

}  // namespace nplc
