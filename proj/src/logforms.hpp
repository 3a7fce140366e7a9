// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nplc {

/// An m-fold form h*(dx)^m / f^m, represented by its numerator and level.
struct LogFormRep {
    Poly h;
    std::int64_t m = 1;
};

/// Order of h*(dx)^m/f^m along the toric divisor of the ray v:
/// nu_form = nu_h + m*(<v,1> - 1) - m*nu_f, logarithmic iff >= -m.
struct RayValuationReport {
    ZVec ray;
    Z nu_h = 0;
    Z nu_f = 0;
    Z divisor_discrepancy = 0;  // <v,1> - 1
    Z nu_form = 0;
    Z threshold = 0;  // -m
    bool pass = false;
};

/// Minimum of <v, .> over the support of p.
Z ray_valuation(const Poly& p, const ZVec& v);

RayValuationReport form_valuation(const Poly& f, const LogFormRep& rep, const ZVec& ray);

struct LogFormRayEntry {
    ZVec ray;
    bool coordinate = false;
    Z required = 0;  // lower bound on nu_h along this ray
    Z actual = 0;
    bool pass = false;
};

struct LogFormReport {
    bool is_log_form = false;
    std::vector<LogFormRayEntry> rays;
};

/// Log-pole test over a regular subdivision of the dual fan: along every
/// non-coordinate ray nu_h >= m*nu_f (exceptional part), along every
/// coordinate ray nu_h >= m (strict transform of the coordinate divisor).
/// The fan must contain every compact facet normal of the Newton
/// polyhedron of f.
LogFormReport is_log_form(const Poly& f, const LogFormRep& rep, const Fan& fan);
LogFormReport is_log_form(const Poly& f, const NewtonPolyhedron& np, const LogFormRep& rep, const Fan& fan);

/// Classes agree in P/fP iff f divides the difference exactly.
bool residue_class_equal(const Poly& f, const Poly& h1, const Poly& h2);

struct RoundingCase {
    std::int64_t m = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t nu = 0;
    Q lambda;
    bool premise = false;
    bool conclusion = false;
    bool implication = false;
    bool within_hypothesis = false;  // 0 < lambda < 1/(m*a)
};

/// Discreteness step: premise (lambda-1)a + nu/m + b > -1 forces the
/// conclusion nu/m + b - a >= -1 whenever lambda < 1/(m*a), because the
/// left side lives in (1/m)Z. Exact rational arithmetic.
RoundingCase rounding_implication(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t nu, const Q& lambda);

struct DeformationInstance {
    Poly F;                      // polynomial in n+1 variables, last = t
    std::int64_t m = 1;
    Poly H;                      // candidate extension, same variables
    std::optional<Poly> base_f;  // expected F(x, 0), cross-checked when given
};

struct DeformationRayRow {
    ZVec ray;
    bool coordinate = false;  // coordinate ray of an x-variable
    Z nu_H = 0;
    Z a = 0;  // order of F along the ray
    Z b = 0;  // <w,1> - 1
    Z margin = 0;  // nu_H + m*b - m*a - (-m); pass iff >= 0
    bool pass = false;
};

struct DeformationReport {
    bool pass = false;
    std::vector<DeformationRayRow> rows;
    std::size_t fan_rays = 0;
    std::uint64_t subdivisions = 0;
    std::string verdict;
};

/// Toric log-pole extension check for a 1-parameter deformation: builds
/// the Newton polyhedron of F in n+1 variables, regularizes its dual fan
/// and verifies nu_H + m*b - m*a >= -m on every non-coordinate ray plus
/// nu_H >= m on the x-coordinate rays. Requires the axis condition in the
/// x-variables (the toric route needs it); the t-axis is exempt.
DeformationReport deformation_extension_check(const DeformationInstance& inst,
                                              const RegularizeLimits& limits = {});

}  // namespace nplc
