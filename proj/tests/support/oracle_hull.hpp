// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "polyhedron.hpp"

#include <vector>

namespace nplc::testing {

struct OracleFacet {
    ZVec normal;  // primitive, nonnegative
    Z height;
    bool compact;
};

/// Brute-force facet enumeration for the Newton polyhedron of f, fully
/// independent of the double-description kernel: candidate normals come
/// from null spaces of (n-1)-subsets of support-point differences and
/// coordinate directions; a candidate survives iff its minimizing face
/// has dimension n-1. Intended for small inputs (n <= 4, few points).
std::vector<OracleFacet> oracle_newton_facets(const Poly& f);

/// Compares against the production polyhedron; returns a description of
/// the first discrepancy, or the empty string when the facet sets match
/// exactly.
std::string compare_with_oracle(const Poly& f, const NewtonPolyhedron& np);

}  // namespace nplc::testing
