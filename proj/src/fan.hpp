// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "linalg.hpp"
#include "polyhedron.hpp"

#include <cstdint>
#include <vector>

namespace nplc {

// Fan supported on the nonnegative orthant, stored by deduplicated
// primitive rays (lex sorted) and maximal cones as sorted ray-index
// lists. Faces are implicit.
struct Fan {
    int dim = 0;
    std::vector<ZVec> rays;
    std::vector<std::vector<std::size_t>> cones;  // canonical: sorted indices, cones sorted lex
};

/// Normal fan of the Newton polyhedron: one maximal cone per vertex,
/// consisting of the functionals minimized at that vertex.
Fan dual_fan(const NewtonPolyhedron& np);

/// Lattice index of the simplicial cone spanned by the rows: gcd of all
/// maximal minors. 1 means regular (unimodular).
Z cone_multiplicity(const ZMat& rays);

struct RegularizeStats {
    std::uint64_t triangulated_cones = 0;
    std::uint64_t star_subdivisions = 0;
    Z max_multiplicity_before = 0;
};

struct RegularizeLimits {
    std::uint64_t max_subdivisions = 100000;
};

/// Simplicial unimodular refinement with the same support: triangulates
/// non-simplicial cones (pulling at the lexicographically least ray),
/// then star-subdivides worst cones at the minimal lattice point of the
/// fundamental parallelepiped until every multiplicity is 1. All input
/// rays are preserved. Deterministic.
Fan regularize(const Fan& fan, RegularizeStats* stats = nullptr, const RegularizeLimits& limits = {});

/// True iff every maximal cone of `fine` is contained in some maximal
/// cone of `coarse`. Throws on ambient dimension mismatch.
bool refines(const Fan& fine, const Fan& coarse);

/// Structural check: rays nonnegative and primitive, cones full-
/// dimensional, and every interior wall shared by exactly two maximal
/// cones while boundary walls (inside a coordinate hyperplane) belong to
/// one. This certifies support = R_+^n for fans built over the orthant.
/// Returns a list of violations (empty means valid).
std::vector<std::string> fan_support_violations(const Fan& fan);

/// Membership of a vector in the cone spanned by the given rays.
bool cone_contains(const std::vector<ZVec>& rays, const ZVec& v);

}  // namespace nplc
