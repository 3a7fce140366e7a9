// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace nplc {

/// Closed half-space {r : <normal, r> >= height} with primitive normal.
struct HalfSpace {
    ZVec normal;
    Z height;
    bool compact = false;  // facet of the polyhedron is bounded (normal > 0)
};

/// Facet normals of the full-dimensional cone generated by the input
/// vectors, via exact double description on the polar. Input order is
/// irrelevant (insertion is lexicographic); output is primitive, lex
/// sorted, irredundant. `homogenized` marks inputs that already carry a
/// homogenizing coordinate and is recorded for error messages only.
std::vector<ZVec> dd_facets(const std::vector<ZVec>& generators, bool homogenized = false);

/// Extreme rays of {v : <g, v> >= 0 for all g in generators}; the
/// generators must span the ambient space.
std::vector<ZVec> polar_extreme_rays(const std::vector<ZVec>& generators);

struct CompactFace {
    int dimension = 0;
    std::vector<std::size_t> vertex_indices;  // into NewtonPolyhedron::vertices, sorted
    std::vector<std::size_t> facet_indices;   // supporting facets (maximal tight set), sorted
};

// Newton polyhedron of a polynomial: convex hull of supp(f) + R_+^n.
// Facets carry both the compact ones (strictly positive normals) and the
// coordinate ones; vertices are the extreme points (a subset of supp f).
struct NewtonPolyhedron {
    int nvars = 0;
    std::vector<Exponent> vertices;            // lex sorted
    std::vector<HalfSpace> facets;             // lex sorted by (normal, height)
    std::vector<std::size_t> compact_facet_indices;
    bool axis_condition_ok = false;

    std::vector<const HalfSpace*> compact_facets() const {
        std::vector<const HalfSpace*> v;
        for (auto i : compact_facet_indices) v.push_back(&facets[i]);
        return v;
    }
};

NewtonPolyhedron newton_polyhedron(const Poly& f);

/// All compact faces (dimensions 0..n-1), each with vertex set and
/// maximal supporting facet set; sorted by (dim, vertex list).
std::vector<CompactFace> compact_face_lattice(const NewtonPolyhedron& np);

/// Face truncation f_delta for a compact face of the Newton polyhedron
/// of f (sum of tight facet normals as supporting data).
Poly face_poly(const Poly& f, const NewtonPolyhedron& np, const CompactFace& face);

/// Support function value min_{r in Delta} <v, r> for v >= 0.
Z height(const NewtonPolyhedron& np, const ZVec& v);

/// Membership of a rational point in the dilate a*Delta (a >= 0). The
/// 0-fold dilate is the recession orthant, so a = 0 only requires
/// point >= 0.
bool member(const NewtonPolyhedron& np, const QVec& point, const Q& a);
bool member(std::span<const HalfSpace> halfspaces, const QVec& point, const Q& a);

/// Lattice-point membership in a*region.
bool member_lattice(std::span<const HalfSpace> halfspaces, const Exponent& b, const Q& a);

/// nu_Delta(b) = max{a >= 0 : b in a*Delta} = min over compact facets of
/// <v,b>/c. Throws if the polyhedron has no compact facet.
Q filtration_value(const NewtonPolyhedron& np, const Exponent& b);
Q filtration_value(std::span<const HalfSpace> halfspaces, const Exponent& b);

// Relaxation of Delta cut out only by the compact facets meeting the
// coordinate hyperplane {r_axis = 0}: exactly those whose normal spans a
// common dual cone with e_axis. Its complement in the orthant is
// bounded. Dropping the dimension-(n-2) touches instead breaks the unit
// slab equality (x1^4+x2^4+x3^4+x1*x2*x3, axis 1, at (1,0,2)).
struct Delta1Region {
    int axis = 0;  // 1-based
    std::vector<HalfSpace> halfspaces;
    std::vector<std::size_t> source_facets;  // indices into np.facets
    std::vector<std::string> warnings;       // facets touching H_axis in dimension < n-2
};

Delta1Region build_delta1(const NewtonPolyhedron& np, int axis);

struct EnumerationLimits {
    std::uint64_t max_points = 1000000;  // hard cap on scanned box size
};

/// Axis-wise strict upper bound: points must satisfy b[axis-1] < bound.
struct AxisBound {
    int axis = 0;  // 1-based
    std::int64_t bound = 0;
};

/// All lattice points b >= 0 outside a*region satisfying the bounds, in
/// lexicographic order. Throws when the scan box exceeds the cap.
std::vector<Exponent> enumerate_complement(std::span<const HalfSpace> halfspaces, int nvars, const Q& a,
                                           const std::vector<AxisBound>& bounds = {},
                                           const EnumerationLimits& limits = {});

std::vector<Exponent> enumerate_complement(const NewtonPolyhedron& np, const Q& a,
                                           const std::vector<AxisBound>& bounds = {},
                                           const EnumerationLimits& limits = {});
std::vector<Exponent> enumerate_complement(const Delta1Region& d1, const Q& a,
                                           const std::vector<AxisBound>& bounds = {},
                                           const EnumerationLimits& limits = {});

}  // namespace nplc
