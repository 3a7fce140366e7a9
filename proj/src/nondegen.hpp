// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "polyhedron.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nplc {

/// A common zero of all torus-adapted derivatives x_i d/dx_i of a face
/// polynomial. prime == 0 means an exact rational point; otherwise the
/// values are residues in F_p*.
struct TorusWitness {
    std::uint32_t prime = 0;
    QVec values;                 // length nvars; free variables carry 1
    std::vector<int> free_vars;  // 1-based indices of variables absent from the face
};

struct SearchConfig {
    std::vector<std::uint32_t> primes = {101, 103, 211};
    std::uint64_t max_evaluations_per_face = 10000000;
};

struct TorusSearchResult {
    std::optional<TorusWitness> witness;
    bool decided_exactly = false;  // verdict is a proof, not a scan outcome
    bool budget_exceeded = false;
    std::vector<std::uint32_t> primes_scanned;
    std::string note;
};

/// Exhaustive scan of (F_p*)^k over the variables appearing in g, for
/// each configured prime, for a common zero of the log-derivatives.
TorusSearchResult torus_critical_search_ff(const Poly& g, const SearchConfig& cfg);

/// Exact decision for faces whose support has affine parameter rank <= 1
/// (vertices and edge-type faces): the system collapses to univariate
/// gcd conditions. Returns decided_exactly = false when the face is out
/// of scope for this mode.
TorusSearchResult torus_critical_search_exact(const Poly& g, const SearchConfig& cfg);

/// Substitutes the witness into all n log-derivatives of g and checks
/// they vanish (exactly, or mod the witness prime).
bool verify_witness(const Poly& g, const TorusWitness& w);

enum class NondegenStatus { Nondegenerate, Degenerate, Unknown };

struct FaceCheckLog {
    CompactFace face;
    std::vector<Exponent> face_vertices;  // resolved coordinates, canonical order
    Poly face_polynomial;
    std::string mode;  // "exact" or "finite_field"
    bool decided_exactly = false;
    bool budget_exceeded = false;
    std::vector<std::uint32_t> primes_scanned;
    std::optional<TorusWitness> witness;
    std::string note;
};

struct NondegeneracyVerdict {
    NondegenStatus status = NondegenStatus::Unknown;
    bool all_faces_exact = false;
    std::string confidence;  // human-readable strength of the verdict
    std::vector<FaceCheckLog> faces;
    std::optional<std::size_t> witness_face;  // first degenerate face, canonical order
};

/// Kouchnirenko nondegeneracy: for every compact face delta of the
/// Newton polyhedron, the log-derivatives of f_delta must have no common
/// torus zero. Exact on vertex/edge faces, finite-field exhaustion
/// elsewhere; a face whose scan exceeds the budget is reported Unknown.
NondegeneracyVerdict check_nondegenerate(const Poly& f, const SearchConfig& cfg = {});

}  // namespace nplc
