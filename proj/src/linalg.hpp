// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nplc {

using ZMat = std::vector<ZVec>;
using QMat = std::vector<QVec>;

/// Rank of an integer matrix (rows), exact fraction-free elimination.
int rank_z(ZMat m);

/// Determinant of a square integer matrix (Bareiss).
Z det_z(ZMat m);

/// gcd of all k×k minors of a k×n matrix whose rows are linearly
/// independent (the lattice index of the row span). Throws if the rows
/// are dependent.
Z minor_gcd(const ZMat& rows);

/// Solves M * t = rhs exactly over the rationals; M square nonsingular.
QVec solve_q(const ZMat& m, const ZVec& rhs);

/// Rank over Q plus, when the columns are dependent, one nonzero kernel
/// vector. Matrix given by rows.
struct RankResult {
    int rank = 0;
    std::optional<QVec> kernel;  // a column-space kernel vector, if any
};
RankResult rank_with_kernel_q(const QMat& rows, std::size_t ncols);

/// Rank of an integer matrix reduced mod p (p prime, fits in 32 bits).
int rank_mod_p(const std::vector<std::vector<std::uint32_t>>& rows, std::size_t ncols, std::uint32_t p);

/// Smith normal form: returns diag entries d_1 | d_2 | ... of U*M*V and the
/// inverse transform data needed to enumerate Z^n / M Z^n: columns of
/// `uinv` generate the quotient when scanned against the divisors.
struct SmithResult {
    ZVec divisors;  // d_1, ..., d_n (nonnegative)
    ZMat uinv;      // n×n, unimodular
};
SmithResult smith_normal_form(ZMat m);

/// Integer vector w with <a, w> = gcd of the entries of a (extended gcd
/// across a vector). a must be nonzero.
ZVec gcd_combination(const ZVec& a);

}  // namespace nplc
