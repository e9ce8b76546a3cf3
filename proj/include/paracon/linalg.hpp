#pragma once

#include "paracon/rational.hpp"

#include <utility>
#include <vector>

namespace paracon {

// Exact rank over the rationals (fraction-free Bareiss elimination).
int rank_of(const QMatrix& m);

// Basis of { x : m x = 0 }; returns exactly cols - rank(m) vectors.
std::vector<QVector> kernel_basis(const QMatrix& m);

// Exact inverse; throws std::invalid_argument on a singular input.
QMatrix inverse(const QMatrix& m);

// Solve m x = rhs for a consistent system (least-structure exact solve).
// Throws std::invalid_argument if the system is inconsistent.
QVector solve(const QMatrix& m, const QVector& rhs);

// Default interpolation nodes 0, 1, -1, 2, -2, ...: small integers, pairwise
// distinct, minimal coefficient growth.
Rat interpolation_node(int k);

// Coefficients (constant term first, exactly `count` of them) of the unique
// polynomial of degree < #nodes through the samples.  No trimming.
std::vector<Rat> poly_coeffs(const std::vector<Rat>& nodes,
                             const std::vector<Rat>& values, int count);

// Interpolation with trailing zero coefficients trimmed, so the result length
// is 1 + deg.  The zero polynomial comes back as an empty list.
// Duplicate nodes signal a caller bug -> std::invalid_argument.
std::vector<Rat> interpolate(const std::vector<std::pair<Rat, Rat>>& samples);

// Horner evaluation, constant term first.
Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x);

} // namespace paracon
