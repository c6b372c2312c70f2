#pragma once

// Independent brute-force checks of the closed forms. The unitary is rebuilt
// by exponentiating the exchange generator through a Hermitian
// eigendecomposition, and the envelope is re-derived by scanning pure
// environment states on a Fibonacci sphere, so neither path shares code with
// the analytic formulas it validates.

#include "envwit/exchange.hpp"
#include "envwit/linalg.hpp"

#include <utility>

namespace envwit {

// exp(-iJtK) computed by diagonalizing K and exponentiating its eigenvalues.
// Matches exchange_unitary up to a global phase.
Mat4 matrix_exponential_unitary(const ExchangeParams& params, double t);

// i-th of n near-uniform points on the unit sphere (golden-angle spiral).
Vec3 fibonacci_sphere_point(int i, int n);

// min and max of z(t) over `resolution` pure environment states, each evolved
// with matrix_exponential_unitary. The returned interval is contained in the
// analytic envelope and its endpoints approach the analytic ones at the
// angular sampling rate O(resolution^-1/2). Requires resolution >= 8.
std::pair<double, double> brute_force_envelope(const Vec3& s,
                                               const ExchangeParams& params,
                                               double t, int resolution);

// max entrywise |U1 - exp(i phi) U2| after choosing the global phase phi that
// best aligns U2 with U1. Zero (to rounding) iff the two unitaries agree up
// to a global phase.
double phase_insensitive_distance(const Mat4& u1, const Mat4& u2);

}  // namespace envwit
