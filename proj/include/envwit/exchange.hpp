#pragma once

// Isotropic Heisenberg exchange between the system qubit and a single
// environment qubit: H = J * (sx x sx + sy x sy + sz x sz). The generated
// unitary is a partial swap, so the reduced dynamics of product states has a
// closed form in Bloch coordinates. Everything here is exact; no integrators.

#include "envwit/linalg.hpp"

namespace envwit {

// Coupling strength J plus the derived scalars that parameterize the partial
// swap: c = cos(2Jt), d = sin(2Jt), and the dimensionless time alpha = Jt.
struct ExchangeParams {
  double J = 1.0;

  double c(double t) const { return std::cos(2.0 * J * t); }
  double d(double t) const { return std::sin(2.0 * J * t); }
  double alpha(double t) const { return J * t; }
};

// The exchange operator K = sum_j sigma_j x sigma_j = 2 SWAP - I. Its square
// satisfies K^2 = 3I - 2K (eigenvalues 1 and -3).
const Mat4& exchange_operator();

// The two-qubit SWAP gate.
const Mat4& swap_operator();

// U(t) = cos(2Jt) I - i sin(2Jt) SWAP, the exponential of -iJtK up to a
// global phase. At t = 0 it is the identity, at 2Jt = pi/2 a full swap.
Mat4 exchange_unitary(const ExchangeParams& params, double t);

// Conjugates the joint state by U(t) and re-decomposes it. Throws on invalid
// input states.
JointState evolve_joint(const JointState& state, const ExchangeParams& params,
                        double t);

// Closed-form reduced Bloch vector of an initially factorized pair:
// s(t) = c^2 s + d^2 e - c d (s x e). Throws if either vector leaves the
// Bloch ball by more than 1e-12.
Vec3 partial_swap_bloch(const Vec3& s, const Vec3& e, const ExchangeParams& params,
                        double t);

// The z component of partial_swap_bloch:
// z(t) = c^2 s_z + d^2 e_z - c d (s_x e_y - s_y e_x).
double z_factorized(const Vec3& s, const Vec3& e, const ExchangeParams& params,
                    double t);

// Tr[rho_S(t) sigma_z] from the full 4x4 evolution. Valid for arbitrary
// (correlated) joint states.
double z_observed(const JointState& state, const ExchangeParams& params, double t);

// delta(t) = (full-evolution Bloch vector) - partial_swap_bloch(s, e). Zero
// for every product state; linear in the deviation tensor T otherwise.
Vec3 deviation_vector(const JointState& state, const ExchangeParams& params,
                      double t);

}  // namespace envwit
