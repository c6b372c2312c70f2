#pragma once

// Dense complex linear algebra for one- and two-qubit states: Pauli matrices,
// Kronecker products, the environment partial trace, and the bijections
// between density matrices and their Bloch / correlation-tensor coordinates.
//
// Conventions used throughout the library:
//   - two-qubit basis order is |00>, |01>, |10>, |11>, system qubit first
//   - sigma_z = diag(1, -1), so |0> is the +z eigenstate
//   - all tolerances are explicit parameters with stated defaults

#include <Eigen/Dense>

#include <complex>
#include <string>

namespace envwit {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec4c = Eigen::Vector4cd;

inline constexpr double kDefaultPsdTol = 1e-10;
inline constexpr double kDefaultHermTol = 1e-12;
inline constexpr double kDefaultTraceTol = 1e-12;

// Pauli matrix by axis: pauli(0) = I, pauli(1) = sigma_x, pauli(2) = sigma_y,
// pauli(3) = sigma_z. Throws std::invalid_argument for other indices.
const Mat2& pauli(int axis);

const Mat2& identity2();
const Mat2& sigma_x();
const Mat2& sigma_y();
const Mat2& sigma_z();

// Kronecker product of two 2x2 matrices (system factor first).
Mat4 kron(const Mat2& a, const Mat2& b);

// Trace over the environment (second) qubit of a 4x4 joint matrix.
Mat2 partial_trace_env(const Mat4& rho_se);

// rho = (I + v . sigma) / 2. Throws std::invalid_argument if |v| > 1 + tol.
Mat2 density_from_bloch(const Vec3& v, double tol = kDefaultHermTol);

// v_j = Tr[rho sigma_j]. Throws std::invalid_argument if rho is not Hermitian
// to within herm_tol (entrywise) or its trace is off 1 by more than trace_tol.
Vec3 bloch_from_density(const Mat2& rho, double herm_tol = kDefaultHermTol,
                        double trace_tol = kDefaultTraceTol);

// Result of a density-matrix validity check. When valid is false, violation
// names the failed property and the measured deviation.
struct DensityVerdict {
  bool valid = true;
  std::string violation;
  explicit operator bool() const { return valid; }
};

// Checks Hermiticity, unit trace, and spectrum >= -psd_tol. The 2x2 spectrum
// is evaluated in closed form, the 4x4 one with a Hermitian eigensolver.
DensityVerdict is_valid_density(const Mat2& rho, double psd_tol = kDefaultPsdTol,
                                double herm_tol = kDefaultHermTol,
                                double trace_tol = kDefaultTraceTol);
DensityVerdict is_valid_density(const Mat4& rho, double psd_tol = kDefaultPsdTol,
                                double herm_tol = kDefaultHermTol,
                                double trace_tol = kDefaultTraceTol);

// Two-point Pauli expectations C_jk = Tr[rho sigma_j x sigma_k] and their
// deviation T = C - s e^T from the product form. T vanishes exactly for
// product states and is the object the deviation vector is linear in.
struct CorrelationTensor {
  Mat3 C = Mat3::Zero();
  Mat3 T = Mat3::Zero();
};

// A 4x4 density matrix together with its Bloch-side coordinates: the system
// marginal s, the environment marginal e, and the correlation tensor.
struct JointState {
  Mat4 rho = Mat4::Identity() * 0.25;
  Vec3 s = Vec3::Zero();
  Vec3 e = Vec3::Zero();
  CorrelationTensor tensor;
};

// Extracts (s, e, C, T) from a valid density matrix. Throws
// std::invalid_argument naming the violated invariant otherwise.
JointState joint_decompose(const Mat4& rho_se, double psd_tol = kDefaultPsdTol);

// Reconstructs rho = (I + s.sigma x I + I x e.sigma + sum C_jk sigma_j x sigma_k) / 4.
// Always Hermitian with unit trace; positivity is the caller's problem since
// not every (s, e, C) triple corresponds to a state. Check with is_valid_density.
Mat4 joint_from_parts(const Vec3& s, const Vec3& e, const Mat3& C);

// Product state rho_s x rho_e from two Bloch vectors.
Mat4 product_joint(const Vec3& s, const Vec3& e);

}  // namespace envwit
