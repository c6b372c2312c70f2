#include "envwit/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace envwit {

namespace {

constexpr Complex kI{0.0, 1.0};

struct ExchangeEigen {
  Mat4 vectors;
  Eigen::Vector4d values;
};

const ExchangeEigen& exchange_eigensystem() {
  static const ExchangeEigen sys = [] {
    Eigen::SelfAdjointEigenSolver<Mat4> es(exchange_operator());
    return ExchangeEigen{es.eigenvectors(), es.eigenvalues()};
  }();
  return sys;
}

}  // namespace

Mat4 matrix_exponential_unitary(const ExchangeParams& params, double t) {
  const ExchangeEigen& sys = exchange_eigensystem();
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k)
    phases[k] = std::exp(-kI * params.J * t * sys.values[k]);
  return sys.vectors * phases.asDiagonal() * sys.vectors.adjoint();
}

Vec3 fibonacci_sphere_point(int i, int n) {
  if (n < 1 || i < 0 || i >= n)
    throw std::invalid_argument("fibonacci_sphere_point: need 0 <= i < n");
  constexpr double golden_angle =
      2.0 * std::numbers::pi * (1.0 - 1.0 / std::numbers::phi);
  const double z = 1.0 - 2.0 * (i + 0.5) / n;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden_angle * i;
  return {r * std::cos(phi), r * std::sin(phi), z};
}

std::pair<double, double> brute_force_envelope(const Vec3& s,
                                               const ExchangeParams& params,
                                               double t, int resolution) {
  if (resolution < 8)
    throw std::invalid_argument("brute_force_envelope: resolution must be >= 8");
  const Mat2 rho_s = density_from_bloch(s);
  const Mat4 U = matrix_exponential_unitary(params, t);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < resolution; ++i) {
    const Mat2 rho_e = density_from_bloch(fibonacci_sphere_point(i, resolution));
    const Mat4 evolved = U * kron(rho_s, rho_e) * U.adjoint();
    const double z = (partial_trace_env(evolved) * sigma_z()).trace().real();
    lo = std::min(lo, z);
    hi = std::max(hi, z);
  }
  return {lo, hi};
}

double phase_insensitive_distance(const Mat4& u1, const Mat4& u2) {
  const Complex overlap = (u1.adjoint() * u2).trace();
  // Align u2 with u1 by the phase of the overlap; for orthogonal inputs the
  // overlap vanishes and no alignment helps, so compare directly.
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return (u1 - u2 / phase).cwiseAbs().maxCoeff();
}

}  // namespace envwit
