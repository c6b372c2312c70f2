#include "envwit/exchange.hpp"

#include <sstream>
#include <stdexcept>

namespace envwit {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_in_ball(const Vec3& v, const char* name) {
  const double n = v.norm();
  if (!(n <= 1.0 + 1e-12)) {
    std::ostringstream os;
    os << name << " has Bloch norm " << n << " > 1";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

const Mat4& exchange_operator() {
  static const Mat4 K = kron(sigma_x(), sigma_x()) + kron(sigma_y(), sigma_y()) +
                        kron(sigma_z(), sigma_z());
  return K;
}

const Mat4& swap_operator() {
  static const Mat4 S = [] {
    Mat4 s = Mat4::Zero();
    s(0, 0) = 1;
    s(1, 2) = 1;
    s(2, 1) = 1;
    s(3, 3) = 1;
    return s;
  }();
  return S;
}

Mat4 exchange_unitary(const ExchangeParams& params, double t) {
  return params.c(t) * Mat4::Identity() - kI * params.d(t) * swap_operator();
}

JointState evolve_joint(const JointState& state, const ExchangeParams& params,
                        double t) {
  const DensityVerdict verdict = is_valid_density(state.rho);
  if (!verdict)
    throw std::invalid_argument("evolve_joint: invalid input state: " +
                                verdict.violation);
  const Mat4 U = exchange_unitary(params, t);
  return joint_decompose(U * state.rho * U.adjoint());
}

Vec3 partial_swap_bloch(const Vec3& s, const Vec3& e, const ExchangeParams& params,
                        double t) {
  require_in_ball(s, "system Bloch vector");
  require_in_ball(e, "environment Bloch vector");
  const double c = params.c(t), d = params.d(t);
  return c * c * s + d * d * e - c * d * s.cross(e);
}

double z_factorized(const Vec3& s, const Vec3& e, const ExchangeParams& params,
                    double t) {
  require_in_ball(s, "system Bloch vector");
  require_in_ball(e, "environment Bloch vector");
  const double c = params.c(t), d = params.d(t);
  return c * c * s.z() + d * d * e.z() - c * d * (s.x() * e.y() - s.y() * e.x());
}

double z_observed(const JointState& state, const ExchangeParams& params, double t) {
  const DensityVerdict verdict = is_valid_density(state.rho);
  if (!verdict)
    throw std::invalid_argument("z_observed: invalid input state: " +
                                verdict.violation);
  const Mat4 U = exchange_unitary(params, t);
  const Mat2 reduced = partial_trace_env(U * state.rho * U.adjoint());
  return (reduced * sigma_z()).trace().real();
}

Vec3 deviation_vector(const JointState& state, const ExchangeParams& params,
                      double t) {
  const JointState evolved = evolve_joint(state, params, t);
  return evolved.s - partial_swap_bloch(state.s, state.e, params, t);
}

}  // namespace envwit
