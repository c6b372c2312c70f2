#include "envwit/states.hpp"

#include <cmath>
#include <stdexcept>

namespace envwit {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_weight(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("make_state: mixing weight p must lie in [0, 1]");
}

}  // namespace

StateFamily family_from_name(std::string_view name) {
  if (name == "bell") return StateFamily::bell;
  if (name == "product-entangled-mixture") return StateFamily::product_entangled_mixture;
  if (name == "maxmixed-entangled-mixture") return StateFamily::maxmixed_entangled_mixture;
  throw std::invalid_argument("unknown state family '" + std::string(name) +
                              "' (expected bell, product-entangled-mixture, or "
                              "maxmixed-entangled-mixture)");
}

std::string family_name(StateFamily family) {
  switch (family) {
    case StateFamily::bell:
      return "bell";
    case StateFamily::product_entangled_mixture:
      return "product-entangled-mixture";
    case StateFamily::maxmixed_entangled_mixture:
      return "maxmixed-entangled-mixture";
  }
  throw std::invalid_argument("family_name: unknown family");
}

Vec4c bell_pair() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec4c psi;
  psi << Complex{0.0, 0.0}, Complex{inv_sqrt2, 0.0}, -kI * inv_sqrt2,
      Complex{0.0, 0.0};
  return psi;
}

JointState make_state(const ExampleSpec& spec) {
  const Vec4c psi = bell_pair();
  const Mat4 pair = psi * psi.adjoint();
  switch (spec.family) {
    case StateFamily::bell:
      return joint_decompose(pair);
    case StateFamily::product_entangled_mixture: {
      require_weight(spec.p);
      Mat4 product = Mat4::Zero();
      product(1, 1) = 1.0;  // |01><01|
      return joint_decompose(spec.p * product + (1.0 - spec.p) * pair);
    }
    case StateFamily::maxmixed_entangled_mixture: {
      require_weight(spec.p);
      return joint_decompose(spec.p * 0.25 * Mat4::Identity() +
                             (1.0 - spec.p) * pair);
    }
  }
  throw std::invalid_argument("make_state: unknown family");
}

double closed_form_z(const ExampleSpec& spec, const ExchangeParams& params,
                     double t) {
  const double s4 = std::sin(4.0 * params.J * t);
  switch (spec.family) {
    case StateFamily::bell:
      return -s4;
    case StateFamily::product_entangled_mixture:
      require_weight(spec.p);
      return spec.p * std::cos(4.0 * params.J * t) + (spec.p - 1.0) * s4;
    case StateFamily::maxmixed_entangled_mixture:
      require_weight(spec.p);
      return (spec.p - 1.0) * s4;
  }
  throw std::invalid_argument("closed_form_z: unknown family");
}

}  // namespace envwit
