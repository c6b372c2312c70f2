#pragma once

// Canonical correlated initial states used as fixtures and figure sources,
// together with the closed forms of their z(t) trajectories under the
// exchange dynamics. All three families share the entangled pair
// |Psi> = (|01> - i|10>)/sqrt(2); the relative phase -i fixes the sign of the
// cross term so the correlated trajectory of |Psi> is z(t) = -sin(4Jt).

#include "envwit/exchange.hpp"
#include "envwit/linalg.hpp"

#include <string>
#include <string_view>

namespace envwit {

enum class StateFamily {
  // |Psi><Psi| itself: maximally entangled, maximally mixed marginals.
  bell,
  // p |01><01| + (1-p) |Psi><Psi|: polarized product part mixed with the pair.
  product_entangled_mixture,
  // p I/4 + (1-p) |Psi><Psi|: isotropic noise mixed with the pair.
  maxmixed_entangled_mixture,
};

struct ExampleSpec {
  StateFamily family = StateFamily::bell;
  double p = 0.0;  // mixing weight in [0, 1]; ignored by the bell family
};

// Name <-> enum mapping used by the CLI ("bell", "product-entangled-mixture",
// "maxmixed-entangled-mixture"). Throws std::invalid_argument on unknown names.
StateFamily family_from_name(std::string_view name);
std::string family_name(StateFamily family);

// The shared entangled pair |Psi> = (|01> - i|10>)/sqrt(2).
Vec4c bell_pair();

// Builds the joint state of the requested family. Throws on p outside [0, 1].
JointState make_state(const ExampleSpec& spec);

// Closed-form z(t) of each family:
//   bell:                        -sin(4Jt)
//   product_entangled_mixture:    p cos(4Jt) + (p-1) sin(4Jt)
//   maxmixed_entangled_mixture:   (p-1) sin(4Jt)
double closed_form_z(const ExampleSpec& spec, const ExchangeParams& params,
                     double t);

}  // namespace envwit
