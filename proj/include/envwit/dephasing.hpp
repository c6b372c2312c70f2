#pragma once

// Pure-dephasing extension of the witness. In the rotating frame the reduced
// dynamics multiplies the coherences by exp(-Gamma(t)) and leaves populations
// untouched, so every factorized preparation obeys |x(t)| <= exp(-Gamma(t)).
// Gamma is supplied by the caller as a table or a small parametric family;
// the only properties relied on are Gamma(0) = 0 and Gamma(t) >= 0.

#include "envwit/linalg.hpp"
#include "envwit/witness.hpp"

#include <utility>
#include <vector>

namespace envwit {

// A decoherence function Gamma(t). Construct via one of the factories:
//   linear(kappa):            Gamma(t) = kappa t, kappa >= 0
//   power_law(kappa, eta):    Gamma(t) = kappa t^eta, kappa > 0, eta > 0
//   table(samples):           piecewise-linear through (t_i, Gamma_i) nodes
// Table nodes must have strictly increasing nonnegative times and nonnegative
// values; a (0, 0) anchor is implied when the first node starts later.
// Evaluation throws for t < 0 and, for tables, for t beyond the last node.
class DecoherenceFunction {
 public:
  static DecoherenceFunction linear(double kappa);
  static DecoherenceFunction power_law(double kappa, double eta);
  static DecoherenceFunction table(std::vector<std::pair<double, double>> samples);

  double operator()(double t) const;

  // Largest time the function can be evaluated at (infinity except for tables).
  double max_time() const;

 private:
  DecoherenceFunction() = default;
  enum class Kind { Linear, PowerLaw, Table };
  Kind kind_ = Kind::Linear;
  double kappa_ = 0.0;
  double eta_ = 1.0;
  std::vector<std::pair<double, double>> nodes_;
};

// Applies pure dephasing for time t: diagonal entries are copied unchanged,
// off-diagonal entries are scaled by exp(-Gamma(t)). Throws on invalid rho0,
// t < 0, or a negative Gamma evaluation.
Mat2 dephased_state(const Mat2& rho0, const DecoherenceFunction& gamma, double t);

// A sampled transverse coherence signal x(t) = <sigma_x>(t) together with the
// calibrated initial coherence.
struct CoherenceTrajectory {
  std::vector<std::pair<double, double>> samples;
  double x0 = 0.0;
};

// x(t) = x0 exp(-Gamma(t)) on the given times. Throws if |x0| > 1.
CoherenceTrajectory x_trajectory(double x0, const DecoherenceFunction& gamma,
                                 const std::vector<double>& times);

// The coherence bound exp(-Gamma(t)) obeyed by every factorized preparation.
// Equals 1 at t = 0 and lies in (0, 1] whenever Gamma >= 0.
double dephasing_envelope(const DecoherenceFunction& gamma, double t);

// One-sided witness for the dephasing model: certified iff some sample has
// |x(t)| > exp(-Gamma(t)) + tol. Reuses the WitnessReport layout with
// z_min/z_max = -+ the envelope and margin = |x| - envelope.
WitnessReport dephasing_witness(const CoherenceTrajectory& observed,
                                const DecoherenceFunction& gamma, double tol);

}  // namespace envwit
