#include "envwit/dephasing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace envwit {

DecoherenceFunction DecoherenceFunction::linear(double kappa) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("DecoherenceFunction::linear: kappa must be >= 0");
  DecoherenceFunction g;
  g.kind_ = Kind::Linear;
  g.kappa_ = kappa;
  return g;
}

DecoherenceFunction DecoherenceFunction::power_law(double kappa, double eta) {
  if (!(kappa > 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("DecoherenceFunction::power_law: kappa must be > 0");
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw std::invalid_argument("DecoherenceFunction::power_law: eta must be > 0");
  DecoherenceFunction g;
  g.kind_ = Kind::PowerLaw;
  g.kappa_ = kappa;
  g.eta_ = eta;
  return g;
}

DecoherenceFunction DecoherenceFunction::table(
    std::vector<std::pair<double, double>> samples) {
  if (samples.empty())
    throw std::invalid_argument("DecoherenceFunction::table: empty table");
  double prev_t = -1.0;
  for (const auto& [t, v] : samples) {
    if (!std::isfinite(t) || !std::isfinite(v))
      throw std::invalid_argument("DecoherenceFunction::table: non-finite entry");
    if (t < 0.0)
      throw std::invalid_argument("DecoherenceFunction::table: negative time");
    if (t <= prev_t)
      throw std::invalid_argument(
          "DecoherenceFunction::table: times must be strictly increasing");
    if (v < 0.0)
      throw std::invalid_argument("DecoherenceFunction::table: negative value");
    prev_t = t;
  }
  if (samples.front().first == 0.0 && samples.front().second != 0.0)
    throw std::invalid_argument(
        "DecoherenceFunction::table: value at t = 0 must be 0");
  if (samples.front().first > 0.0) samples.insert(samples.begin(), {0.0, 0.0});
  DecoherenceFunction g;
  g.kind_ = Kind::Table;
  g.nodes_ = std::move(samples);
  return g;
}

double DecoherenceFunction::operator()(double t) const {
  if (!(t >= 0.0))
    throw std::invalid_argument("DecoherenceFunction: time must be >= 0");
  switch (kind_) {
    case Kind::Linear:
      return kappa_ * t;
    case Kind::PowerLaw:
      return t == 0.0 ? 0.0 : kappa_ * std::pow(t, eta_);
    case Kind::Table: {
      if (t > nodes_.back().first) {
        std::ostringstream os;
        os << "DecoherenceFunction: t = " << t << " beyond table range (last node "
           << nodes_.back().first << ")";
        throw std::out_of_range(os.str());
      }
      const auto it = std::lower_bound(
          nodes_.begin(), nodes_.end(), t,
          [](const std::pair<double, double>& n, double x) { return n.first < x; });
      if (it->first == t) return it->second;
      const auto& [t1, v1] = *it;
      const auto& [t0, v0] = *(it - 1);
      return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
    }
  }
  return 0.0;
}

double DecoherenceFunction::max_time() const {
  return kind_ == Kind::Table ? nodes_.back().first
                              : std::numeric_limits<double>::infinity();
}

Mat2 dephased_state(const Mat2& rho0, const DecoherenceFunction& gamma, double t) {
  const DensityVerdict verdict = is_valid_density(rho0);
  if (!verdict)
    throw std::invalid_argument("dephased_state: invalid input state: " +
                                verdict.violation);
  const double g = gamma(t);
  if (g < 0.0)
    throw std::invalid_argument("dephased_state: negative decoherence value");
  const double damp = std::exp(-g);
  Mat2 out = rho0;
  out(0, 1) *= damp;
  out(1, 0) *= damp;
  return out;
}

CoherenceTrajectory x_trajectory(double x0, const DecoherenceFunction& gamma,
                                 const std::vector<double>& times) {
  if (!(std::abs(x0) <= 1.0))
    throw std::invalid_argument("x_trajectory: |x0| must be <= 1");
  CoherenceTrajectory traj;
  traj.x0 = x0;
  traj.samples.reserve(times.size());
  for (const double t : times) traj.samples.emplace_back(t, x0 * std::exp(-gamma(t)));
  return traj;
}

double dephasing_envelope(const DecoherenceFunction& gamma, double t) {
  const double g = gamma(t);
  if (g < 0.0)
    throw std::invalid_argument("dephasing_envelope: negative decoherence value");
  return std::exp(-g);
}

WitnessReport dephasing_witness(const CoherenceTrajectory& observed,
                                const DecoherenceFunction& gamma, double tol) {
  std::vector<std::pair<double, double>> samples = observed.samples;
  for (const auto& [t, x] : samples)
    if (!std::isfinite(t) || !std::isfinite(x))
      throw std::invalid_argument("dephasing_witness: non-finite sample");
  std::sort(samples.begin(), samples.end());

  WitnessReport report;
  report.tol = tol;
  report.samples.reserve(samples.size());
  std::vector<double> times, margins;
  times.reserve(samples.size());
  margins.reserve(samples.size());
  bool first = true;
  for (const auto& [t, x] : samples) {
    const double bound = dephasing_envelope(gamma, t);
    WitnessSample sample;
    sample.t = t;
    sample.z = x;
    sample.z_min = -bound;
    sample.z_max = bound;
    sample.margin = std::abs(x) - bound;
    report.samples.push_back(sample);
    times.push_back(t);
    margins.push_back(sample.margin);
    if (first || sample.margin > report.max_violation_margin) {
      report.max_violation_margin = sample.margin;
      report.max_violation_time = t;
      first = false;
    }
  }
  report.certified = !first && report.max_violation_margin > tol;
  report.violation_intervals = violation_intervals_from_margins(times, margins, tol);
  return report;
}

}  // namespace envwit
