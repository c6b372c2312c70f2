#include "envwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace envwit {

AffineExtrema affine_extrema(const Vec3& a, double b) {
  AffineExtrema ex;
  const double norm = a.norm();
  ex.max = b + norm;
  ex.min = b - norm;
  if (norm > 0.0) {
    ex.argmax = a / norm;
  } else {
    ex.degenerate = true;
    ex.argmax = Vec3::UnitZ();
  }
  return ex;
}

EnvelopePoint envelope_heisenberg(const Vec3& s, const ExchangeParams& params,
                                  double t) {
  const double n = s.norm();
  if (!(n <= 1.0 + 1e-12)) {
    std::ostringstream os;
    os << "envelope_heisenberg: system Bloch norm " << n << " > 1";
    throw std::invalid_argument(os.str());
  }
  const double c = params.c(t), d = params.d(t);
  const Vec3 a{c * d * s.y(), -c * d * s.x(), d * d};
  const double b = c * c * s.z();
  const AffineExtrema ex = affine_extrema(a, b);
  EnvelopePoint pt;
  pt.z_min = ex.min;
  pt.z_max = ex.max;
  pt.extremal_e = ex.argmax;
  pt.degenerate = ex.degenerate;
  return pt;
}

std::vector<TimeInterval> violation_intervals_from_margins(
    const std::vector<double>& times, const std::vector<double>& margins,
    double tol) {
  if (times.size() != margins.size())
    throw std::invalid_argument(
        "violation_intervals_from_margins: times and margins differ in length");
  std::vector<TimeInterval> intervals;
  const size_t n = times.size();
  bool open = false;
  TimeInterval cur;
  auto cross = [&](size_t i) {
    // Linear interpolation of the time where margin(t) crosses tol between
    // samples i and i+1.
    const double m0 = margins[i] - tol, m1 = margins[i + 1] - tol;
    return times[i] + (times[i + 1] - times[i]) * (m0 / (m0 - m1));
  };
  for (size_t i = 0; i < n; ++i) {
    const bool inside = margins[i] > tol;
    if (inside && !open) {
      open = true;
      cur.begin = (i == 0) ? times[0] : cross(i - 1);
    } else if (!inside && open) {
      open = false;
      cur.end = cross(i - 1);
      intervals.push_back(cur);
    }
  }
  if (open) {
    cur.end = times[n - 1];
    intervals.push_back(cur);
  }
  return intervals;
}

WitnessReport witness_check(std::vector<std::pair<double, double>> observed,
                            const Vec3& s, const ExchangeParams& params,
                            double tol) {
  for (const auto& [t, z] : observed)
    if (!std::isfinite(t) || !std::isfinite(z))
      throw std::invalid_argument("witness_check: non-finite sample");
  std::sort(observed.begin(), observed.end());

  WitnessReport report;
  report.tol = tol;
  report.samples.reserve(observed.size());
  std::vector<double> times, margins;
  times.reserve(observed.size());
  margins.reserve(observed.size());
  bool first = true;
  for (const auto& [t, z] : observed) {
    const EnvelopePoint env = envelope_heisenberg(s, params, t);
    WitnessSample sample;
    sample.t = t;
    sample.z = z;
    sample.z_min = env.z_min;
    sample.z_max = env.z_max;
    sample.margin = std::max(env.z_min - z, z - env.z_max);
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

std::vector<TimeInterval> violation_times_example3(double p,
                                                   const ExchangeParams& params,
                                                   const std::vector<double>& grid) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("violation_times_example3: p must lie in [0, 1]");
  std::vector<double> margins;
  margins.reserve(grid.size());
  for (const double t : grid) {
    const double d = params.d(t);
    margins.push_back(std::abs(1.0 - p) * std::abs(std::sin(4.0 * params.J * t)) -
                      d * d);
  }
  return violation_intervals_from_margins(grid, margins, 0.0);
}

}  // namespace envwit
