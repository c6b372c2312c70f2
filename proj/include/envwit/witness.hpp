#pragma once

// The factorized envelope and the one-sided correlation witness. For a
// calibrated system marginal s, z(t) restricted to product initial states is
// an affine functional of the environment Bloch vector, so its range over all
// admissible environments is an interval computable in closed form. Any
// observed value outside that interval certifies initial correlations; a
// value inside certifies nothing.

#include "envwit/exchange.hpp"
#include "envwit/linalg.hpp"

#include <utility>
#include <vector>

namespace envwit {

// Default slack for analytic trajectories. External data must supply an
// explicit tolerance reflecting its noise level.
inline constexpr double kDefaultWitnessTol = 1e-9;

// Extrema of f(e) = a . e + b over the unit ball |e| <= 1. The maximum is
// b + |a| at e = a/|a|, the minimum b - |a| at -a/|a|. When a = 0 the
// functional is constant and the direction is meaningless; degenerate is set.
struct AffineExtrema {
  double min = 0.0;
  double max = 0.0;
  Vec3 argmax = Vec3::UnitZ();
  bool degenerate = false;
};

AffineExtrema affine_extrema(const Vec3& a, double b);

// One evaluation of the factorized envelope: the reachable interval
// [z_min, z_max] and the pure environment state achieving the upper endpoint
// (its antipode achieves the lower one).
struct EnvelopePoint {
  double z_min = 0.0;
  double z_max = 0.0;
  Vec3 extremal_e = Vec3::UnitZ();
  bool degenerate = false;
};

// Envelope of z(t) over every product initial state with system marginal s:
// z(e) = a(t) . e + b(t) with a(t) = (cd s_y, -cd s_x, d^2), b(t) = c^2 s_z,
// hence z_max/min = c^2 s_z +- |d| sqrt(d^2 + c^2 (s_x^2 + s_y^2)).
// Throws if |s| > 1 + 1e-12.
EnvelopePoint envelope_heisenberg(const Vec3& s, const ExchangeParams& params,
                                  double t);

// The envelope as a reusable callable for a fixed calibration.
struct Envelope {
  Vec3 s = Vec3::Zero();
  ExchangeParams params;
  EnvelopePoint operator()(double t) const {
    return envelope_heisenberg(s, params, t);
  }
};

struct WitnessSample {
  double t = 0.0;
  double z = 0.0;
  double z_min = 0.0;
  double z_max = 0.0;
  // max(z_min - z, z - z_max); positive means the sample left the envelope.
  double margin = 0.0;
};

struct TimeInterval {
  double begin = 0.0;
  double end = 0.0;
};

// Outcome of a witness evaluation. The verdict is one-sided by construction:
// certified = true means at least one sample is incompatible with every
// factorized preparation; certified = false only means the sampled times are
// compatible with some product state, never that correlations are absent.
struct WitnessReport {
  std::vector<WitnessSample> samples;
  std::vector<TimeInterval> violation_intervals;
  bool certified = false;
  double max_violation_time = 0.0;
  double max_violation_margin = 0.0;
  double tol = kDefaultWitnessTol;
};

// Compares observed (t, z) samples against the envelope for marginal s.
// certified iff some margin exceeds tol. Samples are processed in ascending
// time order; interval endpoints interpolate the margin's crossings of tol
// linearly between neighboring samples. Throws on |s| > 1 or non-finite input.
WitnessReport witness_check(std::vector<std::pair<double, double>> observed,
                            const Vec3& s, const ExchangeParams& params,
                            double tol = kDefaultWitnessTol);

// Interval extraction shared by the exchange and dephasing witnesses: the
// sub-intervals of the sampled time range where margin > tol, with linearly
// interpolated boundaries.
std::vector<TimeInterval> violation_intervals_from_margins(
    const std::vector<double>& times, const std::vector<double>& margins,
    double tol);

// Times where the trajectory z(t) = (p-1) sin(4Jt) of the maximally-mixed /
// entangled mixture leaves its envelope +-sin^2(2Jt), i.e. where
// |1-p| |sin(4Jt)| > sin^2(2Jt). Empty for p = 1; nonempty for every p < 1
// on a grid fine enough to resolve the crossings near 2Jt = 0 and pi.
std::vector<TimeInterval> violation_times_example3(double p,
                                                   const ExchangeParams& params,
                                                   const std::vector<double>& grid);

}  // namespace envwit
