#pragma once

// Command-line front end. Each subcommand has a plain config struct and an
// entry point so tests can drive commands in-process; run() wires them to
// argument parsing. Payload goes to --out (or stdout), human summaries to
// stderr, and exit codes follow scripting conventions: verdicts are payload,
// only parse and validation failures are nonzero.

#include "envwit/dephasing.hpp"
#include "envwit/exchange.hpp"
#include "envwit/linalg.hpp"
#include "envwit/states.hpp"

#include <optional>
#include <string>
#include <vector>

namespace envwit::cli {

// A uniform grid start..end with n points (last point exactly end). n = 1 is
// allowed for single-point runs and then requires end == start.
struct GridSpec {
  double start = 0.0;
  double end = 0.0;
  int n = 0;
};

std::vector<double> linspace(const GridSpec& grid);

// Parsers for the compact flag syntaxes: "start,end,n", "x,y,z", and a
// row-major 3x3 "c11,c12,...,c33". All throw std::invalid_argument with the
// offending text on malformed input.
GridSpec parse_grid(const std::string& text);
Vec3 parse_vec3(const std::string& text);
Mat3 parse_mat3(const std::string& text);

// Time grid carrying both parameterizations; built from a GridSpec given in
// physical time or in the dimensionless alpha = Jt (the latter needs J != 0).
struct TimeGrid {
  std::vector<double> t;
  std::vector<double> alpha;
};

TimeGrid make_time_grid(const GridSpec& grid, bool grid_in_alpha, double J);

struct EnvelopeConfig {
  double J = 1.0;
  Vec3 s = Vec3::Zero();
  GridSpec grid;
  bool grid_in_alpha = false;
  std::string format = "csv";
  std::string out;
};

struct ExampleConfig {
  ExampleSpec spec;
  double J = 1.0;
  GridSpec grid;
  bool grid_in_alpha = false;
  double tol = kDefaultWitnessTol;
  std::string format = "csv";
  std::string out;
};

struct TrajectoryConfig {
  Vec3 s = Vec3::Zero();
  Vec3 e = Vec3::Zero();
  Mat3 C = Mat3::Zero();
  double J = 1.0;
  GridSpec grid;
  bool grid_in_alpha = false;
  double tol = kDefaultWitnessTol;
  std::string format = "csv";
  std::string out;
};

struct WitnessConfig {
  std::string data_path;  // "-" reads stdin
  Vec3 s = Vec3::Zero();
  double J = 1.0;
  double tol = 0.0;  // always explicit: external data carries its own noise
  std::string out;
};

struct DephasingConfig {
  DecoherenceFunction gamma = DecoherenceFunction::linear(1.0);
  std::optional<double> x0;       // simulate when set
  std::string data_path;          // ingest when nonempty; "-" reads stdin
  GridSpec grid;                  // used by the simulated path
  double tol = kDefaultWitnessTol;
  std::string format = "csv";
  std::string out;
};

struct OracleCheckConfig {
  Vec3 s = Vec3::Zero();
  double J = 1.0;
  GridSpec grid;
  bool grid_in_alpha = true;
  int resolution = 1000;
  bool corrupt_envelope = false;  // negative-control hook: must make it fail
  std::string format = "csv";
  std::string out;
};

int cmd_envelope(const EnvelopeConfig& config);
int cmd_example(const ExampleConfig& config);
int cmd_trajectory(const TrajectoryConfig& config);
int cmd_witness(const WitnessConfig& config);
int cmd_dephasing(const DephasingConfig& config);
int cmd_oracle_check(const OracleCheckConfig& config);

// Full argument-parsing entry point (what main() calls).
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace envwit::cli
