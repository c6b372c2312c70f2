#include "envwit/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include "envwit/oracle.hpp"
#include "envwit/parallel.hpp"
#include "envwit/trajectory_io.hpp"
#include "envwit/witness.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace envwit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<double> parse_doubles(const std::string& text, size_t expected,
                                  const char* what) {
  std::vector<double> values;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string field = text.substr(start, comma - start);
    const auto strip = [](std::string& s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    };
    strip(field);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty() ||
        !std::isfinite(v)) {
      std::ostringstream os;
      os << what << ": cannot parse '" << text << "' (bad field '" << field << "')";
      throw std::invalid_argument(os.str());
    }
    values.push_back(v);
    start = comma + 1;
  }
  if (values.size() != expected) {
    std::ostringstream os;
    os << what << ": expected " << expected << " comma-separated numbers, got "
       << values.size() << " in '" << text << "'";
    throw std::invalid_argument(os.str());
  }
  return values;
}

void emit_table(const DataTable& table, const std::string& format,
                const std::string& out) {
  write_output(format == "json" ? to_json(table) : to_csv(table), out);
}

ordered_json witness_report_json(const WitnessReport& report) {
  ordered_json doc;
  doc["certified"] = report.certified;
  doc["tol"] = report.tol;
  doc["max_violation"] = {{"t", report.max_violation_time},
                          {"margin", report.max_violation_margin}};
  ordered_json intervals = ordered_json::array();
  for (const auto& iv : report.violation_intervals)
    intervals.push_back({{"begin", iv.begin}, {"end", iv.end}});
  doc["violation_intervals"] = std::move(intervals);
  ordered_json samples = ordered_json::array();
  for (const auto& s : report.samples)
    samples.push_back({{"t", s.t},
                       {"z", s.z},
                       {"z_min", s.z_min},
                       {"z_max", s.z_max},
                       {"margin", s.margin}});
  doc["samples"] = std::move(samples);
  doc["note"] =
      "one-sided verdict: certified=false only means the sampled times are "
      "compatible with some factorized preparation; it never rules out "
      "correlations";
  return doc;
}

struct MarginSummary {
  size_t violated = 0;
  double max_margin = 0.0;
  double argmax_t = 0.0;
  bool any = false;
};

MarginSummary summarize_margins(const DataTable& table, size_t t_col,
                                size_t margin_col, double tol) {
  MarginSummary s;
  for (const auto& row : table.rows) {
    const double margin = row[margin_col];
    if (margin > tol) ++s.violated;
    if (!s.any || margin > s.max_margin) {
      s.max_margin = margin;
      s.argmax_t = row[t_col];
      s.any = true;
    }
  }
  return s;
}

void print_margin_summary(const char* label, const MarginSummary& s, size_t rows,
                          double tol) {
  if (s.violated > 0) {
    std::cerr << label << ": correlations certified; envelope exceeded at "
              << s.violated << " of " << rows << " sampled times (max margin "
              << format_double(s.max_margin) << " at t = "
              << format_double(s.argmax_t) << ", tol " << format_double(tol)
              << ")\n";
  } else {
    std::cerr << label << ": no envelope violation at " << rows
              << " sampled times (max margin " << format_double(s.max_margin)
              << "); the data stay compatible with factorized preparations\n";
  }
}

}  // namespace

std::vector<double> linspace(const GridSpec& grid) {
  if (grid.n < 1) throw std::invalid_argument("grid needs at least one point");
  if (!std::isfinite(grid.start) || !std::isfinite(grid.end))
    throw std::invalid_argument("grid endpoints must be finite");
  if (grid.n == 1) {
    if (grid.start != grid.end)
      throw std::invalid_argument("single-point grid requires end == start");
    return {grid.start};
  }
  if (!(grid.end > grid.start))
    throw std::invalid_argument("grid requires end > start");
  std::vector<double> points(grid.n);
  const double step = (grid.end - grid.start) / (grid.n - 1);
  for (int i = 0; i < grid.n - 1; ++i) points[i] = grid.start + i * step;
  points[grid.n - 1] = grid.end;
  return points;
}

GridSpec parse_grid(const std::string& text) {
  const std::vector<double> v = parse_doubles(text, 3, "grid");
  GridSpec grid;
  grid.start = v[0];
  grid.end = v[1];
  if (v[2] != std::floor(v[2]) || v[2] < 1 || v[2] > 1e9)
    throw std::invalid_argument("grid point count must be a positive integer");
  grid.n = static_cast<int>(v[2]);
  return grid;
}

Vec3 parse_vec3(const std::string& text) {
  const std::vector<double> v = parse_doubles(text, 3, "vector");
  return {v[0], v[1], v[2]};
}

Mat3 parse_mat3(const std::string& text) {
  const std::vector<double> v = parse_doubles(text, 9, "matrix");
  Mat3 m;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m(j, k) = v[3 * j + k];
  return m;
}

TimeGrid make_time_grid(const GridSpec& grid, bool grid_in_alpha, double J) {
  if (!std::isfinite(J)) throw std::invalid_argument("J must be finite");
  TimeGrid out;
  if (grid_in_alpha) {
    if (J == 0.0)
      throw std::invalid_argument("an alpha grid requires J != 0 (alpha = J t)");
    out.alpha = linspace(grid);
    out.t.reserve(out.alpha.size());
    for (const double a : out.alpha) out.t.push_back(a / J);
  } else {
    out.t = linspace(grid);
    out.alpha.reserve(out.t.size());
    for (const double t : out.t) out.alpha.push_back(J * t);
  }
  return out;
}

int cmd_envelope(const EnvelopeConfig& config) {
  const ExchangeParams params{config.J};
  const TimeGrid grid = make_time_grid(config.grid, config.grid_in_alpha, config.J);
  DataTable table;
  table.columns = {"t", "alpha", "z_min", "z_max", "e_x", "e_y", "e_z", "degenerate"};
  table.rows.resize(grid.t.size());
  parallel_for(grid.t.size(), [&](size_t i) {
    const EnvelopePoint pt = envelope_heisenberg(config.s, params, grid.t[i]);
    const Vec3 e = pt.degenerate ? Vec3::Zero() : pt.extremal_e;
    table.rows[i] = {grid.t[i], grid.alpha[i], pt.z_min,
                     pt.z_max,  e.x(),         e.y(),
                     e.z(),     pt.degenerate ? 1.0 : 0.0};
  });
  emit_table(table, config.format, config.out);
  if (!config.out.empty() && config.out != "-")
    std::cerr << "envelope: wrote " << table.rows.size() << " rows to "
              << config.out << "\n";
  return 0;
}

int cmd_example(const ExampleConfig& config) {
  const ExchangeParams params{config.J};
  const JointState state = make_state(config.spec);
  const TimeGrid grid = make_time_grid(config.grid, config.grid_in_alpha, config.J);
  DataTable table;
  table.columns = {"t", "alpha", "z_corr", "z_min", "z_max", "margin", "violated"};
  table.rows.resize(grid.t.size());
  parallel_for(grid.t.size(), [&](size_t i) {
    const double t = grid.t[i];
    const double z = z_observed(state, params, t);
    const EnvelopePoint env = envelope_heisenberg(state.s, params, t);
    const double margin = std::max(env.z_min - z, z - env.z_max);
    table.rows[i] = {t,      grid.alpha[i],
                     z,      env.z_min,
                     env.z_max, margin,
                     margin > config.tol ? 1.0 : 0.0};
  });
  emit_table(table, config.format, config.out);
  const MarginSummary summary = summarize_margins(table, 0, 5, config.tol);
  print_margin_summary(("example " + family_name(config.spec.family)).c_str(),
                       summary, table.rows.size(), config.tol);
  return 0;
}

int cmd_trajectory(const TrajectoryConfig& config) {
  const Mat4 rho = joint_from_parts(config.s, config.e, config.C);
  const DensityVerdict verdict = is_valid_density(rho);
  if (!verdict)
    throw std::invalid_argument(
        "the (s, e, C) triple does not define a state: " + verdict.violation);
  const JointState state = joint_decompose(rho);
  const ExchangeParams params{config.J};
  const TimeGrid grid = make_time_grid(config.grid, config.grid_in_alpha, config.J);
  DataTable table;
  table.columns = {"t", "alpha", "z_corr", "z_min", "z_max", "margin", "violated"};
  table.rows.resize(grid.t.size());
  parallel_for(grid.t.size(), [&](size_t i) {
    const double t = grid.t[i];
    const double z = z_observed(state, params, t);
    const EnvelopePoint env = envelope_heisenberg(state.s, params, t);
    const double margin = std::max(env.z_min - z, z - env.z_max);
    table.rows[i] = {t,      grid.alpha[i],
                     z,      env.z_min,
                     env.z_max, margin,
                     margin > config.tol ? 1.0 : 0.0};
  });
  emit_table(table, config.format, config.out);
  const MarginSummary summary = summarize_margins(table, 0, 5, config.tol);
  print_margin_summary("trajectory", summary, table.rows.size(), config.tol);
  return 0;
}

int cmd_witness(const WitnessConfig& config) {
  const std::vector<std::pair<double, double>> samples =
      config.data_path == "-" ? read_trajectory(std::cin)
                              : read_trajectory_file(config.data_path);
  const ExchangeParams params{config.J};
  const WitnessReport report = witness_check(samples, config.s, params, config.tol);
  write_output(witness_report_json(report).dump(2) + "\n", config.out);
  if (report.certified) {
    std::cerr << "witness: correlations certified (max margin "
              << format_double(report.max_violation_margin) << " at t = "
              << format_double(report.max_violation_time) << ", tol "
              << format_double(report.tol) << ")\n";
  } else {
    std::cerr << "witness: no violation at " << report.samples.size()
              << " sampled times (max margin "
              << format_double(report.max_violation_margin)
              << "); the data stay compatible with factorized preparations\n";
  }
  return 0;
}

int cmd_dephasing(const DephasingConfig& config) {
  CoherenceTrajectory traj;
  if (config.x0.has_value()) {
    traj = x_trajectory(*config.x0, config.gamma, linspace(config.grid));
  } else {
    traj.samples = config.data_path == "-" ? read_trajectory(std::cin)
                                           : read_trajectory_file(config.data_path);
  }
  const WitnessReport report = dephasing_witness(traj, config.gamma, config.tol);
  DataTable table;
  table.columns = {"t", "envelope", "x", "margin", "violated"};
  for (const auto& s : report.samples)
    table.add_row({s.t, s.z_max, s.z, s.margin, s.margin > config.tol ? 1.0 : 0.0});
  emit_table(table, config.format, config.out);
  if (report.certified) {
    std::cerr << "dephasing: correlations certified; coherence exceeds the "
                 "envelope (max margin "
              << format_double(report.max_violation_margin) << " at t = "
              << format_double(report.max_violation_time) << ", tol "
              << format_double(report.tol) << ")\n";
  } else {
    std::cerr << "dephasing: no violation at " << report.samples.size()
              << " sampled times (max margin "
              << format_double(report.max_violation_margin)
              << "); the data stay compatible with factorized preparations\n";
  }
  return 0;
}

int cmd_oracle_check(const OracleCheckConfig& config) {
  const ExchangeParams params{config.J};
  const TimeGrid grid = make_time_grid(config.grid, config.grid_in_alpha, config.J);
  const size_t n = grid.t.size();
  DataTable table;
  table.columns = {"t", "alpha", "brute_min", "brute_max", "z_min", "z_max", "ok"};
  table.rows.resize(n);
  std::vector<char> ok(n, 1);
  std::vector<double> gaps(n, 0.0);
  parallel_for(n, [&](size_t i) {
    const auto [brute_min, brute_max] =
        brute_force_envelope(config.s, params, grid.t[i], config.resolution);
    const EnvelopePoint env = envelope_heisenberg(config.s, params, grid.t[i]);
    double z_min = env.z_min, z_max = env.z_max;
    if (config.corrupt_envelope) {
      // Negative control: pull the analytic endpoints inward until the brute
      // interval can no longer fit, which must trip the inclusion check.
      const double pull = 0.25 * (z_max - z_min) + 1e-6;
      z_min += pull;
      z_max -= pull;
    }
    const bool inside =
        brute_min >= z_min - 1e-12 && brute_max <= z_max + 1e-12;
    ok[i] = inside ? 1 : 0;
    gaps[i] = std::max(brute_min - z_min, z_max - brute_max);
    table.rows[i] = {grid.t[i], grid.alpha[i], brute_min, brute_max,
                     z_min,     z_max,         inside ? 1.0 : 0.0};
  });
  emit_table(table, config.format, config.out);
  const size_t failures =
      static_cast<size_t>(std::count(ok.begin(), ok.end(), 0));
  const double max_gap = n ? *std::max_element(gaps.begin(), gaps.end()) : 0.0;
  if (failures == 0) {
    std::cerr << "oracle check: PASS (" << n << " grid points, resolution "
              << config.resolution << ", max endpoint gap "
              << format_double(max_gap) << ")\n";
    return 0;
  }
  const size_t first =
      static_cast<size_t>(std::find(ok.begin(), ok.end(), 0) - ok.begin());
  std::cerr << "oracle check: FAIL at " << failures << " of " << n
            << " grid points; first at t = " << format_double(grid.t[first])
            << " (brute [" << format_double(table.rows[first][2]) << ", "
            << format_double(table.rows[first][3]) << "] vs analytic ["
            << format_double(table.rows[first][4]) << ", "
            << format_double(table.rows[first][5]) << "])\n";
  return 1;
}

int run(int argc, const char* const* argv) {
  CLI::App app{
      "exact envelope witness for initial system-environment correlations"};
  app.require_subcommand(1);

  // -- envelope ------------------------------------------------------------
  auto* sub_env = app.add_subcommand(
      "envelope", "factorized envelope [z_min, z_max] of z(t) for a marginal s");
  std::string env_s, env_tgrid, env_agrid;
  EnvelopeConfig env_cfg;
  sub_env->add_option("--J", env_cfg.J, "exchange coupling J (inverse time)")
      ->capture_default_str();
  sub_env->add_option("--s", env_s, "system Bloch vector \"x,y,z\"")->required();
  auto* env_t = sub_env->add_option("--t-grid", env_tgrid,
                                    "time grid \"start,end,n\"");
  auto* env_a = sub_env->add_option("--alpha-grid", env_agrid,
                                    "alpha = Jt grid \"start,end,n\"");
  env_t->excludes(env_a);
  sub_env->add_option("--format", env_cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub_env->add_option("--out", env_cfg.out, "output path (default stdout)");

  // -- example -------------------------------------------------------------
  auto* sub_ex = app.add_subcommand(
      "example",
      "correlated trajectory of a canonical family against its envelope");
  std::string ex_family, ex_tgrid, ex_agrid;
  ExampleConfig ex_cfg;
  sub_ex->add_option("--family", ex_family,
                     "bell, product-entangled-mixture, or "
                     "maxmixed-entangled-mixture")
      ->required();
  sub_ex->add_option("--p", ex_cfg.spec.p, "mixing weight in [0,1]")
      ->capture_default_str();
  sub_ex->add_option("--J", ex_cfg.J, "exchange coupling J (inverse time)")
      ->capture_default_str();
  auto* ex_t = sub_ex->add_option("--t-grid", ex_tgrid, "time grid \"start,end,n\"");
  auto* ex_a =
      sub_ex->add_option("--alpha-grid", ex_agrid, "alpha = Jt grid \"start,end,n\"");
  ex_t->excludes(ex_a);
  sub_ex->add_option("--tol", ex_cfg.tol, "violation tolerance")
      ->capture_default_str();
  sub_ex->add_option("--format", ex_cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub_ex->add_option("--out", ex_cfg.out, "output path (default stdout)");

  // -- trajectory ----------------------------------------------------------
  auto* sub_tr = app.add_subcommand(
      "trajectory",
      "like example, but for an arbitrary joint state given as (s, e, C)");
  std::string tr_s, tr_e, tr_C, tr_tgrid, tr_agrid;
  TrajectoryConfig tr_cfg;
  sub_tr->add_option("--s", tr_s, "system Bloch vector \"x,y,z\"")->required();
  sub_tr->add_option("--e", tr_e, "environment Bloch vector \"x,y,z\"")->required();
  sub_tr
      ->add_option("--C", tr_C,
                   "correlation tensor, row-major \"c11,c12,...,c33\"")
      ->required();
  sub_tr->add_option("--J", tr_cfg.J, "exchange coupling J (inverse time)")
      ->capture_default_str();
  auto* tr_t = sub_tr->add_option("--t-grid", tr_tgrid, "time grid \"start,end,n\"");
  auto* tr_a =
      sub_tr->add_option("--alpha-grid", tr_agrid, "alpha = Jt grid \"start,end,n\"");
  tr_t->excludes(tr_a);
  sub_tr->add_option("--tol", tr_cfg.tol, "violation tolerance")
      ->capture_default_str();
  sub_tr->add_option("--format", tr_cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub_tr->add_option("--out", tr_cfg.out, "output path (default stdout)");

  // -- witness -------------------------------------------------------------
  auto* sub_wit = app.add_subcommand(
      "witness", "check observed (t, z) data against the factorized envelope");
  std::string wit_s;
  WitnessConfig wit_cfg;
  sub_wit->add_option("--data", wit_cfg.data_path,
                      "trajectory file, CSV or JSON ('-' reads stdin)")
      ->required();
  sub_wit->add_option("--s", wit_s, "calibrated system Bloch vector \"x,y,z\"")
      ->required();
  sub_wit->add_option("--J", wit_cfg.J, "exchange coupling J (inverse time)")
      ->capture_default_str();
  sub_wit
      ->add_option("--tol", wit_cfg.tol,
                   "violation tolerance; explicit because measured data carry "
                   "their own noise level")
      ->required();
  sub_wit->add_option("--out", wit_cfg.out, "report path (default stdout)");

  // -- dephasing -----------------------------------------------------------
  auto* sub_dep = app.add_subcommand(
      "dephasing",
      "coherence envelope exp(-Gamma(t)) and its witness for pure dephasing");
  std::string dep_gamma, dep_table, dep_tgrid;
  double dep_x0 = 0.0;
  DephasingConfig dep_cfg;
  auto* dep_g = sub_dep->add_option(
      "--gamma", dep_gamma,
      "decoherence function \"linear:kappa\" or \"power:kappa,eta\"");
  auto* dep_gt = sub_dep->add_option(
      "--gamma-table", dep_table, "decoherence table file with (t, gamma) rows");
  dep_g->excludes(dep_gt);
  auto* dep_x = sub_dep->add_option("--x0", dep_x0,
                                    "initial coherence <sigma_x>(0) to simulate");
  auto* dep_d = sub_dep->add_option(
      "--data", dep_cfg.data_path,
      "observed coherence file, CSV or JSON ('-' reads stdin)");
  dep_x->excludes(dep_d);
  sub_dep->add_option("--t-grid", dep_tgrid,
                      "time grid \"start,end,n\" for the simulated path");
  auto* dep_tol = sub_dep->add_option(
      "--tol", dep_cfg.tol,
      "violation tolerance (required with --data, default 1e-09 otherwise)");
  sub_dep->add_option("--format", dep_cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub_dep->add_option("--out", dep_cfg.out, "output path (default stdout)");

  // -- oracle-check --------------------------------------------------------
  auto* sub_orc = app.add_subcommand(
      "oracle-check",
      "brute-force envelope sampling against the analytic bounds");
  std::string orc_s = "0,0,0", orc_tgrid, orc_agrid;
  OracleCheckConfig orc_cfg;
  sub_orc->add_option("--s", orc_s, "system Bloch vector \"x,y,z\"")
      ->capture_default_str();
  sub_orc->add_option("--J", orc_cfg.J, "exchange coupling J (inverse time)")
      ->capture_default_str();
  auto* orc_t =
      sub_orc->add_option("--t-grid", orc_tgrid, "time grid \"start,end,n\"");
  auto* orc_a = sub_orc->add_option("--alpha-grid", orc_agrid,
                                    "alpha = Jt grid \"start,end,n\" "
                                    "(default \"0,pi,25\")");
  orc_t->excludes(orc_a);
  sub_orc
      ->add_option("--resolution", orc_cfg.resolution,
                   "environment states sampled per grid point")
      ->check(CLI::Range(8, 100000000))
      ->capture_default_str();
  sub_orc->add_flag("--corrupt-envelope", orc_cfg.corrupt_envelope, "")->group("");
  sub_orc->add_option("--format", orc_cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub_orc->add_option("--out", orc_cfg.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const auto pick_grid = [](const CLI::Option* t_opt, const CLI::Option* a_opt,
                            const std::string& t_text, const std::string& a_text,
                            GridSpec& grid, bool& in_alpha) {
    if (!*t_opt && !*a_opt)
      throw std::invalid_argument("one of --t-grid or --alpha-grid is required");
    in_alpha = static_cast<bool>(*a_opt);
    grid = parse_grid(in_alpha ? a_text : t_text);
  };

  try {
    if (*sub_env) {
      env_cfg.s = parse_vec3(env_s);
      pick_grid(env_t, env_a, env_tgrid, env_agrid, env_cfg.grid,
                env_cfg.grid_in_alpha);
      return cmd_envelope(env_cfg);
    }
    if (*sub_ex) {
      ex_cfg.spec.family = family_from_name(ex_family);
      pick_grid(ex_t, ex_a, ex_tgrid, ex_agrid, ex_cfg.grid, ex_cfg.grid_in_alpha);
      return cmd_example(ex_cfg);
    }
    if (*sub_tr) {
      tr_cfg.s = parse_vec3(tr_s);
      tr_cfg.e = parse_vec3(tr_e);
      tr_cfg.C = parse_mat3(tr_C);
      pick_grid(tr_t, tr_a, tr_tgrid, tr_agrid, tr_cfg.grid, tr_cfg.grid_in_alpha);
      return cmd_trajectory(tr_cfg);
    }
    if (*sub_wit) {
      wit_cfg.s = parse_vec3(wit_s);
      return cmd_witness(wit_cfg);
    }
    if (*sub_dep) {
      if (!*dep_g && !*dep_gt)
        throw std::invalid_argument(
            "one of --gamma or --gamma-table is required");
      if (*dep_g) {
        const size_t colon = dep_gamma.find(':');
        const std::string kind = dep_gamma.substr(0, colon);
        const std::string rest =
            colon == std::string::npos ? "" : dep_gamma.substr(colon + 1);
        if (kind == "linear") {
          dep_cfg.gamma =
              DecoherenceFunction::linear(parse_doubles(rest, 1, "--gamma")[0]);
        } else if (kind == "power") {
          const std::vector<double> kv = parse_doubles(rest, 2, "--gamma");
          dep_cfg.gamma = DecoherenceFunction::power_law(kv[0], kv[1]);
        } else {
          throw std::invalid_argument(
              "--gamma kind must be 'linear' or 'power', got '" + kind + "'");
        }
      } else {
        dep_cfg.gamma =
            DecoherenceFunction::table(read_trajectory_file(dep_table));
      }
      const bool has_x0 = static_cast<bool>(*dep_x);
      const bool has_data = static_cast<bool>(*dep_d);
      if (has_x0 == has_data)
        throw std::invalid_argument("exactly one of --x0 or --data is required");
      if (has_x0) {
        dep_cfg.x0 = dep_x0;
        if (dep_tgrid.empty())
          throw std::invalid_argument("--x0 needs a --t-grid to simulate on");
        dep_cfg.grid = parse_grid(dep_tgrid);
      } else if (!*dep_tol) {
        throw std::invalid_argument(
            "--tol is required with --data; measured data carry their own "
            "noise level");
      }
      return cmd_dephasing(dep_cfg);
    }
    if (*sub_orc) {
      orc_cfg.s = parse_vec3(orc_s);
      if (!*orc_t && !*orc_a) {
        orc_cfg.grid = GridSpec{0.0, std::numbers::pi, 25};
        orc_cfg.grid_in_alpha = true;
      } else {
        pick_grid(orc_t, orc_a, orc_tgrid, orc_agrid, orc_cfg.grid,
                  orc_cfg.grid_in_alpha);
      }
      return cmd_oracle_check(orc_cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("envwit");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace envwit::cli
