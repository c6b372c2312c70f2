#include "doctest.h"

#include "envwit/cli.hpp"
#include "envwit/oracle.hpp"
#include "envwit/states.hpp"
#include "envwit/trajectory_io.hpp"
#include "envwit/witness.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace envwit;
using std::numbers::pi;

namespace {

std::filesystem::path temp_path(const std::string& stem) {
  return std::filesystem::temp_directory_path() / stem;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  size_t col(const std::string& name) const {
    for (size_t j = 0; j < columns.size(); ++j)
      if (columns[j] == name) return j;
    REQUIRE_MESSAGE(false, "column not found: " << name);
    return 0;
  }
};

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (header) {
      table.columns = fields;
      header = false;
      continue;
    }
    std::vector<double> row;
    for (const auto& field : fields) row.push_back(std::stod(field));
    REQUIRE(row.size() == table.columns.size());
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("linspace spans the grid with exact endpoints") {
  const auto pts = cli::linspace({0.0, 3.0, 4});
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == 0.0);
  CHECK(pts[1] == 1.0);
  CHECK(pts[2] == 2.0);
  CHECK(pts[3] == 3.0);
  // Irrational endpoints land exactly on the requested value.
  const auto irr = cli::linspace({0.0, pi, 7});
  CHECK(irr.front() == 0.0);
  CHECK(irr.back() == pi);
}

TEST_CASE("single-point grids require matching endpoints") {
  const auto single = cli::linspace({1.5, 1.5, 1});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 1.5);
  CHECK_THROWS_AS(cli::linspace({1.5, 2.0, 1}), std::invalid_argument);
}

TEST_CASE("linspace validates its spec") {
  CHECK_THROWS_AS(cli::linspace({0.0, 1.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(cli::linspace({1.0, 0.0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(cli::linspace({0.0, 0.0, 5}), std::invalid_argument);
}

TEST_CASE("grid and vector parsers") {
  const cli::GridSpec g = cli::parse_grid("0.5, 2.5, 9");
  CHECK(g.start == 0.5);
  CHECK(g.end == 2.5);
  CHECK(g.n == 9);
  CHECK_THROWS_AS(cli::parse_grid("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid("0,1,2.5"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid("0,1,-3"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_grid("0,1,many"), std::invalid_argument);

  const Vec3 v = cli::parse_vec3("0.1, -0.2, 0.3");
  CHECK((v - Vec3{0.1, -0.2, 0.3}).norm() == 0.0);
  CHECK_THROWS_AS(cli::parse_vec3("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_vec3("1,2,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_vec3("a,b,c"), std::invalid_argument);

  const Mat3 m = cli::parse_mat3("1,2,3,4,5,6,7,8,9");
  CHECK(m(0, 0) == 1.0);
  CHECK(m(0, 1) == 2.0);
  CHECK(m(2, 0) == 7.0);
  CHECK(m(2, 2) == 9.0);
  CHECK_THROWS_AS(cli::parse_mat3("1,2,3"), std::invalid_argument);
}

TEST_CASE("time grids convert between t and alpha") {
  const cli::TimeGrid by_t = cli::make_time_grid({0.0, 2.0, 5}, false, 1.5);
  REQUIRE(by_t.t.size() == 5);
  CHECK(by_t.alpha[4] == 3.0);
  const cli::TimeGrid by_alpha = cli::make_time_grid({0.0, 3.0, 5}, true, 1.5);
  CHECK(by_alpha.t[4] == 2.0);
  CHECK(by_alpha.alpha[2] == 1.5);
  CHECK_THROWS_AS(cli::make_time_grid({0.0, 1.0, 3}, true, 0.0),
                  std::invalid_argument);
}

TEST_CASE("envelope command emits the envelope table") {
  const auto out = temp_path("envwit_cli_envelope.csv");
  cli::EnvelopeConfig cfg;
  cfg.J = 1.0;
  cfg.s = Vec3{0.3, -0.1, 0.4};
  cfg.grid = {0.0, 1.2, 13};
  cfg.format = "csv";
  cfg.out = out.string();
  CHECK(cli::cmd_envelope(cfg) == 0);

  const CsvTable table = parse_csv(slurp(out));
  REQUIRE(table.rows.size() == 13);
  CHECK(table.columns == std::vector<std::string>{"t", "alpha", "z_min", "z_max",
                                                  "e_x", "e_y", "e_z",
                                                  "degenerate"});
  // t = 0 is the degenerate point: the envelope collapses to s_z and the
  // extremal direction is reported as a zero sentinel.
  const auto& first = table.rows[0];
  CHECK(first[table.col("degenerate")] == 1.0);
  CHECK(first[table.col("z_min")] == first[table.col("z_max")]);
  CHECK(first[table.col("e_x")] == 0.0);
  CHECK(first[table.col("e_y")] == 0.0);
  CHECK(first[table.col("e_z")] == 0.0);

  // A generic row agrees with the library to the last printed digit.
  const auto& row = table.rows[7];
  const double t = row[table.col("t")];
  const EnvelopePoint env = envelope_heisenberg(cfg.s, ExchangeParams{cfg.J}, t);
  CHECK(row[table.col("z_min")] == env.z_min);
  CHECK(row[table.col("z_max")] == env.z_max);
  CHECK(row[table.col("e_x")] == env.extremal_e.x());
  CHECK(row[table.col("degenerate")] == 0.0);
  std::filesystem::remove(out);
}

TEST_CASE("envelope command accepts alpha grids and json format") {
  const auto out = temp_path("envwit_cli_envelope.json");
  cli::EnvelopeConfig cfg;
  cfg.J = 2.0;
  cfg.s = Vec3::Zero();
  cfg.grid = {0.0, pi, 5};
  cfg.grid_in_alpha = true;
  cfg.format = "json";
  cfg.out = out.string();
  CHECK(cli::cmd_envelope(cfg) == 0);
  const auto doc = nlohmann::ordered_json::parse(slurp(out));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 5);
  CHECK(doc[1]["alpha"].get<double>() == pi / 4.0);
  CHECK(doc[1]["t"].get<double>() == pi / 8.0);
  // s = 0: the envelope is +- d^2 = +- sin^2(2 alpha), maximal at alpha = pi/4.
  CHECK(doc[1]["z_max"].get<double>() == doctest::Approx(1.0).epsilon(1e-14));
  std::filesystem::remove(out);
}

TEST_CASE("example command reproduces the closed forms") {
  const auto out = temp_path("envwit_cli_example.csv");
  cli::ExampleConfig cfg;
  cfg.spec = {StateFamily::product_entangled_mixture, 0.2};
  cfg.grid = {0.0, 1.5, 31};
  cfg.out = out.string();
  CHECK(cli::cmd_example(cfg) == 0);

  const CsvTable table = parse_csv(slurp(out));
  REQUIRE(table.rows.size() == 31);
  const ExchangeParams params{1.0};
  for (const auto& row : table.rows) {
    const double t = row[table.col("t")];
    CHECK(row[table.col("z_corr")] ==
          doctest::Approx(closed_form_z(cfg.spec, params, t)).epsilon(1e-13));
    const bool flagged = row[table.col("violated")] == 1.0;
    CHECK(flagged == (row[table.col("margin")] > cfg.tol));
  }
  // This family with p = 0.2 must show violations somewhere on the grid.
  size_t violated = 0;
  for (const auto& row : table.rows) violated += row[table.col("violated")] == 1.0;
  CHECK(violated > 0);

  // The emitted table feeds straight back into the trajectory reader.
  std::istringstream back(slurp(out));
  const auto parsed = read_trajectory(back);
  REQUIRE(parsed.size() == 31);
  CHECK(parsed[3].second == table.rows[3][table.col("z_corr")]);
  std::filesystem::remove(out);
}

TEST_CASE("trajectory command accepts a correlated state and flags it") {
  const auto out = temp_path("envwit_cli_trajectory.csv");
  cli::TrajectoryConfig cfg;
  cfg.s = Vec3::Zero();
  cfg.e = Vec3::Zero();
  cfg.C << 0, 1, 0, -1, 0, 0, 0, 0, -1;  // the entangled pair's tensor
  cfg.grid = {0.01, 1.5, 40};
  cfg.out = out.string();
  CHECK(cli::cmd_trajectory(cfg) == 0);
  const CsvTable table = parse_csv(slurp(out));
  size_t violated = 0;
  for (const auto& row : table.rows) violated += row[table.col("violated")] == 1.0;
  CHECK(violated > 0);
  std::filesystem::remove(out);
}

TEST_CASE("trajectory command clears product states") {
  const auto out = temp_path("envwit_cli_trajectory_product.csv");
  cli::TrajectoryConfig cfg;
  cfg.s = Vec3{0.2, 0.1, -0.3};
  cfg.e = Vec3{-0.4, 0.0, 0.2};
  cfg.C = cfg.s * cfg.e.transpose();
  cfg.grid = {0.0, 2.0, 41};
  cfg.out = out.string();
  CHECK(cli::cmd_trajectory(cfg) == 0);
  const CsvTable table = parse_csv(slurp(out));
  for (const auto& row : table.rows)
    CHECK(row[table.col("violated")] == 0.0);
  std::filesystem::remove(out);
}

TEST_CASE("trajectory command rejects unphysical correlation tensors") {
  cli::TrajectoryConfig cfg;
  cfg.s = Vec3::Zero();
  cfg.e = Vec3::Zero();
  cfg.C = Mat3::Identity();  // (I + K)/4 has a -1/2 eigenvalue
  cfg.grid = {0.0, 1.0, 5};
  CHECK_THROWS_AS(cli::cmd_trajectory(cfg), std::invalid_argument);
}

TEST_CASE("witness command writes a machine-readable report") {
  // Entangled-pair data violate; the report must carry the full verdict.
  const auto data = temp_path("envwit_cli_witness_data.csv");
  const auto out = temp_path("envwit_cli_witness_report.json");
  {
    DataTable table;
    table.columns = {"t", "z"};
    const JointState bell = make_state({StateFamily::bell, 0.0});
    const ExchangeParams params{1.0};
    for (int i = 1; i <= 60; ++i) {
      const double t = 0.025 * i;
      table.add_row({t, z_observed(bell, params, t)});
    }
    write_output(to_csv(table), data.string());
  }
  cli::WitnessConfig cfg;
  cfg.data_path = data.string();
  cfg.s = Vec3::Zero();
  cfg.tol = 1e-9;
  cfg.out = out.string();
  CHECK(cli::cmd_witness(cfg) == 0);

  const auto doc = nlohmann::ordered_json::parse(slurp(out));
  CHECK(doc["certified"].get<bool>() == true);
  CHECK(doc["tol"].get<double>() == 1e-9);
  CHECK(doc["max_violation"]["margin"].get<double>() > 0.5);
  CHECK(doc["violation_intervals"].is_array());
  CHECK(!doc["violation_intervals"].empty());
  REQUIRE(doc["samples"].is_array());
  REQUIRE(doc["samples"].size() == 60);
  CHECK(doc["samples"][0].contains("z_min"));
  CHECK(doc["samples"][0].contains("margin"));
  CHECK(doc.contains("note"));
  std::filesystem::remove(data);
  std::filesystem::remove(out);
}

TEST_CASE("witness command stays quiet on factorizable data") {
  const auto data = temp_path("envwit_cli_witness_product.csv");
  const auto out = temp_path("envwit_cli_witness_product.json");
  {
    DataTable table;
    table.columns = {"t", "z"};
    const ExchangeParams params{1.0};
    const Vec3 s{0.1, 0.2, 0.3}, e{0.0, -0.5, 0.1};
    for (int i = 0; i <= 40; ++i) {
      const double t = 0.05 * i;
      table.add_row({t, z_factorized(s, e, params, t)});
    }
    write_output(to_csv(table), data.string());
  }
  cli::WitnessConfig cfg;
  cfg.data_path = data.string();
  cfg.s = Vec3{0.1, 0.2, 0.3};
  cfg.tol = 1e-9;
  cfg.out = out.string();
  CHECK(cli::cmd_witness(cfg) == 0);
  const auto doc = nlohmann::ordered_json::parse(slurp(out));
  CHECK(doc["certified"].get<bool>() == false);
  CHECK(doc["violation_intervals"].empty());
  std::filesystem::remove(data);
  std::filesystem::remove(out);
}

TEST_CASE("dephasing command simulates and checks a coherence decay") {
  const auto out = temp_path("envwit_cli_dephasing_sim.csv");
  cli::DephasingConfig cfg;
  cfg.gamma = DecoherenceFunction::linear(0.8);
  cfg.x0 = 0.9;
  cfg.grid = {0.0, 2.0, 21};
  cfg.out = out.string();
  CHECK(cli::cmd_dephasing(cfg) == 0);
  const CsvTable table = parse_csv(slurp(out));
  REQUIRE(table.rows.size() == 21);
  CHECK(table.columns == std::vector<std::string>{"t", "envelope", "x", "margin",
                                                  "violated"});
  for (const auto& row : table.rows) {
    const double t = row[table.col("t")];
    CHECK(row[table.col("envelope")] ==
          doctest::Approx(std::exp(-0.8 * t)).epsilon(1e-14));
    CHECK(row[table.col("x")] ==
          doctest::Approx(0.9 * std::exp(-0.8 * t)).epsilon(1e-14));
    CHECK(row[table.col("violated")] == 0.0);
  }
  std::filesystem::remove(out);
}

TEST_CASE("dephasing command certifies over-coherent data") {
  const auto data = temp_path("envwit_cli_dephasing_data.csv");
  const auto out = temp_path("envwit_cli_dephasing_out.csv");
  {
    DataTable table;
    table.columns = {"t", "x"};
    table.add_row({0.0, 1.0});
    table.add_row({1.0, 0.9});  // envelope at t=1 is exp(-ln 2) = 0.5
    write_output(to_csv(table), data.string());
  }
  cli::DephasingConfig cfg;
  cfg.gamma = DecoherenceFunction::linear(std::log(2.0));
  cfg.data_path = data.string();
  cfg.tol = 1e-6;
  cfg.out = out.string();
  CHECK(cli::cmd_dephasing(cfg) == 0);
  const CsvTable table = parse_csv(slurp(out));
  REQUIRE(table.rows.size() == 2);
  CHECK(table.rows[1][table.col("margin")] ==
        doctest::Approx(0.4).epsilon(1e-12));
  CHECK(table.rows[1][table.col("violated")] == 1.0);
  std::filesystem::remove(data);
  std::filesystem::remove(out);
}

TEST_CASE("oracle check passes on a healthy envelope and fails when corrupted") {
  const auto out = temp_path("envwit_cli_oracle.csv");
  cli::OracleCheckConfig cfg;
  cfg.s = Vec3{0.3, 0.2, -0.1};
  cfg.grid = {0.0, pi, 9};
  cfg.grid_in_alpha = true;
  cfg.resolution = 200;
  cfg.out = out.string();
  CHECK(cli::cmd_oracle_check(cfg) == 0);
  {
    const CsvTable table = parse_csv(slurp(out));
    REQUIRE(table.rows.size() == 9);
    for (const auto& row : table.rows) {
      CHECK(row[table.col("ok")] == 1.0);
      CHECK(row[table.col("brute_min")] >= row[table.col("z_min")] - 1e-12);
      CHECK(row[table.col("brute_max")] <= row[table.col("z_max")] + 1e-12);
    }
  }

  cfg.corrupt_envelope = true;
  CHECK(cli::cmd_oracle_check(cfg) == 1);
  {
    const CsvTable table = parse_csv(slurp(out));
    size_t failures = 0;
    for (const auto& row : table.rows) failures += row[table.col("ok")] == 0.0;
    CHECK(failures > 0);
  }
  std::filesystem::remove(out);
}

TEST_CASE("thread count does not change emitted bytes") {
  const auto out = temp_path("envwit_cli_threads.csv");
  cli::EnvelopeConfig cfg;
  cfg.s = Vec3{0.2, -0.3, 0.1};
  cfg.grid = {0.0, 2.5, 101};
  cfg.out = out.string();

  setenv("ENVELOPE_WITNESS_THREADS", "1", 1);
  REQUIRE(cli::cmd_envelope(cfg) == 0);
  const std::string serial = slurp(out);

  setenv("ENVELOPE_WITNESS_THREADS", "5", 1);
  REQUIRE(cli::cmd_envelope(cfg) == 0);
  const std::string threaded = slurp(out);
  unsetenv("ENVELOPE_WITNESS_THREADS");

  CHECK(serial == threaded);
  std::filesystem::remove(out);
}

TEST_CASE("argument parsing end to end") {
  const std::string out = temp_path("envwit_cli_run.csv").string();

  SUBCASE("envelope happy path") {
    CHECK(cli::run({"envelope", "--s", "0.2,0,0.4", "--alpha-grid",
                    "0,3.14159,9", "--out", out}) == 0);
    CHECK(parse_csv(slurp(out)).rows.size() == 9);
    std::filesystem::remove(out);
  }
  SUBCASE("example happy path") {
    CHECK(cli::run({"example", "--family", "bell", "--t-grid", "0,1,5", "--out",
                    out}) == 0);
    std::filesystem::remove(out);
  }
  SUBCASE("a grid is mandatory") {
    CHECK(cli::run({"envelope", "--s", "0,0,0"}) != 0);
  }
  SUBCASE("t and alpha grids are mutually exclusive") {
    CHECK(cli::run({"envelope", "--s", "0,0,0", "--t-grid", "0,1,5",
                    "--alpha-grid", "0,1,5"}) != 0);
  }
  SUBCASE("unknown family is rejected") {
    CHECK(cli::run({"example", "--family", "ghz", "--t-grid", "0,1,5"}) != 0);
  }
  SUBCASE("malformed vector is rejected") {
    CHECK(cli::run({"envelope", "--s", "0,0", "--t-grid", "0,1,5"}) != 0);
  }
  SUBCASE("witness requires an explicit tolerance") {
    CHECK(cli::run({"witness", "--data", "x.csv", "--s", "0,0,0"}) != 0);
  }
  SUBCASE("dephasing requires a gamma specification") {
    CHECK(cli::run({"dephasing", "--x0", "0.5", "--t-grid", "0,1,5"}) != 0);
  }
  SUBCASE("dephasing simulation needs a time grid") {
    CHECK(cli::run({"dephasing", "--gamma", "linear:1", "--x0", "0.5"}) != 0);
  }
  SUBCASE("dephasing data ingestion needs a tolerance") {
    const auto data = temp_path("envwit_cli_run_dep.csv");
    write_output("t,x\n0.5,0.2\n", data.string());
    CHECK(cli::run({"dephasing", "--gamma", "linear:1", "--data",
                    data.string()}) != 0);
    CHECK(cli::run({"dephasing", "--gamma", "linear:1", "--data", data.string(),
                    "--tol", "1e-3", "--out", out}) == 0);
    std::filesystem::remove(data);
    std::filesystem::remove(out);
  }
  SUBCASE("dephasing gamma spellings") {
    CHECK(cli::run({"dephasing", "--gamma", "power:0.5,2", "--x0", "0.5",
                    "--t-grid", "0,1,5", "--out", out}) == 0);
    CHECK(cli::run({"dephasing", "--gamma", "exp:1", "--x0", "0.5", "--t-grid",
                    "0,1,5"}) != 0);
    CHECK(cli::run({"dephasing", "--gamma", "linear:abc", "--x0", "0.5",
                    "--t-grid", "0,1,5"}) != 0);
    std::filesystem::remove(out);
  }
  SUBCASE("gamma table file drives the dephasing envelope") {
    const auto tbl = temp_path("envwit_cli_run_gamma.csv");
    write_output("t,gamma\n1,0.5\n2,2\n", tbl.string());
    CHECK(cli::run({"dephasing", "--gamma-table", tbl.string(), "--x0", "1",
                    "--t-grid", "0,2,5", "--out", out}) == 0);
    const CsvTable table = parse_csv(slurp(out));
    // Gamma(2) = 2 so the envelope ends at exp(-2).
    CHECK(table.rows.back()[table.col("envelope")] ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    std::filesystem::remove(tbl);
    std::filesystem::remove(out);
  }
  SUBCASE("witness happy path via files") {
    const auto data = temp_path("envwit_cli_run_wit.csv");
    write_output("t,z\n0.3,0.9\n", data.string());
    CHECK(cli::run({"witness", "--data", data.string(), "--s", "0,0,0", "--tol",
                    "1e-9", "--out", out}) == 0);
    const auto doc = nlohmann::ordered_json::parse(slurp(out));
    // z = 0.9 against envelope sin^2(0.6) ~ 0.319: certified.
    CHECK(doc["certified"].get<bool>() == true);
    std::filesystem::remove(data);
    std::filesystem::remove(out);
  }
  SUBCASE("missing data file is a clean error") {
    CHECK(cli::run({"witness", "--data", "/no/such/file.csv", "--s", "0,0,0",
                    "--tol", "1e-9"}) == 1);
  }
  SUBCASE("oracle check negative control") {
    CHECK(cli::run({"oracle-check", "--resolution", "64", "--alpha-grid",
                    "0,3.1,7", "--out", out}) == 0);
    CHECK(cli::run({"oracle-check", "--resolution", "64", "--alpha-grid",
                    "0,3.1,7", "--corrupt-envelope", "--out", out}) == 1);
    std::filesystem::remove(out);
  }
  SUBCASE("a subcommand is required") {
    CHECK(cli::run(std::vector<std::string>{}) != 0);
  }
  SUBCASE("unknown subcommand is rejected") {
    CHECK(cli::run({"simulate"}) != 0);
  }
  SUBCASE("trajectory requires the full state triple") {
    CHECK(cli::run({"trajectory", "--s", "0,0,0", "--t-grid", "0,1,5"}) != 0);
  }
  SUBCASE("bad format value is rejected") {
    CHECK(cli::run({"envelope", "--s", "0,0,0", "--t-grid", "0,1,5", "--format",
                    "yaml"}) != 0);
  }
}

}  // TEST_SUITE
