#include "tiltosc/sweep.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace tiltosc;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TEST_CASE("sweep emits the documented grid") {
  SweepConfig config;  // omega=4, lambda=0.5, psi=0, n_max=6, cutoff=24
  std::ostringstream out;
  run_sweep(config, out);
  auto lines = lines_of(out.str());

  REQUIRE(lines[0] == "N,m,Q,g2,q_class,g2_class,oracle_Q,oracle_abs_err");
  REQUIRE(lines.size() == 1 + 28);  // sum of (N+1) for N = 0..6

  // row order: N ascending, m descending within each N
  auto row1 = fields_of(lines[1]);
  REQUIRE(row1[0] == "0");
  REQUIRE(row1[1] == "0");
  auto row2 = fields_of(lines[2]);
  REQUIRE(row2[0] == "1");
  REQUIRE(row2[1] == "1");
  auto row3 = fields_of(lines[3]);
  REQUIRE(row3[1] == "-1");

  // ground cell reproduces the headline value and bunching label
  REQUIRE(std::abs(std::stod(row1[2]) - 0.00395263) <= 1e-6);
  REQUIRE(std::abs(std::stod(row1[3]) - 2.0) <= 1e-9);
  REQUIRE(row1[4] == "super-poissonian");
  REQUIRE(row1[5] == "bunching");
  REQUIRE(std::stod(row1[7]) <= 1e-6);

  // edge states are sub-Poissonian / anti-bunching
  auto row_66 = fields_of(lines[1 + 22]);  // first row of the N=6 block
  REQUIRE(row_66[0] == "6");
  REQUIRE(row_66[1] == "6");
  REQUIRE(std::stod(row_66[2]) < 0.0);
  REQUIRE(row_66[4] == "sub-poissonian");
  REQUIRE(row_66[5] == "anti-bunching");
}

TEST_CASE("sweep output is byte deterministic") {
  SweepConfig config;
  config.n_max = 3;
  std::ostringstream first, second;
  run_sweep(config, first);
  run_sweep(config, second);
  REQUIRE(first.str() == second.str());
  REQUIRE(first.str().find("e-") != std::string::npos);  // full precision
}

TEST_CASE("decoupled sweep prints undefined for the vacuum") {
  SweepConfig config;
  config.lambda = 0.0;
  std::ostringstream out;
  run_sweep(config, out);
  auto lines = lines_of(out.str());
  auto ground = fields_of(lines[1]);
  REQUIRE(ground[2] == "undefined");
  REQUIRE(ground[4] == "undefined");
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto row = fields_of(lines[i]);
    REQUIRE(row[4] != "undefined");
  }
}

TEST_CASE("config validation") {
  SweepConfig config;
  config.lambda = 5.0;
  REQUIRE_THROWS_AS(config.validate_grid(), std::invalid_argument);

  config = SweepConfig{};
  config.cutoff = 8;  // n_max 6 > cutoff - 8
  REQUIRE_THROWS_AS(config.validate_grid(), std::invalid_argument);
  REQUIRE_NOTHROW(config.validate_model());

  config = SweepConfig{};
  config.n_max = -1;
  REQUIRE_THROWS_AS(config.validate_grid(), std::invalid_argument);
}

TEST_CASE("energy table columns and the decoupled limit") {
  SweepConfig config;
  config.omega = 1.0;
  config.lambda = 0.0;
  config.n_max = 4;
  std::ostringstream out;
  run_energy_table(config, out);
  auto lines = lines_of(out.str());
  REQUIRE(lines[0] == "N,m,E_closed,E_numeric,abs_err");
  REQUIRE(lines.size() == 1 + 15);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto row = fields_of(lines[i]);
    double N = std::stod(row[0]);
    REQUIRE(std::stod(row[2]) == N + 1.0);  // omega (N+1), exact at lambda=0
    REQUIRE(std::stod(row[4]) <= 1e-10);
  }
}

TEST_CASE("energy table pairing error at omega=1") {
  // measured behavior of the |m| closed form against the true spectrum:
  // the +-m splitting makes the sorted-pairing error linear in lambda
  auto max_err = [](double lambda) {
    SweepConfig config;
    config.omega = 1.0;
    config.lambda = lambda;
    config.n_max = 4;
    std::ostringstream out;
    run_energy_table(config, out);
    double worst = 0.0;
    auto lines = lines_of(out.str());
    for (std::size_t i = 1; i < lines.size(); ++i)
      worst = std::max(worst, std::stod(fields_of(lines[i])[4]));
    return worst;
  };
  double err_1 = max_err(0.01);
  double err_2 = max_err(0.02);
  REQUIRE(err_1 > 0.035);
  REQUIRE(err_1 < 0.045);
  REQUIRE(err_2 / err_1 > 1.8);
  REQUIRE(err_2 / err_1 < 2.2);
}

TEST_CASE("verify runs clean at the reference parameters") {
  // full-grid families run in the acceptance suite; this spot-checks the
  // report plumbing on a reduced but honest configuration
  VerifyReport report = run_verify(ModelParams{4.0, 0.5, 0.0, 20});
  std::ostringstream out;
  print_report(report, out);
  REQUIRE(out.str().find("truncation-leakage") != std::string::npos);
  for (const auto& family : report.families) {
    INFO(family.name << " residual=" << family.residual
                     << " note=" << family.note);
    REQUIRE(family.passed);
  }
}
