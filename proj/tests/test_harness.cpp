#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "slrecon/harness.hpp"

using namespace slrecon;

TEST_CASE("config parsing") {
  std::stringstream ss(
      "# comment\n"
      "experiment = xinjin1d\n"
      "n = 40,80,160\n"
      "cfl = 0.5\n"
      "kappa = 1,1e-6   # two regimes\n"
      "tfinal = 1\n"
      "recon = cweno23\n"
      "integrator = dirk43\n"
      "boundary = freeflow\n"
      "epsilon = 1e-6\n"
      "p = 2\n"
      "init = xj-step\n");
  const auto cfg = parse_config(ss);
  CHECK(cfg.experiment == "xinjin1d");
  CHECK(cfg.n == std::vector<int>{40, 80, 160});
  CHECK(cfg.kappa == std::vector<double>{1.0, 1e-6});
  CHECK(cfg.recon == ReconKind::Cweno23);
  CHECK(cfg.integrator == Integrator::Dirk43);
  CHECK(cfg.boundary == BoundaryPolicy::FreeFlow);
  CHECK(cfg.params.epsilon == 1e-6);
  CHECK(cfg.init == "xj-step");
}

TEST_CASE("config rejects unknown keys and bad values") {
  std::stringstream a("frobnicate = 3\n");
  CHECK_THROWS_AS(parse_config(a), config_error);
  std::stringstream b("cfl = -1\n");
  CHECK_THROWS_AS(parse_config(b), config_error);
  std::stringstream c("kappa = 0\n");
  CHECK_THROWS_AS(parse_config(c), config_error);
  std::stringstream d("recon = weno9\n");
  CHECK_THROWS_AS(parse_config(d), config_error);
  std::stringstream e("just a line\n");
  CHECK_THROWS_AS(parse_config(e), config_error);
}

TEST_CASE("detect_shock_position") {
  Grid1D g{10, 0.0, 10.0};
  SUBCASE("step at a cell interface") {
    CellField1D f(g, {1, 1, 1, 1, 1, 0, 0, 0, 0, 0});
    const double pos = detect_shock_position(f, 1.0, 0.0);
    CHECK(pos == doctest::Approx(5.0).epsilon(1e-12));
  }
  SUBCASE("linear ramp over four cells") {
    CellField1D f(g, {1, 1, 1, 0.8, 0.6, 0.4, 0.2, 0, 0, 0});
    const double pos = detect_shock_position(f, 1.0, 0.0);
    CHECK(pos == doctest::Approx(4.5 + 0.5).epsilon(1e-12));  // crosses 0.5 at x = 5
  }
  SUBCASE("no crossing throws") {
    CellField1D f(g, std::vector<double>(10, 0.2));
    CHECK_THROWS_AS(detect_shock_position(f, 1.0, 0.0), numerical_error);
  }
}

TEST_CASE("restriction halves resolution exactly") {
  Grid1D g{8, 0.0, 1.0};
  CellField1D f(g, {1, 3, 2, 4, 5, 7, 0, 2});
  const auto c = restrict_halved(f);
  CHECK(c.n() == 4);
  CHECK(c.values == std::vector<double>{2, 3, 6, 1});
}

TEST_CASE("conservation sweep reproduces machine-precision errors") {
  RunConfig cfg;
  cfg.experiment = "recon-sweep";
  cfg.n = {20};
  cfg.recon = ReconKind::Cweno23;
  cfg.params.epsilon = 1.0;
  const auto rep = run_conservation_sweep(cfg);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].err <= 1e-14);
  CHECK(rep.rows[1].err <= 1e-14);
}

TEST_CASE("csv values round-trip bit-exactly") {
  ConservationSeries s;
  s.t = {0.1, 0.2, 1.0 / 3.0};
  s.e_con = {1.2345678901234567e-15, 0.0, 2.0 / 3.0};
  const std::string path = "roundtrip_test.csv";
  write_series_csv(s, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,E_con");
  for (size_t i = 0; i < s.t.size(); ++i) {
    REQUIRE(std::getline(in, line));
    const auto comma = line.find(',');
    CHECK(std::stod(line.substr(0, comma)) == s.t[i]);
    CHECK(std::stod(line.substr(comma + 1)) == s.e_con[i]);
  }
  std::remove(path.c_str());
}

TEST_CASE("convergence driver is deterministic") {
  RunConfig cfg;
  cfg.experiment = "xinjin1d";
  cfg.n = {16, 32};
  cfg.kappa = {1.0};
  cfg.cfl = 0.5;
  cfg.tfinal = 0.25;
  const auto a = run_convergence(cfg);
  const auto b = run_convergence(cfg);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].error == b.rows[i].error);  // bitwise
    CHECK(a.rows[i].n == b.rows[i].n);
  }
  const std::string p1 = "conv_a.csv", p2 = "conv_b.csv";
  write_convergence_csv(a, p1);
  write_convergence_csv(b, p2);
  std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("named initial data sets exist and sane") {
  const auto xj = make_xinjin_init("xj-step", 160, 1e-8);
  CHECK(xj.u.values.front() == doctest::Approx(0.9));
  CHECK(xj.u.values.back() == doctest::Approx(0.0));
  const auto bw = make_broadwell_init("bw-case1", 200, 1.0);
  const auto mom = moments(bw);
  CHECK(mom.rho.values.front() == doctest::Approx(2.0));
  CHECK(mom.rho.values.back() == doctest::Approx(1.0));
  const auto q = make_xinjin2d_init("xj2d-quadrant", 16, 16, 1e-4);
  CHECK(q.u.at(0, 0) == doctest::Approx(-0.5));
  CHECK(q.u.at(15, 15) == doctest::Approx(0.5));
  CHECK_THROWS_AS(make_xinjin_init("nope", 8, 1.0), config_error);
}

TEST_CASE("bdf2 solver convergence stays at least second order") {
  RunConfig cfg;
  cfg.experiment = "xinjin1d";
  cfg.n = {40, 80, 160};
  cfg.kappa = {1.0};
  cfg.cfl = 0.5;
  cfg.tfinal = 1.0;
  cfg.integrator = Integrator::Bdf2;
  cfg.init = "xj-accuracy";
  const auto rep = run_convergence(cfg);
  for (const auto& r : rep.rows) {
    if (std::isnan(r.order)) continue;
    CHECK(r.order >= 2.0);
  }
}

TEST_CASE("bdf3 with the k=4 reconstruction reaches third order in the stiff regime") {
  RunConfig cfg;
  cfg.experiment = "broadwell";
  cfg.n = {80, 160, 320};
  cfg.kappa = {1e-6};
  cfg.cfl = 0.2;
  cfg.tfinal = 5.0;
  cfg.recon = ReconKind::Cweno35;
  cfg.integrator = Integrator::Bdf3;
  cfg.init = "bw-accuracy";
  const auto rep = run_convergence(cfg);
  for (const auto& r : rep.rows) {
    if (std::isnan(r.order)) continue;
    CHECK(r.order >= 3.0);
  }
}

TEST_CASE("broadwell shock case runs briefly and reports a series") {
  RunConfig cfg;
  cfg.experiment = "broadwell";
  cfg.n = {100};
  cfg.kappa = {1.0};
  cfg.cfl = 0.9;
  cfg.tfinal = 0.05;
  cfg.boundary = BoundaryPolicy::FreeFlow;
  cfg.init = "bw-case1";
  const auto res = run_shock(cfg);
  CHECK(res.has_w);
  CHECK(res.x_u.all_finite());
  CHECK(!res.econ.t.empty());
  CHECK(res.econ.max_abs() < 1e-10);  // flux-corrected density balance
}
