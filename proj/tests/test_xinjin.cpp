#include <cmath>
#include <random>

#include "doctest.h"
#include "slrecon/xinjin.hpp"

using namespace slrecon;

namespace {

XinJinState equilibrium_state(int n, double c, double kappa) {
  XinJinState st;
  st.kappa = kappa;
  Grid1D g{n, -1.0, 1.0};
  st.u = CellField1D(g);
  st.v = CellField1D(g);
  for (int i = 0; i < n; ++i) {
    st.u.values[i] = c;
    st.v.values[i] = 0.5 * c * c;
  }
  return st;
}

XinJinState smooth_state(int n, double kappa) {
  XinJinState st;
  st.kappa = kappa;
  Grid1D g{n, -1.0, 1.0};
  st.u = cell_average_field(g, [](double x) { return 0.7 + 0.2 * std::sin(M_PI * x); });
  st.v = CellField1D(g);
  // equilibrium of the discrete field, so limit oracles see the same state
  for (int i = 0; i < n; ++i) st.v.values[i] = 0.5 * st.u.values[i] * st.u.values[i];
  return st;
}

double sum_of(const CellField1D& f) {
  double s = 0.0;
  for (double v : f.values) s += v;
  return s;
}

double max_diff(const CellField1D& a, const CellField1D& b) {
  double m = 0.0;
  for (int i = 0; i < a.n(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

}  // namespace

TEST_CASE("equilibrium constant states are fixed points") {
  for (double kappa : {1.0, 1e-6, 1e-12}) {
    for (double cfl : {0.5, 1.9}) {
      auto st = equilibrium_state(32, 0.4, kappa);
      const double dt = cfl * st.u.dx();
      const auto u0 = st.u;
      const auto v0 = st.v;
      for (const auto& table : {dirk2_table(), dirk43_table()}) {
        const auto out =
            xinjin_dirk_step(st, table, dt, ReconKind::Cweno23, CwenoParams{},
                             BoundaryPolicy::Periodic);
        CHECK(max_diff(out.u, u0) < 1e-13);
        CHECK(max_diff(out.v, v0) < 1e-13);
      }
    }
  }
}

TEST_CASE("bdf step fixes equilibrium and relaxes v toward F(u) as kappa -> 0") {
  auto st = equilibrium_state(16, 0.3, 1e-14);
  st.history.push_back({st.u, st.v});  // constant history
  const auto out = xinjin_bdf_step(st, bdf_coeffs(2), 0.05, ReconKind::Cweno23, CwenoParams{},
                                   BoundaryPolicy::Periodic);
  CHECK(max_diff(out.u, st.u) < 1e-13);
  CHECK(max_diff(out.v, st.v) < 1e-13);
  // kappa -> 0 limit of the quotient: v = F(u)
  auto st2 = smooth_state(16, 1e-14);
  st2.history.push_back({st2.u, st2.v});
  const auto out2 = xinjin_bdf_step(st2, bdf_coeffs(2), 0.05, ReconKind::Cweno23, CwenoParams{},
                                    BoundaryPolicy::Periodic);
  for (int i = 0; i < 16; ++i)
    CHECK(out2.v.values[i] ==
          doctest::Approx(0.5 * out2.u.values[i] * out2.u.values[i]).epsilon(1e-10));
  CHECK_THROWS_AS(xinjin_bdf_step(equilibrium_state(8, 0.1, 1.0), bdf_coeffs(2), 0.1,
                                  ReconKind::Cweno23, CwenoParams{}, BoundaryPolicy::Periodic),
                  std::invalid_argument);
}

TEST_CASE("lax_friedrichs_step examples") {
  Grid1D g{3, 0.0, 3.0};
  CellField1D u(g, {0.0, 0.9, 0.9});
  const auto out = lax_friedrichs_step(u, burgers_flux(), BoundaryPolicy::FreeFlow);
  // center: (0.9+0)/2 - (F(0.9)-F(0))/2 = 0.45 - 0.2025
  CHECK(out.values[1] == doctest::Approx(0.2475).epsilon(1e-15));

  CellField1D cst(g, {0.7, 0.7, 0.7});
  const auto oc = lax_friedrichs_step(cst, burgers_flux(), BoundaryPolicy::Periodic);
  for (double v : oc.values) CHECK(v == doctest::Approx(0.7).epsilon(1e-15));

  // linear advection at CFL 1 shifts exactly by one cell
  Flux adv{[](double x) { return x; }, [](double) { return 1.0; }};
  CellField1D w(Grid1D{5, 0.0, 5.0}, {1.0, 2.0, 3.0, 4.0, 5.0});
  const auto ow = lax_friedrichs_step(w, adv, BoundaryPolicy::Periodic);
  for (int i = 0; i < 5; ++i)
    CHECK(ow.values[i] == doctest::Approx(w.values[(i + 4) % 5]).epsilon(1e-15));
}

TEST_CASE("kappa -> 0 implicit Euler with linear interpolation is Lax-Friedrichs") {
  const int n = 64;
  auto st = smooth_state(n, 1e-14);
  const double dx = st.u.dx();
  ButcherTable euler;
  euler.s = 1;
  euler.a = {1.0};
  euler.b = {1.0};
  euler.c = {1.0};
  auto oracle = st.u;
  double worst = 0.0;
  for (int step = 0; step < 20; ++step) {
    st = xinjin_dirk_step(st, euler, dx, ReconKind::Lagrange0, CwenoParams{},
                          BoundaryPolicy::Periodic);
    oracle = lax_friedrichs_step(oracle, burgers_flux(), BoundaryPolicy::Periodic);
    worst = std::max(worst, max_diff(st.u, oracle));
  }
  CHECK(worst < 1e-12);
  // AP projection: v = F(u) after one step
  for (int i = 0; i < n; ++i)
    CHECK(st.v.values[i] ==
          doctest::Approx(0.5 * st.u.values[i] * st.u.values[i]).epsilon(1e-8));
}

TEST_CASE("periodic steps preserve the discrete mass") {
  for (double kappa : {1.0, 1e-6}) {
    auto st = smooth_state(40, kappa);
    const double total = sum_of(st.u);
    const double dt = 0.7 * st.u.dx();  // fractional feet
    for (const auto& table : {dirk2_table(), dirk43_table()}) {
      auto s2 = xinjin_dirk_step(st, table, dt, ReconKind::Cweno23, CwenoParams{},
                                 BoundaryPolicy::Periodic);
      s2 = xinjin_dirk_step(s2, table, dt, ReconKind::Cweno23, CwenoParams{},
                            BoundaryPolicy::Periodic);
      CHECK(std::abs(sum_of(s2.u) - total) / std::abs(total) < 1e-12);
    }
  }
}

TEST_CASE("subcharacteristic violation is reported, not fatal") {
  auto st = equilibrium_state(16, 1.5, 1.0);  // |F'(u)| = 1.5 > 1
  StepDiagnostics diag;
  const auto out = xinjin_dirk_step(st, dirk2_table(), 0.05, ReconKind::Cweno23, CwenoParams{},
                                    BoundaryPolicy::Periodic, &diag);
  CHECK(diag.subchar_violated);
  CHECK(diag.max_char_speed == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(out.u.all_finite());
}

TEST_CASE("2d equilibrium fixed point and dimensional reduction") {
  const int n = 16;
  Grid2D g2{n, n, 0.0, 1.0, 0.0, 1.0};
  XinJinState2D st;
  st.kappa = 1e-3;
  st.u = CellField2D(g2);
  st.v = CellField2D(g2);
  for (auto& v : st.u.values) v = 0.4;
  for (auto& v : st.v.values) v = 0.08;
  const double dt = 0.5 * g2.dx();
  const auto out = xinjin2d_dirk_step(st, dirk2_table(), dt, ReconKind::Cweno23, CwenoParams{},
                                      BoundaryPolicy::Periodic);
  for (size_t i = 0; i < out.u.values.size(); ++i) {
    CHECK(out.u.values[i] == doctest::Approx(0.4).epsilon(1e-13));
    CHECK(out.v.values[i] == doctest::Approx(0.08).epsilon(1e-13));
  }

  // y-constant data advanced in 2d matches the 1d solver row-wise
  Grid1D g1{n, 0.0, 1.0};
  XinJinState s1;
  s1.kappa = 0.1;
  s1.u = cell_average_field(g1, [](double x) { return 0.5 + 0.2 * std::sin(2 * M_PI * x); });
  s1.v = cell_average_field(g1, [](double x) {
    const double u = 0.5 + 0.2 * std::sin(2 * M_PI * x);
    return 0.5 * u * u;
  });
  XinJinState2D s2;
  s2.kappa = 0.1;
  s2.u = CellField2D(g2);
  s2.v = CellField2D(g2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s2.u.at(i, j) = s1.u.values[i];
      s2.v.at(i, j) = s1.v.values[i];
    }
  const auto o1 = xinjin_dirk_step(s1, dirk2_table(), dt, ReconKind::Cweno23, CwenoParams{},
                                   BoundaryPolicy::Periodic);
  const auto o2 = xinjin2d_dirk_step(s2, dirk2_table(), dt, ReconKind::Cweno23, CwenoParams{},
                                     BoundaryPolicy::Periodic);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      REQUIRE(o2.u.at(i, j) == doctest::Approx(o1.u.values[i]).epsilon(1e-12));
}
