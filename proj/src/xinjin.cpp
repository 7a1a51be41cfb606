#include "slrecon/xinjin.hpp"

#include <cmath>

namespace slrecon {

Flux burgers_flux() {
  return Flux{[](double u) { return 0.5 * u * u; }, [](double u) { return u; }};
}

namespace {

void monitor(const std::vector<double>& u, const Flux& flux, StepDiagnostics* diag) {
  if (!diag) return;
  double m = 0.0;
  for (double x : u) m = std::max(m, std::abs(flux.df(x)));
  diag->max_char_speed = m;
  diag->subchar_violated = m > 1.0;
}

void check_finite(const CellField1D& f, const char* where) {
  if (!f.all_finite()) throw numerical_error(std::string(where) + ": non-finite values");
}

void check_finite(const CellField2D& f, const char* where) {
  if (!f.all_finite()) throw numerical_error(std::string(where) + ": non-finite values");
}

}  // namespace

XinJinState xinjin_dirk_step(const XinJinState& state, const ButcherTable& table, double dt,
                             ReconKind recon, const CwenoParams& params, BoundaryPolicy policy,
                             StepDiagnostics* diag) {
  if (!(dt > 0.0)) throw std::invalid_argument("xinjin_dirk_step: dt must be positive");
  const int n = state.u.n();
  const double dx = state.u.dx();
  const double kap = state.kappa;
  monitor(state.u.values, state.flux, diag);

  CellField1D f(state.u.grid), g(state.u.grid);
  for (int i = 0; i < n; ++i) {
    f.values[i] = state.u.values[i] - state.v.values[i];
    g.values[i] = state.u.values[i] + state.v.values[i];
  }

  std::vector<CellField1D> k1_fields;  // on-grid stage fluxes K1 = F(u) - v
  k1_fields.reserve(table.s);
  CellField1D u_k(state.u.grid), v_k(state.u.grid);
  for (int k = 0; k < table.s; ++k) {
    const double ck = table.c[k];
    const auto ft = shifted_field(f, recon, params, decompose_shift(+ck * dt, dx), policy);
    const auto gt = shifted_field(g, recon, params, decompose_shift(-ck * dt, dx), policy);
    std::vector<double> acc1(n, 0.0), acc2(n, 0.0);
    for (int l = 0; l < k; ++l) {
      const double akl = table.A(k, l);
      if (akl == 0.0) continue;
      CellField1D k2(state.u.grid);
      for (int i = 0; i < n; ++i) k2.values[i] = -k1_fields[l].values[i];
      const double d = (ck - table.c[l]) * dt;
      const auto k1r = shifted_field(k1_fields[l], recon, params, decompose_shift(+d, dx), policy);
      const auto k2r = shifted_field(k2, recon, params, decompose_shift(-d, dx), policy);
      for (int i = 0; i < n; ++i) {
        acc1[i] += akl * k1r.values[i];
        acc2[i] += akl * k2r.values[i];
      }
    }
    const double akk = table.A(k, k);
    CellField1D k1(state.u.grid);
    for (int i = 0; i < n; ++i) {
      const double uk =
          0.5 * (gt.values[i] + ft.values[i]) - dt / (2.0 * kap) * (acc1[i] + acc2[i]);
      const double vk = (0.5 * (gt.values[i] - ft.values[i]) -
                         dt / (2.0 * kap) * (acc2[i] - acc1[i]) +
                         akk * dt / kap * state.flux.f(uk)) /
                        (1.0 + akk * dt / kap);
      u_k.values[i] = uk;
      v_k.values[i] = vk;
      k1.values[i] = state.flux.f(uk) - vk;
    }
    k1_fields.push_back(std::move(k1));
  }
  check_finite(u_k, "xinjin_dirk_step");
  check_finite(v_k, "xinjin_dirk_step");

  XinJinState out;
  out.u = std::move(u_k);
  out.v = std::move(v_k);
  out.kappa = kap;
  out.flux = state.flux;
  out.history = state.history;
  return out;
}

XinJinState xinjin_bdf_step(const XinJinState& state, const BdfCoeffs& coeffs, double dt,
                            ReconKind recon, const CwenoParams& params, BoundaryPolicy policy,
                            StepDiagnostics* diag) {
  if (!(dt > 0.0)) throw std::invalid_argument("xinjin_bdf_step: dt must be positive");
  const int s = coeffs.s;
  if (static_cast<int>(state.history.size()) < s - 1)
    throw std::invalid_argument("xinjin_bdf_step: insufficient history");
  const int n = state.u.n();
  const double dx = state.u.dx();
  const double kap = state.kappa;
  monitor(state.u.values, state.flux, diag);

  std::vector<double> accf(n, 0.0), accg(n, 0.0);
  CellField1D f(state.u.grid), g(state.u.grid);
  for (int k = 1; k <= s; ++k) {
    const auto& ulev = (k == 1) ? state.u : state.history[k - 2].first;
    const auto& vlev = (k == 1) ? state.v : state.history[k - 2].second;
    for (int i = 0; i < n; ++i) {
      f.values[i] = ulev.values[i] - vlev.values[i];
      g.values[i] = ulev.values[i] + vlev.values[i];
    }
    const auto ft = shifted_field(f, recon, params, decompose_shift(+k * dt, dx), policy);
    const auto gt = shifted_field(g, recon, params, decompose_shift(-k * dt, dx), policy);
    for (int i = 0; i < n; ++i) {
      accf[i] += coeffs.alpha[k - 1] * ft.values[i];
      accg[i] += coeffs.alpha[k - 1] * gt.values[i];
    }
  }
  XinJinState out;
  out.u = CellField1D(state.u.grid);
  out.v = CellField1D(state.u.grid);
  for (int i = 0; i < n; ++i) {
    const double un = 0.5 * (accg[i] + accf[i]);
    out.u.values[i] = un;
    out.v.values[i] = (kap * 0.5 * (accg[i] - accf[i]) + coeffs.beta_s * dt * state.flux.f(un)) /
                      (kap + coeffs.beta_s * dt);
  }
  check_finite(out.u, "xinjin_bdf_step");
  check_finite(out.v, "xinjin_bdf_step");
  out.kappa = kap;
  out.flux = state.flux;
  // rotate the history ring
  out.history.emplace_back(state.u, state.v);
  for (int k = 0; k + 1 < s - 1; ++k) out.history.push_back(state.history[k]);
  return out;
}

CellField1D lax_friedrichs_step(const CellField1D& u, const Flux& flux, BoundaryPolicy policy) {
  const auto e = ghost_extend(u, policy, 1);
  CellField1D out(u.grid);
  for (int i = 0; i < u.n(); ++i) {
    const double um = e[i], up = e[i + 2];
    out.values[i] = 0.5 * (up + um) - 0.5 * (flux.f(up) - flux.f(um));
  }
  return out;
}

XinJinState2D xinjin2d_dirk_step(const XinJinState2D& state, const ButcherTable& table, double dt,
                                 ReconKind recon, const CwenoParams& params, BoundaryPolicy policy,
                                 StepDiagnostics* diag) {
  if (!(dt > 0.0)) throw std::invalid_argument("xinjin2d_dirk_step: dt must be positive");
  const auto& grid = state.u.grid;
  const size_t sz = state.u.values.size();
  const double dx = grid.dx(), dy = grid.dy();
  const double kap = state.kappa;
  monitor(state.u.values, state.flux, diag);

  CellField2D f(grid), g(grid);
  for (size_t i = 0; i < sz; ++i) {
    f.values[i] = state.u.values[i] - state.v.values[i];
    g.values[i] = state.u.values[i] + state.v.values[i];
  }

  std::vector<CellField2D> k1_fields;
  k1_fields.reserve(table.s);
  CellField2D u_k(grid), v_k(grid);
  for (int k = 0; k < table.s; ++k) {
    const double ck = table.c[k];
    const auto sp = decompose_shift(+ck * dt, dx);
    const auto sm = decompose_shift(-ck * dt, dx);
    const auto spy = decompose_shift(+ck * dt, dy);
    const auto smy = decompose_shift(-ck * dt, dy);
    const auto ft = q_shifted_field_2d(f, recon, params, sp, spy, policy);
    const auto gt = q_shifted_field_2d(g, recon, params, sm, smy, policy);
    std::vector<double> acc1(sz, 0.0), acc2(sz, 0.0);
    for (int l = 0; l < k; ++l) {
      const double akl = table.A(k, l);
      if (akl == 0.0) continue;
      CellField2D k2(grid);
      for (size_t i = 0; i < sz; ++i) k2.values[i] = -k1_fields[l].values[i];
      const double d = (ck - table.c[l]) * dt;
      const auto k1r = q_shifted_field_2d(k1_fields[l], recon, params, decompose_shift(+d, dx),
                                          decompose_shift(+d, dy), policy);
      const auto k2r = q_shifted_field_2d(k2, recon, params, decompose_shift(-d, dx),
                                          decompose_shift(-d, dy), policy);
      for (size_t i = 0; i < sz; ++i) {
        acc1[i] += akl * k1r.values[i];
        acc2[i] += akl * k2r.values[i];
      }
    }
    const double akk = table.A(k, k);
    CellField2D k1(grid);
    for (size_t i = 0; i < sz; ++i) {
      const double uk =
          0.5 * (gt.values[i] + ft.values[i]) - dt / (2.0 * kap) * (acc1[i] + acc2[i]);
      const double vk = (0.5 * (gt.values[i] - ft.values[i]) -
                         dt / (2.0 * kap) * (acc2[i] - acc1[i]) +
                         akk * dt / kap * state.flux.f(uk)) /
                        (1.0 + akk * dt / kap);
      u_k.values[i] = uk;
      v_k.values[i] = vk;
      k1.values[i] = state.flux.f(uk) - vk;
    }
    k1_fields.push_back(std::move(k1));
  }
  check_finite(u_k, "xinjin2d_dirk_step");
  check_finite(v_k, "xinjin2d_dirk_step");

  XinJinState2D out;
  out.u = std::move(u_k);
  out.v = std::move(v_k);
  out.kappa = kap;
  out.flux = state.flux;
  return out;
}

}  // namespace slrecon
