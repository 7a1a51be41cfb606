#include "slrecon/broadwell.hpp"

#include <cmath>

namespace slrecon {

namespace {

void check_finite3(const BroadwellState& s, const char* where) {
  if (!s.f.all_finite() || !s.g.all_finite() || !s.h.all_finite())
    throw numerical_error(std::string(where) + ": non-finite values");
}

}  // namespace

BroadwellMoments moments(const BroadwellState& state) {
  BroadwellMoments out{CellField1D(state.f.grid), CellField1D(state.f.grid),
                       CellField1D(state.f.grid)};
  for (int i = 0; i < state.f.n(); ++i) {
    const double f = state.f.values[i], g = state.g.values[i], h = state.h.values[i];
    out.rho.values[i] = f + 2.0 * h + g;
    out.m.values[i] = f - g;
    out.z.values[i] = f + g;
  }
  return out;
}

BroadwellState state_from_moments(const CellField1D& rho, const CellField1D& m,
                                  const CellField1D& z, double kappa) {
  BroadwellState out;
  out.f = CellField1D(rho.grid);
  out.g = CellField1D(rho.grid);
  out.h = CellField1D(rho.grid);
  out.kappa = kappa;
  for (int i = 0; i < rho.n(); ++i) {
    out.f.values[i] = 0.5 * (z.values[i] + m.values[i]);
    out.g.values[i] = 0.5 * (z.values[i] - m.values[i]);
    out.h.values[i] = 0.5 * (rho.values[i] - z.values[i]);
  }
  return out;
}

double equilibrium_z(double rho, double m) { return (rho * rho + m * m) / (2.0 * rho); }

std::array<double, 3> stage_solve_hfg(double F, double G, double H, double w) {
  const double den = w * (G + 2.0 * H + F) + 1.0;
  if (den == 0.0 || !std::isfinite(den))
    throw numerical_error("stage_solve_hfg: vanishing denominator");
  const double h = (w * (H + F) * (H + G) + H) / den;
  return {H + F - h, H + G - h, h};
}

BroadwellState broadwell_dirk_step(const BroadwellState& state, const ButcherTable& table,
                                   double dt, ReconKind recon, const CwenoParams& params,
                                   BoundaryPolicy policy) {
  if (!(dt > 0.0)) throw std::invalid_argument("broadwell_dirk_step: dt must be positive");
  const int n = state.f.n();
  const double dx = state.f.dx();
  const double kap = state.kappa;

  std::vector<CellField1D> q_fields;  // on-grid stage collision terms
  q_fields.reserve(table.s);
  CellField1D fk(state.f.grid), gk(state.f.grid), hk(state.f.grid);
  for (int k = 0; k < table.s; ++k) {
    const double ck = table.c[k];
    const auto ft = shifted_field(state.f, recon, params, decompose_shift(-ck * dt, dx), policy);
    const auto gt = shifted_field(state.g, recon, params, decompose_shift(+ck * dt, dx), policy);
    std::vector<double> accF(n, 0.0), accG(n, 0.0), accH(n, 0.0);
    for (int l = 0; l < k; ++l) {
      const double akl = table.A(k, l);
      if (akl == 0.0) continue;
      const double d = (ck - table.c[l]) * dt;
      const auto q1 = shifted_field(q_fields[l], recon, params, decompose_shift(-d, dx), policy);
      const auto q2 = shifted_field(q_fields[l], recon, params, decompose_shift(+d, dx), policy);
      for (int i = 0; i < n; ++i) {
        accF[i] += akl * q1.values[i];
        accG[i] += akl * q2.values[i];
        accH[i] += akl * q_fields[l].values[i];  // h does not transport
      }
    }
    const double w = table.A(k, k) * dt / kap;
    CellField1D qk(state.f.grid);
    for (int i = 0; i < n; ++i) {
      const double F = ft.values[i] + dt / kap * accF[i];
      const double G = gt.values[i] + dt / kap * accG[i];
      const double H = state.h.values[i] - dt / kap * accH[i];
      const auto sol = stage_solve_hfg(F, G, H, w);
      fk.values[i] = sol[0];
      gk.values[i] = sol[1];
      hk.values[i] = sol[2];
      qk.values[i] = sol[2] * sol[2] - sol[0] * sol[1];
    }
    q_fields.push_back(std::move(qk));
  }

  BroadwellState out;
  out.f = std::move(fk);
  out.g = std::move(gk);
  out.h = std::move(hk);
  out.kappa = kap;
  out.history = state.history;
  check_finite3(out, "broadwell_dirk_step");
  return out;
}

BroadwellState broadwell_bdf_step(const BroadwellState& state, const BdfCoeffs& coeffs, double dt,
                                  ReconKind recon, const CwenoParams& params,
                                  BoundaryPolicy policy) {
  if (!(dt > 0.0)) throw std::invalid_argument("broadwell_bdf_step: dt must be positive");
  const int s = coeffs.s;
  if (static_cast<int>(state.history.size()) < s - 1)
    throw std::invalid_argument("broadwell_bdf_step: insufficient history");
  const int n = state.f.n();
  const double dx = state.f.dx();

  std::vector<double> accF(n, 0.0), accG(n, 0.0), accH(n, 0.0);
  for (int k = 1; k <= s; ++k) {
    const auto& flev = (k == 1) ? state.f : state.history[k - 2][0];
    const auto& glev = (k == 1) ? state.g : state.history[k - 2][1];
    const auto& hlev = (k == 1) ? state.h : state.history[k - 2][2];
    const auto ft = shifted_field(flev, recon, params, decompose_shift(-k * dt, dx), policy);
    const auto gt = shifted_field(glev, recon, params, decompose_shift(+k * dt, dx), policy);
    for (int i = 0; i < n; ++i) {
      accF[i] += coeffs.alpha[k - 1] * ft.values[i];
      accG[i] += coeffs.alpha[k - 1] * gt.values[i];
      accH[i] += coeffs.alpha[k - 1] * hlev.values[i];
    }
  }
  const double w = coeffs.beta_s * dt / state.kappa;
  BroadwellState out;
  out.f = CellField1D(state.f.grid);
  out.g = CellField1D(state.f.grid);
  out.h = CellField1D(state.f.grid);
  out.kappa = state.kappa;
  for (int i = 0; i < n; ++i) {
    const auto sol = stage_solve_hfg(accF[i], accG[i], accH[i], w);
    out.f.values[i] = sol[0];
    out.g.values[i] = sol[1];
    out.h.values[i] = sol[2];
  }
  check_finite3(out, "broadwell_bdf_step");
  out.history.push_back({state.f, state.g, state.h});
  for (int k = 0; k + 1 < s - 1; ++k) out.history.push_back(state.history[k]);
  return out;
}

BroadwellState relaxation_limit_step(const BroadwellState& state, BoundaryPolicy policy) {
  const auto mom = moments(state);
  const auto er = ghost_extend(mom.rho, policy, 1);
  const auto em = ghost_extend(mom.m, policy, 1);
  const auto ez = ghost_extend(mom.z, policy, 1);
  const int n = state.f.n();
  CellField1D rho(state.f.grid), m(state.f.grid), z(state.f.grid);
  for (int i = 0; i < n; ++i) {
    const double rn = er[i + 1] - 0.5 * (em[i + 2] - em[i]) +
                      0.5 * (ez[i + 2] - 2.0 * ez[i + 1] + ez[i]);
    if (!(rn > 0.0)) throw numerical_error("relaxation_limit_step: non-positive density");
    const double mn = 0.5 * (em[i + 2] + em[i]) - 0.5 * (ez[i + 2] - ez[i]);
    rho.values[i] = rn;
    m.values[i] = mn;
    z.values[i] = equilibrium_z(rn, mn);
  }
  return state_from_moments(rho, m, z, state.kappa);
}

}  // namespace slrecon
