#ifndef SLRECON_XINJIN_HPP_
#define SLRECON_XINJIN_HPP_

#include <utility>

#include "slrecon/recon1d.hpp"
#include "slrecon/recon2d.hpp"
#include "slrecon/timeint.hpp"

namespace slrecon {

struct Flux {
  std::function<double(double)> f;   // F(u)
  std::function<double(double)> df;  // F'(u), used by the subcharacteristic monitor
};

//! F(u) = u^2/2 (Burgers in the relaxed limit).
Flux burgers_flux();

struct StepDiagnostics {
  double max_char_speed = 0.0;
  bool subchar_violated = false;  // max |F'(u)| > 1 on the input field
};

//! Relaxation system unknowns: u_t + v_x = 0, v_t + u_x = (F(u)-v)/kappa.
//! Diagonal variables f = u-v and g = u+v travel at speeds -1 and +1.
struct XinJinState {
  CellField1D u, v;
  double kappa = 1.0;
  Flux flux = burgers_flux();
  // prior (u,v) levels for multistep methods, most recent first
  std::vector<std::pair<CellField1D, CellField1D>> history;
};

//! One stiffly-accurate DIRK step; reconstruction feet handled by the
//! conservative shifted-average operator at any CFL.
XinJinState xinjin_dirk_step(const XinJinState& state, const ButcherTable& table, double dt,
                             ReconKind recon, const CwenoParams& params, BoundaryPolicy policy,
                             StepDiagnostics* diag = nullptr);

//! One BDF step; state.history must hold order-1 prior levels.
XinJinState xinjin_bdf_step(const XinJinState& state, const BdfCoeffs& coeffs, double dt,
                            ReconKind recon, const CwenoParams& params, BoundaryPolicy policy,
                            StepDiagnostics* diag = nullptr);

//! u_i <- (u_{i+1}+u_{i-1})/2 - (F(u_{i+1})-F(u_{i-1}))/2; the kappa -> 0,
//! dt = dx limit of the implicit-Euler scheme.
CellField1D lax_friedrichs_step(const CellField1D& u, const Flux& flux, BoundaryPolicy policy);

struct XinJinState2D {
  CellField2D u, v;
  double kappa = 1.0;
  Flux flux = burgers_flux();
};

//! 2D step; characteristic feet are diagonal shifts (+-c_k dt, +-c_k dt).
XinJinState2D xinjin2d_dirk_step(const XinJinState2D& state, const ButcherTable& table, double dt,
                                 ReconKind recon, const CwenoParams& params,
                                 BoundaryPolicy policy, StepDiagnostics* diag = nullptr);

}  // namespace slrecon

#endif  // SLRECON_XINJIN_HPP_
