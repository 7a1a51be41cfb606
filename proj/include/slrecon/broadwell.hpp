#ifndef SLRECON_BROADWELL_HPP_
#define SLRECON_BROADWELL_HPP_

#include <array>

#include "slrecon/recon1d.hpp"
#include "slrecon/timeint.hpp"

namespace slrecon {

//! Broadwell kinetic densities; f travels at +1, g at -1, h is at rest.
//! Collision term Q = h^2 - f*g enters with weight 1/kappa.
struct BroadwellState {
  CellField1D f, g, h;
  double kappa = 1.0;
  std::vector<std::array<CellField1D, 3>> history;  // (f,g,h) at n-1, n-2, ...
};

struct BroadwellMoments {
  CellField1D rho, m, z;  // rho = f+2h+g, m = f-g, z = f+g
};

BroadwellMoments moments(const BroadwellState& state);
//! Inverse map f=(z+m)/2, g=(z-m)/2, h=(rho-z)/2.
BroadwellState state_from_moments(const CellField1D& rho, const CellField1D& m,
                                  const CellField1D& z, double kappa);

//! Local equilibrium z_E(rho, m) = (rho^2 + m^2) / (2 rho).
double equilibrium_z(double rho, double m);

//! Closed-form solve of the implicit stage equations
//!   f = F + w Q, g = G + w Q, h = H - w Q,  Q = h^2 - f g,  w = a_kk dt / kappa.
//! Throws numerical_error on a vanishing denominator.
std::array<double, 3> stage_solve_hfg(double F, double G, double H, double w);

BroadwellState broadwell_dirk_step(const BroadwellState& state, const ButcherTable& table,
                                   double dt, ReconKind recon, const CwenoParams& params,
                                   BoundaryPolicy policy);

BroadwellState broadwell_bdf_step(const BroadwellState& state, const BdfCoeffs& coeffs, double dt,
                                  ReconKind recon, const CwenoParams& params,
                                  BoundaryPolicy policy);

//! kappa -> 0, dt = dx relaxation-scheme oracle: central update of (rho, m)
//! followed by projection z = z_E(rho, m). Requires rho^{n+1} > 0.
BroadwellState relaxation_limit_step(const BroadwellState& state, BoundaryPolicy policy);

}  // namespace slrecon

#endif  // SLRECON_BROADWELL_HPP_
