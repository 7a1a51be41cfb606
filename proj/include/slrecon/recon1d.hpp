#ifndef SLRECON_RECON1D_HPP_
#define SLRECON_RECON1D_HPP_

#include "slrecon/core.hpp"

namespace slrecon {

//! Basic (per-cell polynomial) reconstruction selectors.
enum class ReconKind {
  Lagrange0,   // k=0, R_i == cell average
  Lagrange2,   // k=2 symmetric stencil, linear weights
  Lagrange4,   // k=4 symmetric stencil, linear weights
  Cweno23,     // k=2 central WENO
  Cweno23Z,    // k=2, Z-type weights
  Cweno35,     // k=4 central WENO
  Cweno35Z,    // k=4, Z-type weights
  Pfc,         // k=2 positive flux conservative parabola
  PointWeno34  // non-conservative point-value WENO interpolation (contrast runs only)
};

ReconKind recon_kind_from_string(const std::string& name);
std::string to_string(ReconKind kind);
int polynomial_degree(ReconKind kind);
int stencil_radius(ReconKind kind);

struct CwenoParams {
  double epsilon = -1.0;  // < 0 selects dx*dx
  int p = 2;
  // k=2 linear weights (sides equal)
  double c_side = 0.25;
  double c_center = 0.5;
  // k=4 linear weights; these reproduce the optimal quartic at linear weights
  double c1 = 0.125;
  double c2 = 0.25;
  double c3 = 0.125;
  double c_center4 = 0.5;

  double eps_for(double dx) const { return epsilon < 0.0 ? dx * dx : epsilon; }
};

//! Per-cell derivative coefficients R_i^(l), l = 0..k, for cells in
//! [-ghost, n+ghost). Coefficient l carries units value/length^l.
struct ReconCoeffs1D {
  int k = 0;
  int n = 0;
  int ghost = 0;
  double dx = 0.0;

  std::vector<double> data;  // (n + 2*ghost) rows of (k+1)

  double coeff(int cell, int ell) const {
    return data[static_cast<size_t>(cell + ghost) * (k + 1) + ell];
  }
  double& coeff(int cell, int ell) {
    return data[static_cast<size_t>(cell + ghost) * (k + 1) + ell];
  }
};

//! Sliding-average basis functions: contribution of cell i resp. i+1 to the
//! average over [x_{i-1/2}+theta dx, x_{i+1/2}+theta dx].
double alpha_coeff(int ell, double theta);
double beta_coeff(int ell, double theta);

//! Named basic reconstructions.
ReconCoeffs1D basic_lagrange(const CellField1D& field, int k, BoundaryPolicy policy,
                             int ghost = 1);
ReconCoeffs1D basic_cweno23(const CellField1D& field, const CwenoParams& params,
                            BoundaryPolicy policy, bool z_variant = false, int ghost = 1);
ReconCoeffs1D basic_cweno35(const CellField1D& field, const CwenoParams& params,
                            BoundaryPolicy policy, bool z_variant = false, int ghost = 1);
ReconCoeffs1D basic_pfc(const CellField1D& field, BoundaryPolicy policy, int ghost = 1);

//! Kind-dispatched build (PointWeno34 is not coefficient-based and is rejected).
ReconCoeffs1D build_coeffs(const CellField1D& field, ReconKind kind, const CwenoParams& params,
                           BoundaryPolicy policy, int ghost = 1);

//! Average of the piecewise polynomial over the cell-width window centered at
//! x_i + theta*dx. theta must lie in [0,1); cells i and i+1 must be stored.
double q_eval(const ReconCoeffs1D& coeffs, int i, double theta);

//! Batch evaluation at x_i + (offset + theta)*dx for every cell i.
CellField1D q_shifted_field(const CellField1D& field, ReconKind kind, const CwenoParams& params,
                            const ShiftQuery& shift, BoundaryPolicy policy);

//! Non-conservative point-value interpolation at x_i + (offset+theta)*dx:
//! two quadratic candidates on a 4-point stencil blended by WENO weights.
//! Reproduces the cubic interpolant in smooth regions.
CellField1D point_weno34_shifted_field(const CellField1D& field, const CwenoParams& params,
                                       const ShiftQuery& shift, BoundaryPolicy policy);

//! Dispatcher used by solvers: conservative Q for coefficient kinds,
//! point-value interpolation for PointWeno34.
CellField1D shifted_field(const CellField1D& field, ReconKind kind, const CwenoParams& params,
                          const ShiftQuery& shift, BoundaryPolicy policy);

namespace detail {
//! Coefficient build on a bare value sequence with an explicit cell width.
//! Used by the 2D separable build, whose stage-2 sequences are signed row
//! coefficients: Pfc positivity checking is optional there.
ReconCoeffs1D build_sequence_coeffs(const std::vector<double>& values, double dx, ReconKind kind,
                                    const CwenoParams& params, BoundaryPolicy policy, int ghost,
                                    bool enforce_pfc_positive);
}  // namespace detail

}  // namespace slrecon

#endif  // SLRECON_RECON1D_HPP_
