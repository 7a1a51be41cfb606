#ifndef SLRECON_RECON2D_HPP_
#define SLRECON_RECON2D_HPP_

#include "slrecon/recon1d.hpp"

namespace slrecon {

//! Tensor coefficient table R_{i,j}^(l1,l2), l1,l2 = 0..k, for cells in
//! [-ghost, nx+ghost) x [-ghost, ny+ghost).
struct ReconCoeffs2D {
  int k = 0;
  int nx = 0, ny = 0;
  int ghost = 0;
  double dx = 0.0, dy = 0.0;

  std::vector<double> data;

  size_t index(int i, int j, int l1, int l2) const {
    const int kk = k + 1;
    return ((static_cast<size_t>(i + ghost) * (ny + 2 * ghost) + (j + ghost)) * kk + l1) * kk + l2;
  }
  double coeff(int i, int j, int l1, int l2) const { return data[index(i, j, l1, l2)]; }
  double& coeff(int i, int j, int l1, int l2) { return data[index(i, j, l1, l2)]; }
};

//! Separable build: the 1D basic reconstruction along x on each row, then the
//! same reconstruction along y applied to each row-coefficient sequence.
//! Both stages conserve their cell averages, so the 2D conservation identity
//! holds exactly. For Pfc the stage-2 limiters are clamped to [0,1] (the rows
//! of derivative coefficients are signed data).
ReconCoeffs2D basic_2d_separable(const CellField2D& field, ReconKind kind,
                                 const CwenoParams& params, BoundaryPolicy policy, int ghost = 1);

//! Average of the piecewise polynomial over the dx-by-dy window centered at
//! (x_i + theta*dx, y_j + eta*dy); four-corner tensor sum over cells
//! (i,j), (i+1,j), (i,j+1), (i+1,j+1).
double q_eval_2d(const ReconCoeffs2D& coeffs, int i, int j, double theta, double eta);

CellField2D q_shifted_field_2d(const CellField2D& field, ReconKind kind,
                               const CwenoParams& params, const ShiftQuery& shift_x,
                               const ShiftQuery& shift_y, BoundaryPolicy policy);

//! Composition form: 1D conservative evaluation along x on every row, then
//! along y on every column of the result. Conserves the global sum per stage
//! and preserves positivity for Pfc on arbitrary positive fields.
CellField2D q_shifted_composed_2d(const CellField2D& field, ReconKind kind,
                                  const CwenoParams& params, const ShiftQuery& shift_x,
                                  const ShiftQuery& shift_y, BoundaryPolicy policy);

}  // namespace slrecon

#endif  // SLRECON_RECON2D_HPP_
