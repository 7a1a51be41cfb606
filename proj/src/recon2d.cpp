#include "slrecon/recon2d.hpp"

#include <cmath>

namespace slrecon {

ReconCoeffs2D basic_2d_separable(const CellField2D& field, ReconKind kind,
                                 const CwenoParams& params, BoundaryPolicy policy, int ghost) {
  if (kind == ReconKind::PointWeno34)
    throw std::invalid_argument("pointweno34 has no coefficient form");
  const int nx = field.grid.nx, ny = field.grid.ny;
  const int k = polynomial_degree(kind);
  const double dx = field.grid.dx(), dy = field.grid.dy();

  if (kind == ReconKind::Pfc) {
    for (double v : field.values)
      if (!(v > 0.0)) throw std::invalid_argument("basic_2d_separable: pfc needs positive values");
  }

  // stage 1: along x per row
  std::vector<ReconCoeffs1D> rows(ny);
  std::vector<double> rowvals(nx);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) rowvals[i] = field.at(i, j);
    rows[j] = detail::build_sequence_coeffs(rowvals, dx, kind, params, policy, ghost, false);
  }

  ReconCoeffs2D out;
  out.k = k;
  out.nx = nx;
  out.ny = ny;
  out.ghost = ghost;
  out.dx = dx;
  out.dy = dy;
  out.data.assign(static_cast<size_t>(nx + 2 * ghost) * (ny + 2 * ghost) * (k + 1) * (k + 1),
                  0.0);

  // stage 2: along y per (x-cell, l1); row coefficients are the "cell data"
  std::vector<double> seq(ny);
  for (int i = -ghost; i < nx + ghost; ++i) {
    for (int l1 = 0; l1 <= k; ++l1) {
      for (int j = 0; j < ny; ++j) seq[j] = rows[j].coeff(i, l1);
      const auto cy = detail::build_sequence_coeffs(seq, dy, kind, params, policy, ghost, false);
      for (int j = -ghost; j < ny + ghost; ++j)
        for (int l2 = 0; l2 <= k; ++l2) out.coeff(i, j, l1, l2) = cy.coeff(j, l2);
    }
  }
  return out;
}

double q_eval_2d(const ReconCoeffs2D& coeffs, int i, int j, double theta, double eta) {
  if (!(theta >= 0.0 && theta < 1.0) || !(eta >= 0.0 && eta < 1.0))
    throw std::invalid_argument("q_eval_2d: fractions must lie in [0,1)");
  if (i < -coeffs.ghost || i + 1 >= coeffs.nx + coeffs.ghost || j < -coeffs.ghost ||
      j + 1 >= coeffs.ny + coeffs.ghost)
    throw std::out_of_range("q_eval_2d: cell index outside stored range");
  const int k = coeffs.k;
  double ax[5], bx[5], ay[5], by[5];
  double pwx = 1.0, pwy = 1.0;
  for (int l = 0; l <= k; ++l) {
    ax[l] = pwx * alpha_coeff(l, theta);
    bx[l] = pwx * beta_coeff(l, theta);
    ay[l] = pwy * alpha_coeff(l, eta);
    by[l] = pwy * beta_coeff(l, eta);
    pwx *= coeffs.dx;
    pwy *= coeffs.dy;
  }
  double s = 0.0;
  for (int l1 = 0; l1 <= k; ++l1)
    for (int l2 = 0; l2 <= k; ++l2)
      s += ax[l1] * ay[l2] * coeffs.coeff(i, j, l1, l2) +
           bx[l1] * ay[l2] * coeffs.coeff(i + 1, j, l1, l2) +
           ax[l1] * by[l2] * coeffs.coeff(i, j + 1, l1, l2) +
           bx[l1] * by[l2] * coeffs.coeff(i + 1, j + 1, l1, l2);
  return s;
}

namespace {

int required_ghost_2d(const ShiftQuery& sx, const ShiftQuery& sy, int nx, int ny) {
  if (std::abs(sx.offset) > nx || std::abs(sy.offset) > ny)
    throw std::invalid_argument("shift moves feet more than one domain width outside the grid");
  const auto m = std::max(std::abs(sx.offset), std::abs(sy.offset));
  return static_cast<int>(std::max<std::int64_t>(1, m + 1));
}

}  // namespace

CellField2D q_shifted_field_2d(const CellField2D& field, ReconKind kind,
                               const CwenoParams& params, const ShiftQuery& shift_x,
                               const ShiftQuery& shift_y, BoundaryPolicy policy) {
  const int nx = field.grid.nx, ny = field.grid.ny;
  const int g = required_ghost_2d(shift_x, shift_y, nx, ny);
  const auto coeffs = basic_2d_separable(field, kind, params, policy, g);
  const int ox = static_cast<int>(shift_x.offset), oy = static_cast<int>(shift_y.offset);
  const int k = coeffs.k;
  double ax[5], bx[5], ay[5], by[5];
  double pwx = 1.0, pwy = 1.0;
  for (int l = 0; l <= k; ++l) {
    ax[l] = pwx * alpha_coeff(l, shift_x.theta);
    bx[l] = pwx * beta_coeff(l, shift_x.theta);
    ay[l] = pwy * alpha_coeff(l, shift_y.theta);
    by[l] = pwy * beta_coeff(l, shift_y.theta);
    pwx *= coeffs.dx;
    pwy *= coeffs.dy;
  }
  CellField2D out(field.grid);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const int bi = i + ox, bj = j + oy;
      double s = 0.0;
      for (int l1 = 0; l1 <= k; ++l1)
        for (int l2 = 0; l2 <= k; ++l2)
          s += ax[l1] * ay[l2] * coeffs.coeff(bi, bj, l1, l2) +
               bx[l1] * ay[l2] * coeffs.coeff(bi + 1, bj, l1, l2) +
               ax[l1] * by[l2] * coeffs.coeff(bi, bj + 1, l1, l2) +
               bx[l1] * by[l2] * coeffs.coeff(bi + 1, bj + 1, l1, l2);
      out.at(i, j) = s;
    }
  }
  return out;
}

CellField2D q_shifted_composed_2d(const CellField2D& field, ReconKind kind,
                                  const CwenoParams& params, const ShiftQuery& shift_x,
                                  const ShiftQuery& shift_y, BoundaryPolicy policy) {
  const int nx = field.grid.nx, ny = field.grid.ny;
  Grid1D gx{nx, field.grid.x_min, field.grid.x_max};
  Grid1D gy{ny, field.grid.y_min, field.grid.y_max};
  CellField2D mid(field.grid);
  CellField1D row(gx);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) row.values[i] = field.at(i, j);
    const auto shifted = q_shifted_field(row, kind, params, shift_x, policy);
    for (int i = 0; i < nx; ++i) mid.at(i, j) = shifted.values[i];
  }
  CellField2D out(field.grid);
  CellField1D col(gy);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) col.values[j] = mid.at(i, j);
    const auto shifted = q_shifted_field(col, kind, params, shift_y, policy);
    for (int j = 0; j < ny; ++j) out.at(i, j) = shifted.values[j];
  }
  return out;
}

}  // namespace slrecon
