#include "slrecon/core.hpp"

#include <cmath>

namespace slrecon {

Grid1D::Grid1D(int n_, double x_min_, double x_max_) : n(n_), x_min(x_min_), x_max(x_max_) {
  if (n <= 0) throw std::invalid_argument("Grid1D: cell count must be positive");
  if (!(x_max > x_min)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
}

CellField1D::CellField1D(Grid1D g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.n)
    throw std::invalid_argument("CellField1D: values length must equal grid.n");
}

bool CellField1D::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

Grid2D::Grid2D(int nx_, int ny_, double x_min_, double x_max_, double y_min_, double y_max_)
    : nx(nx_), ny(ny_), x_min(x_min_), x_max(x_max_), y_min(y_min_), y_max(y_max_) {
  if (nx <= 0 || ny <= 0) throw std::invalid_argument("Grid2D: cell counts must be positive");
  if (!(x_max > x_min) || !(y_max > y_min))
    throw std::invalid_argument("Grid2D: domain bounds out of order");
}

CellField2D::CellField2D(Grid2D g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (values.size() != static_cast<size_t>(grid.nx) * grid.ny)
    throw std::invalid_argument("CellField2D: values length must equal nx*ny");
}

bool CellField2D::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

ShiftQuery decompose_shift(double displacement, double dx) {
  if (!(dx > 0.0)) throw std::invalid_argument("decompose_shift: dx must be positive");
  if (!std::isfinite(displacement))
    throw std::invalid_argument("decompose_shift: displacement must be finite");
  const double t = displacement / dx;
  if (std::abs(t) > 1e15) throw std::invalid_argument("decompose_shift: displacement too large");
  double o = std::floor(t);
  double theta = t - o;
  if (theta >= 1.0) {  // round-off at the upper edge
    o += 1.0;
    theta = 0.0;
  }
  return ShiftQuery{static_cast<std::int64_t>(o), theta};
}

std::vector<double> ghost_extend_raw(const std::vector<double>& values, BoundaryPolicy policy,
                                     int width) {
  if (width < 0) throw std::invalid_argument("ghost_extend: width must be non-negative");
  const int n = static_cast<int>(values.size());
  std::vector<double> out(static_cast<size_t>(n) + 2 * width);
  for (int j = -width; j < n + width; ++j) {
    int src;
    if (policy == BoundaryPolicy::Periodic) {
      src = ((j % n) + n) % n;
    } else {
      src = j < 0 ? 0 : (j >= n ? n - 1 : j);
    }
    out[j + width] = values[src];
  }
  return out;
}

std::vector<double> ghost_extend(const CellField1D& field, BoundaryPolicy policy, int width) {
  return ghost_extend_raw(field.values, policy, width);
}

namespace {
// 5-point Gauss-Legendre nodes/weights on [-1,1]
constexpr double kGx[5] = {-0.9061798459386639928, -0.5384693101056830910, 0.0,
                           0.5384693101056830910, 0.9061798459386639928};
constexpr double kGw[5] = {0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
                           0.4786286704993664680, 0.2369268850561890875};
}  // namespace

CellField1D cell_average_field(const Grid1D& grid, const std::function<double(double)>& f) {
  CellField1D out(grid);
  const double dx = grid.dx();
  for (int i = 0; i < grid.n; ++i) {
    const double xc = grid.center(i);
    double s = 0.0;
    for (int q = 0; q < 5; ++q) s += kGw[q] * f(xc + 0.5 * dx * kGx[q]);
    out.values[i] = 0.5 * s;
  }
  return out;
}

CellField2D cell_average_field_2d(const Grid2D& grid,
                                  const std::function<double(double, double)>& f) {
  CellField2D out(grid);
  const double dx = grid.dx(), dy = grid.dy();
  for (int i = 0; i < grid.nx; ++i) {
    const double xc = grid.center_x(i);
    for (int j = 0; j < grid.ny; ++j) {
      const double yc = grid.center_y(j);
      double s = 0.0;
      for (int qx = 0; qx < 5; ++qx)
        for (int qy = 0; qy < 5; ++qy)
          s += kGw[qx] * kGw[qy] * f(xc + 0.5 * dx * kGx[qx], yc + 0.5 * dy * kGx[qy]);
      out.at(i, j) = 0.25 * s;
    }
  }
  return out;
}

}  // namespace slrecon
