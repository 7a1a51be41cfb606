#ifndef SLRECON_CORE_HPP_
#define SLRECON_CORE_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slrecon {

// Thrown when a solver or driver produces non-finite values.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

enum class BoundaryPolicy { Periodic, FreeFlow };

//! Uniform 1D grid of n cells on [x_min, x_max], 0-indexed.
struct Grid1D {
  int n = 0;
  double x_min = 0.0;
  double x_max = 1.0;

  Grid1D() = default;
  Grid1D(int n_, double x_min_, double x_max_);

  double dx() const { return (x_max - x_min) / n; }
  double center(int i) const { return x_min + (i + 0.5) * dx(); }
};

//! Cell-average data on a Grid1D.
struct CellField1D {
  Grid1D grid;
  std::vector<double> values;

  CellField1D() = default;
  CellField1D(Grid1D g, std::vector<double> v);
  explicit CellField1D(Grid1D g) : grid(g), values(g.n, 0.0) {}

  int n() const { return grid.n; }
  double dx() const { return grid.dx(); }
  bool all_finite() const;
};

struct Grid2D {
  int nx = 0, ny = 0;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double x_min_, double x_max_, double y_min_, double y_max_);

  double dx() const { return (x_max - x_min) / nx; }
  double dy() const { return (y_max - y_min) / ny; }
  double center_x(int i) const { return x_min + (i + 0.5) * dx(); }
  double center_y(int j) const { return y_min + (j + 0.5) * dy(); }
};

//! Cell-average data on a Grid2D, row-major in x (index i*ny + j).
struct CellField2D {
  Grid2D grid;
  std::vector<double> values;

  CellField2D() = default;
  CellField2D(Grid2D g, std::vector<double> v);
  explicit CellField2D(Grid2D g) : grid(g), values(static_cast<size_t>(g.nx) * g.ny, 0.0) {}

  double& at(int i, int j) { return values[static_cast<size_t>(i) * grid.ny + j]; }
  double at(int i, int j) const { return values[static_cast<size_t>(i) * grid.ny + j]; }
  bool all_finite() const;
};

//! Decomposition of a displacement into whole cells plus a fraction in [0,1).
struct ShiftQuery {
  std::int64_t offset = 0;
  double theta = 0.0;
};

//! Splits displacement/dx into floor + fractional part; a fractional part that
//! rounds to 1 is renormalized to offset+1, theta=0.
ShiftQuery decompose_shift(double displacement, double dx);

//! Extends cell values by `width` ghost cells on each side.
//! Periodic wraps indices mod n; FreeFlow replicates the boundary cells.
std::vector<double> ghost_extend(const CellField1D& field, BoundaryPolicy policy, int width);
std::vector<double> ghost_extend_raw(const std::vector<double>& values, BoundaryPolicy policy,
                                     int width);

//! Cell averages of an analytic function, 5-point Gauss-Legendre per cell.
CellField1D cell_average_field(const Grid1D& grid, const std::function<double(double)>& f);
CellField2D cell_average_field_2d(const Grid2D& grid,
                                  const std::function<double(double, double)>& f);

}  // namespace slrecon

#endif  // SLRECON_CORE_HPP_
