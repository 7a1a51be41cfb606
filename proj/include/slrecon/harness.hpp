#ifndef SLRECON_HARNESS_HPP_
#define SLRECON_HARNESS_HPP_

#include <iosfwd>
#include <optional>

#include "slrecon/broadwell.hpp"
#include "slrecon/xinjin.hpp"

namespace slrecon {

class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

//! Parsed `key = value` experiment configuration.
struct RunConfig {
  std::string experiment;  // recon-sweep | recon-convergence | xinjin1d | xinjin2d | broadwell
  std::vector<int> n = {40};
  int n2 = 0;  // second axis for 2D; 0 means square grids
  double cfl = 0.5;
  std::vector<double> kappa = {1.0};
  double tfinal = 1.0;
  ReconKind recon = ReconKind::Cweno23;
  Integrator integrator = Integrator::Dirk2;
  BoundaryPolicy boundary = BoundaryPolicy::Periodic;
  CwenoParams params;
  std::string init;
};

//! Lines of `key = value`; `#` starts a comment; unknown keys are rejected.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

struct ConvergenceRow {
  double kappa = 0.0;
  int n = 0;
  double error = 0.0;
  double order = 0.0;  // NaN on the coarsest grid of a block
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
};

struct SweepRow {
  std::string function;  // test-function tag
  double err = 0.0;      // max-over-theta relative sum error
};

struct SweepReport {
  std::vector<SweepRow> rows;
  // Pfc only: minimum reconstructed value over the theta grid on the
  // positivity profile, and the profile maximum for scaling.
  std::optional<double> pfc_min_value;
  double pfc_max_value = 0.0;
};

struct ConservationSeries {
  std::vector<double> t;
  std::vector<double> e_con;
  double max_abs() const;
};

struct ShockResult {
  // 1D solutions; for Broadwell these carry (rho, m, z) in u/v/w
  CellField1D x_u, x_v, x_w;
  CellField2D u2d;  // 2D runs
  bool is_2d = false;
  bool has_w = false;
  ConservationSeries econ;
  std::optional<double> shock_position;
};

SweepReport run_conservation_sweep(const RunConfig& cfg);
ConvergenceReport run_convergence(const RunConfig& cfg);
ShockResult run_shock(const RunConfig& cfg);

//! First crossing of (u_left+u_right)/2, linearly interpolated between the
//! bracketing cell centers. Throws if the profile never crosses.
double detect_shock_position(const CellField1D& field, double u_left, double u_right);

//! CSV emission, 17 significant digits (values round-trip bit-exactly).
std::string format_g17(double v);
void write_convergence_csv(const ConvergenceReport& rep, const std::string& path);
void write_sweep_csv(const SweepReport& rep, ReconKind recon, const std::string& path);
void write_series_csv(const ConservationSeries& series, const std::string& path);
void write_solution_csv(const ShockResult& res, const std::string& path);

//! Pairwise average of a doubled-resolution field down to n cells (exact for
//! cell averages).
CellField1D restrict_halved(const CellField1D& fine);
CellField2D restrict_halved_2d(const CellField2D& fine);

//! Named initial data sets.
XinJinState make_xinjin_init(const std::string& name, int n, double kappa);
BroadwellState make_broadwell_init(const std::string& name, int n, double kappa);
XinJinState2D make_xinjin2d_init(const std::string& name, int nx, int ny, double kappa);

}  // namespace slrecon

#endif  // SLRECON_HARNESS_HPP_
