#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slrecon/harness.hpp"

namespace py = pybind11;
using namespace slrecon;

namespace {

std::vector<double> to_vector(const py::array_t<double, py::array::c_style>& a) {
  if (a.ndim() != 1) throw std::invalid_argument("expected a 1-d array");
  return {a.data(), a.data() + a.shape(0)};
}

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

CellField1D to_field(const py::array_t<double, py::array::c_style>& a, double dx) {
  auto v = to_vector(a);
  const int n = static_cast<int>(v.size());
  return CellField1D(Grid1D{n, 0.0, n * dx}, std::move(v));
}

CellField2D to_field2(const py::array_t<double, py::array::c_style>& a, double dx, double dy) {
  if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d array");
  const int nx = static_cast<int>(a.shape(0));
  const int ny = static_cast<int>(a.shape(1));
  CellField2D f(Grid2D{nx, ny, 0.0, nx * dx, 0.0, ny * dy});
  std::copy(a.data(), a.data() + static_cast<size_t>(nx) * ny, f.values.begin());
  return f;
}

py::array_t<double> to_array2(const CellField2D& f) {
  py::array_t<double> out({f.grid.nx, f.grid.ny});
  std::copy(f.values.begin(), f.values.end(), out.mutable_data());
  return out;
}

BoundaryPolicy policy_from(const std::string& s) {
  if (s == "periodic") return BoundaryPolicy::Periodic;
  if (s == "freeflow") return BoundaryPolicy::FreeFlow;
  throw std::invalid_argument("boundary must be 'periodic' or 'freeflow'");
}

CwenoParams params_from(double epsilon, int p) {
  CwenoParams prm;
  prm.epsilon = epsilon;
  prm.p = p;
  return prm;
}

ButcherTable table_from(const std::string& s) {
  if (s == "dirk2") return dirk2_table();
  if (s == "dirk43") return dirk43_table();
  throw std::invalid_argument("integrator must be 'dirk2' or 'dirk43'");
}

}  // namespace

PYBIND11_MODULE(_slrecon, m) {
  m.doc() = "conservative sliding-average reconstruction and semi-Lagrangian relaxation solvers";

  m.def("alpha_coeff", &alpha_coeff, py::arg("ell"), py::arg("theta"));
  m.def("beta_coeff", &beta_coeff, py::arg("ell"), py::arg("theta"));

  m.def(
      "decompose_shift",
      [](double displacement, double dx) {
        const auto s = decompose_shift(displacement, dx);
        return py::make_tuple(s.offset, s.theta);
      },
      py::arg("displacement"), py::arg("dx"),
      "split a displacement into (whole cells, fraction in [0,1))");

  m.def(
      "ghost_extend",
      [](const py::array_t<double, py::array::c_style>& values, const std::string& boundary,
         int width) {
        return to_array(ghost_extend_raw(to_vector(values), policy_from(boundary), width));
      },
      py::arg("values"), py::arg("boundary"), py::arg("width"));

  m.def(
      "q_shifted",
      [](const py::array_t<double, py::array::c_style>& values, double dx, double displacement,
         const std::string& recon, const std::string& boundary, double epsilon, int p) {
        const auto f = to_field(values, dx);
        const auto out = shifted_field(f, recon_kind_from_string(recon), params_from(epsilon, p),
                                       decompose_shift(displacement, dx), policy_from(boundary));
        return to_array(out.values);
      },
      py::arg("values"), py::arg("dx"), py::arg("displacement"), py::arg("recon") = "cweno23",
      py::arg("boundary") = "periodic", py::arg("epsilon") = -1.0, py::arg("p") = 2,
      "conservative sliding-average evaluation of cell averages at x_i + displacement");

  m.def(
      "q_shifted_2d",
      [](const py::array_t<double, py::array::c_style>& values, double dx, double dy,
         double disp_x, double disp_y, const std::string& recon, const std::string& boundary,
         double epsilon, int p, bool composed) {
        const auto f = to_field2(values, dx, dy);
        const auto kind = recon_kind_from_string(recon);
        const auto prm = params_from(epsilon, p);
        const auto sx = decompose_shift(disp_x, dx);
        const auto sy = decompose_shift(disp_y, dy);
        const auto pol = policy_from(boundary);
        const auto out = composed ? q_shifted_composed_2d(f, kind, prm, sx, sy, pol)
                                  : q_shifted_field_2d(f, kind, prm, sx, sy, pol);
        return to_array2(out);
      },
      py::arg("values"), py::arg("dx"), py::arg("dy"), py::arg("disp_x"), py::arg("disp_y"),
      py::arg("recon") = "cweno23", py::arg("boundary") = "periodic", py::arg("epsilon") = -1.0,
      py::arg("p") = 2, py::arg("composed") = false);

  m.def("dirk2_table", [] {
    const auto t = dirk2_table();
    return py::make_tuple(t.a, t.b, t.c);
  });
  m.def("dirk43_table", [] {
    const auto t = dirk43_table();
    return py::make_tuple(t.a, t.b, t.c);
  });
  m.def("bdf_coeffs", [](int order) {
    const auto b = bdf_coeffs(order);
    return py::make_tuple(b.alpha, b.beta_s);
  });

  m.def(
      "xinjin_step",
      [](const py::array_t<double, py::array::c_style>& u,
         const py::array_t<double, py::array::c_style>& v, double dx, double dt, double kappa,
         const std::string& integrator, const std::string& recon, const std::string& boundary,
         double epsilon, int p) {
        XinJinState st;
        st.u = to_field(u, dx);
        st.v = to_field(v, dx);
        st.kappa = kappa;
        const auto out =
            xinjin_dirk_step(st, table_from(integrator), dt, recon_kind_from_string(recon),
                             params_from(epsilon, p), policy_from(boundary));
        return py::make_tuple(to_array(out.u.values), to_array(out.v.values));
      },
      py::arg("u"), py::arg("v"), py::arg("dx"), py::arg("dt"), py::arg("kappa"),
      py::arg("integrator") = "dirk2", py::arg("recon") = "cweno23",
      py::arg("boundary") = "periodic", py::arg("epsilon") = -1.0, py::arg("p") = 2,
      "one DIRK step of the relaxation system; returns (u, v)");

  m.def(
      "broadwell_step",
      [](const py::array_t<double, py::array::c_style>& f,
         const py::array_t<double, py::array::c_style>& g,
         const py::array_t<double, py::array::c_style>& h, double dx, double dt, double kappa,
         const std::string& integrator, const std::string& recon, const std::string& boundary,
         double epsilon, int p) {
        BroadwellState st;
        st.f = to_field(f, dx);
        st.g = to_field(g, dx);
        st.h = to_field(h, dx);
        st.kappa = kappa;
        const auto out =
            broadwell_dirk_step(st, table_from(integrator), dt, recon_kind_from_string(recon),
                                params_from(epsilon, p), policy_from(boundary));
        return py::make_tuple(to_array(out.f.values), to_array(out.g.values),
                              to_array(out.h.values));
      },
      py::arg("f"), py::arg("g"), py::arg("h"), py::arg("dx"), py::arg("dt"), py::arg("kappa"),
      py::arg("integrator") = "dirk2", py::arg("recon") = "cweno23",
      py::arg("boundary") = "periodic", py::arg("epsilon") = -1.0, py::arg("p") = 2,
      "one DIRK step of the Broadwell model; returns (f, g, h)");

  m.def(
      "stage_solve_hfg",
      [](double F, double G, double H, double w) {
        const auto s = stage_solve_hfg(F, G, H, w);
        return py::make_tuple(s[0], s[1], s[2]);
      },
      py::arg("F"), py::arg("G"), py::arg("H"), py::arg("w"));

  m.def(
      "lax_friedrichs_step",
      [](const py::array_t<double, py::array::c_style>& u, const std::string& boundary) {
        const auto out =
            lax_friedrichs_step(to_field(u, 1.0), burgers_flux(), policy_from(boundary));
        return to_array(out.values);
      },
      py::arg("u"), py::arg("boundary") = "periodic");

  m.def(
      "relaxation_limit_step",
      [](const py::array_t<double, py::array::c_style>& f,
         const py::array_t<double, py::array::c_style>& g,
         const py::array_t<double, py::array::c_style>& h, const std::string& boundary) {
        BroadwellState st;
        st.f = to_field(f, 1.0);
        st.g = to_field(g, 1.0);
        st.h = to_field(h, 1.0);
        st.kappa = 1.0;
        const auto out = relaxation_limit_step(st, policy_from(boundary));
        return py::make_tuple(to_array(out.f.values), to_array(out.g.values),
                              to_array(out.h.values));
      },
      py::arg("f"), py::arg("g"), py::arg("h"), py::arg("boundary") = "periodic");

  m.def(
      "conservation_sweep",
      [](int n, const std::string& recon, double epsilon) {
        RunConfig cfg;
        cfg.experiment = "recon-sweep";
        cfg.n = {n};
        cfg.recon = recon_kind_from_string(recon);
        cfg.params.epsilon = epsilon;
        const auto rep = run_conservation_sweep(cfg);
        return py::make_tuple(rep.rows.at(0).err, rep.rows.at(1).err);
      },
      py::arg("n") = 20, py::arg("recon") = "cweno23", py::arg("epsilon") = 1.0,
      "max-over-theta relative sum errors for the two periodic comparison profiles");
}
