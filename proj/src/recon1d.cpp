#include "slrecon/recon1d.hpp"

#include <algorithm>
#include <cmath>

namespace slrecon {

namespace {

double factorial(int m) {
  double r = 1.0;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

double ipow(double x, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= x;
  return r;
}

double clamp_unit(double e) { return std::min(1.0, std::max(0.0, e)); }

}  // namespace

ReconKind recon_kind_from_string(const std::string& name) {
  if (name == "lagrange0") return ReconKind::Lagrange0;
  if (name == "lagrange2") return ReconKind::Lagrange2;
  if (name == "lagrange4") return ReconKind::Lagrange4;
  if (name == "cweno23") return ReconKind::Cweno23;
  if (name == "cweno23z") return ReconKind::Cweno23Z;
  if (name == "cweno35") return ReconKind::Cweno35;
  if (name == "cwenoz35") return ReconKind::Cweno35Z;
  if (name == "cweno35z") return ReconKind::Cweno35Z;
  if (name == "pfc") return ReconKind::Pfc;
  if (name == "pointweno34") return ReconKind::PointWeno34;
  throw std::invalid_argument("unknown reconstruction: " + name);
}

std::string to_string(ReconKind kind) {
  switch (kind) {
    case ReconKind::Lagrange0: return "lagrange0";
    case ReconKind::Lagrange2: return "lagrange2";
    case ReconKind::Lagrange4: return "lagrange4";
    case ReconKind::Cweno23: return "cweno23";
    case ReconKind::Cweno23Z: return "cweno23z";
    case ReconKind::Cweno35: return "cweno35";
    case ReconKind::Cweno35Z: return "cwenoz35";
    case ReconKind::Pfc: return "pfc";
    case ReconKind::PointWeno34: return "pointweno34";
  }
  return "?";
}

int polynomial_degree(ReconKind kind) {
  switch (kind) {
    case ReconKind::Lagrange0: return 0;
    case ReconKind::Lagrange4:
    case ReconKind::Cweno35:
    case ReconKind::Cweno35Z: return 4;
    case ReconKind::PointWeno34: return 2;
    default: return 2;
  }
}

int stencil_radius(ReconKind kind) {
  switch (kind) {
    case ReconKind::Lagrange0: return 0;
    case ReconKind::Lagrange4:
    case ReconKind::Cweno35:
    case ReconKind::Cweno35Z: return 2;
    case ReconKind::PointWeno34: return 2;
    default: return 1;
  }
}

double alpha_coeff(int ell, double theta) {
  if (ell < 0) throw std::invalid_argument("alpha_coeff: ell must be non-negative");
  if (!(theta >= 0.0 && theta < 1.0))
    throw std::invalid_argument("alpha_coeff: theta must lie in [0,1)");
  return (1.0 - ipow(2.0 * theta - 1.0, ell + 1)) / (ipow(2.0, ell + 1) * factorial(ell + 1));
}

double beta_coeff(int ell, double theta) {
  if (ell < 0) throw std::invalid_argument("beta_coeff: ell must be non-negative");
  if (!(theta >= 0.0 && theta < 1.0))
    throw std::invalid_argument("beta_coeff: theta must lie in [0,1)");
  const double sgn = (ell % 2 == 0) ? -1.0 : 1.0;  // (-1)^(ell+1)
  return (ipow(2.0 * theta - 1.0, ell + 1) - sgn) / (ipow(2.0, ell + 1) * factorial(ell + 1));
}

namespace {

ReconCoeffs1D make_coeffs(int k, int n, int ghost, double dx) {
  ReconCoeffs1D c;
  c.k = k;
  c.n = n;
  c.ghost = ghost;
  c.dx = dx;
  c.data.assign(static_cast<size_t>(n + 2 * ghost) * (k + 1), 0.0);
  return c;
}

// Raw builders over an extended value array e of length m + 2*radius,
// producing coefficients for m cells. e[c + radius] is the value of cell c.

void lagrange_raw(const std::vector<double>& e, int m, int k, double dx, double* out) {
  if (k == 0) {
    for (int c = 0; c < m; ++c) out[c] = e[c];
    return;
  }
  if (k == 2) {
    for (int c = 0; c < m; ++c) {
      const double um = e[c], u0 = e[c + 1], up = e[c + 2];
      const double d2 = up - 2.0 * u0 + um;
      double* r = out + 3 * c;
      r[0] = u0 - d2 / 24.0;
      r[1] = (up - um) / (2.0 * dx);
      r[2] = d2 / (dx * dx);
    }
    return;
  }
  // k == 4: symmetric quartic matching five cell averages
  for (int c = 0; c < m; ++c) {
    const double u_2 = e[c], u_1 = e[c + 1], u0 = e[c + 2], u1 = e[c + 3], u2 = e[c + 4];
    double* r = out + 5 * c;
    r[0] = (2134.0 * u0 - 116.0 * (u_1 + u1) + 9.0 * (u_2 + u2)) / 1920.0;
    r[1] = (34.0 * (u1 - u_1) - 5.0 * (u2 - u_2)) / (48.0 * dx);
    r[2] = (-22.0 * u0 + 12.0 * (u_1 + u1) - (u_2 + u2)) / (8.0 * dx * dx);
    r[3] = (2.0 * (u_1 - u1) - (u_2 - u2)) / (2.0 * dx * dx * dx);
    r[4] = (6.0 * u0 - 4.0 * (u_1 + u1) + (u_2 + u2)) / (dx * dx * dx * dx);
  }
}

void cweno23_raw(const std::vector<double>& e, int m, double dx, const CwenoParams& prm,
                 bool z_variant, double* out) {
  const double eps = prm.eps_for(dx);
  const double CL = prm.c_side, CR = prm.c_side, CC = prm.c_center;
  const int p = prm.p;
  for (int c = 0; c < m; ++c) {
    const double um = e[c], u0 = e[c + 1], up = e[c + 2];
    const double dL = u0 - um, dR = up - u0;
    const double d2 = up - 2.0 * u0 + um;
    const double bL = dL * dL;
    const double bR = dR * dR;
    const double bC = (13.0 / 3.0) * d2 * d2 + 0.25 * (up - um) * (up - um);
    double aL, aC, aR;
    if (z_variant) {
      const double tau = std::abs(bR - bL);
      aL = CL * ipow(1.0 + tau / (eps + bL), p);
      aC = CC * ipow(1.0 + tau / (eps + bC), p);
      aR = CR * ipow(1.0 + tau / (eps + bR), p);
    } else {
      aL = CL / ipow(eps + bL, p);
      aC = CC / ipow(eps + bC, p);
      aR = CR / ipow(eps + bR, p);
    }
    const double s = aL + aC + aR;
    const double wL = aL / s, wC = aC / s, wR = aR / s;
    double* r = out + 3 * c;
    r[0] = u0 - wC / 12.0 * d2;
    r[1] = (wL * dL + wR * dR + wC * 0.5 * (up - um)) / dx;
    r[2] = 2.0 * wC * d2 / (dx * dx);
  }
}

void cweno35_raw(const std::vector<double>& e, int m, double dx, const CwenoParams& prm,
                 bool z_variant, double* out) {
  const double eps = prm.eps_for(dx);
  const int p = prm.p;
  const double h2 = dx * dx, h4 = h2 * h2, h6 = h4 * h2, h8 = h4 * h4;
  for (int c = 0; c < m; ++c) {
    const double u_2 = e[c], u_1 = e[c + 1], u0 = e[c + 2], u1 = e[c + 3], u2 = e[c + 4];
    // side quadratics (derivative coefficients at the cell center)
    const double p1_1 = (3.0 * u0 - 4.0 * u_1 + u_2) / (2.0 * dx);
    const double p2_1 = (u0 - 2.0 * u_1 + u_2) / h2;
    const double p1_2 = (u1 - u_1) / (2.0 * dx);
    const double p2_2 = (u1 - 2.0 * u0 + u_1) / h2;
    const double p1_3 = (-3.0 * u0 + 4.0 * u1 - u2) / (2.0 * dx);
    const double p2_3 = (u0 - 2.0 * u1 + u2) / h2;
    const double v1 = (23.0 * u0 + 2.0 * u_1 - u_2) / 24.0;
    const double v2 = u0 - (u1 - 2.0 * u0 + u_1) / 24.0;
    const double v3 = (23.0 * u0 + 2.0 * u1 - u2) / 24.0;
    // central degree-4 polynomial (optimal split already folded in)
    const double q0 = (577.0 / 480.0) * u0 - (29.0 / 240.0) * (u_1 + u1) +
                      (19.0 / 960.0) * (u_2 + u2);
    const double q1 = -(8.0 * (u_1 - u1) - (u_2 - u2)) / (12.0 * dx);
    const double q2 = -(10.0 * u0 - 6.0 * (u_1 + u1) + (u_2 + u2)) / (2.0 * h2);
    const double q3 = (2.0 * (u_1 - u1) - (u_2 - u2)) / (dx * h2);
    const double q4 = 2.0 * (6.0 * u0 - 4.0 * (u_1 + u1) + (u_2 + u2)) / h4;
    // scaled-derivative smoothness indicators
    const double b1 = h2 * p1_1 * p1_1 + (13.0 / 12.0) * h4 * p2_1 * p2_1;
    const double b2 = h2 * p1_2 * p1_2 + (13.0 / 12.0) * h4 * p2_2 * p2_2;
    const double b3 = h2 * p1_3 * p1_3 + (13.0 / 12.0) * h4 * p2_3 * p2_3;
    const double bC = h2 * q1 * q1 + (13.0 / 12.0) * h4 * q2 * q2 + (1.0 / 12.0) * h4 * q1 * q3 +
                      (1043.0 / 960.0) * h6 * q3 * q3 + (7.0 / 80.0) * h6 * q2 * q4 +
                      (87617.0 / 80640.0) * h8 * q4 * q4;
    double a1, a2, a3, aC;
    if (z_variant) {
      const double tau = std::abs(b3 - b1);
      a1 = prm.c1 * ipow(1.0 + tau / (eps + b1), p);
      a2 = prm.c2 * ipow(1.0 + tau / (eps + b2), p);
      a3 = prm.c3 * ipow(1.0 + tau / (eps + b3), p);
      aC = prm.c_center4 * ipow(1.0 + tau / (eps + bC), p);
    } else {
      a1 = prm.c1 / ipow(eps + b1, p);
      a2 = prm.c2 / ipow(eps + b2, p);
      a3 = prm.c3 / ipow(eps + b3, p);
      aC = prm.c_center4 / ipow(eps + bC, p);
    }
    const double s = a1 + a2 + a3 + aC;
    const double w1 = a1 / s, w2 = a2 / s, w3 = a3 / s, wC = aC / s;
    double* r = out + 5 * c;
    r[0] = wC * q0 + w1 * v1 + w2 * v2 + w3 * v3;
    r[1] = wC * q1 + w1 * p1_1 + w2 * p1_2 + w3 * p1_3;
    r[2] = wC * q2 + w1 * p2_1 + w2 * p2_2 + w3 * p2_3;
    r[3] = wC * q3;
    r[4] = wC * q4;
  }
}

// require_positive is dropped for internal use on signed data (2D stage 2);
// limiters are then clamped to [0,1] and u_inf is the max of the given row.
void pfc_raw(const std::vector<double>& e, int m, double dx, double u_inf, double* out) {
  for (int c = 0; c < m; ++c) {
    const double um = e[c], u0 = e[c + 1], up = e[c + 2];
    const double dp = up - u0, dm = u0 - um;
    double ep = 1.0, em = 1.0;
    if (dp > 0.0)
      ep = clamp_unit(2.0 * u0 / dp);
    else if (dp < 0.0)
      ep = clamp_unit(-2.0 * (u_inf - u0) / dp);
    if (dm > 0.0)
      em = clamp_unit(2.0 * (u_inf - u0) / dm);
    else if (dm < 0.0)
      em = clamp_unit(-2.0 * u0 / dm);
    double* r = out + 3 * c;
    r[0] = u0 - (ep * dp - em * dm) / 24.0;
    r[1] = (ep * dp + em * dm) / (2.0 * dx);
    r[2] = (ep * dp - em * dm) / (dx * dx);
  }
}

}  // namespace

namespace detail {

ReconCoeffs1D build_sequence_coeffs(const std::vector<double>& values, double dx, ReconKind kind,
                                    const CwenoParams& params, BoundaryPolicy policy, int ghost,
                                    bool enforce_pfc_positive) {
  const int n = static_cast<int>(values.size());
  const int k = polynomial_degree(kind);
  const int r = stencil_radius(kind);
  if (n <= std::max(k, 2 * r))
    throw std::invalid_argument("reconstruction stencil exceeds grid size");
  const int m = n + 2 * ghost;
  auto e = ghost_extend_raw(values, policy, ghost + r);
  auto c = make_coeffs(k, n, ghost, dx);
  switch (kind) {
    case ReconKind::Lagrange0:
    case ReconKind::Lagrange2:
    case ReconKind::Lagrange4:
      lagrange_raw(e, m, k, dx, c.data.data());
      break;
    case ReconKind::Cweno23:
    case ReconKind::Cweno23Z:
      cweno23_raw(e, m, dx, params, kind == ReconKind::Cweno23Z, c.data.data());
      break;
    case ReconKind::Cweno35:
    case ReconKind::Cweno35Z:
      cweno35_raw(e, m, dx, params, kind == ReconKind::Cweno35Z, c.data.data());
      break;
    case ReconKind::Pfc: {
      double u_inf = values[0];
      for (double v : values) {
        if (enforce_pfc_positive && !(v > 0.0))
          throw std::invalid_argument("basic_pfc: input values must be positive");
        u_inf = std::max(u_inf, v);
      }
      pfc_raw(e, m, dx, u_inf, c.data.data());
      break;
    }
    case ReconKind::PointWeno34:
      throw std::invalid_argument("pointweno34 has no coefficient form");
  }
  return c;
}

}  // namespace detail

ReconCoeffs1D basic_lagrange(const CellField1D& field, int k, BoundaryPolicy policy, int ghost) {
  if (k != 0 && k != 2 && k != 4)
    throw std::invalid_argument("basic_lagrange: k must be 0, 2 or 4");
  const ReconKind kind = k == 0   ? ReconKind::Lagrange0
                         : k == 2 ? ReconKind::Lagrange2
                                  : ReconKind::Lagrange4;
  return detail::build_sequence_coeffs(field.values, field.dx(), kind, CwenoParams{}, policy,
                                       ghost, true);
}

ReconCoeffs1D basic_cweno23(const CellField1D& field, const CwenoParams& params,
                            BoundaryPolicy policy, bool z_variant, int ghost) {
  return detail::build_sequence_coeffs(field.values, field.dx(),
                                       z_variant ? ReconKind::Cweno23Z : ReconKind::Cweno23,
                                       params, policy, ghost, true);
}

ReconCoeffs1D basic_cweno35(const CellField1D& field, const CwenoParams& params,
                            BoundaryPolicy policy, bool z_variant, int ghost) {
  return detail::build_sequence_coeffs(field.values, field.dx(),
                                       z_variant ? ReconKind::Cweno35Z : ReconKind::Cweno35,
                                       params, policy, ghost, true);
}

ReconCoeffs1D basic_pfc(const CellField1D& field, BoundaryPolicy policy, int ghost) {
  return detail::build_sequence_coeffs(field.values, field.dx(), ReconKind::Pfc, CwenoParams{},
                                       policy, ghost, true);
}

ReconCoeffs1D build_coeffs(const CellField1D& field, ReconKind kind, const CwenoParams& params,
                           BoundaryPolicy policy, int ghost) {
  return detail::build_sequence_coeffs(field.values, field.dx(), kind, params, policy, ghost,
                                       true);
}

double q_eval(const ReconCoeffs1D& coeffs, int i, double theta) {
  if (!(theta >= 0.0 && theta < 1.0))
    throw std::invalid_argument("q_eval: theta must lie in [0,1)");
  if (i < -coeffs.ghost || i + 1 >= coeffs.n + coeffs.ghost)
    throw std::out_of_range("q_eval: cell index outside stored range");
  double s = 0.0;
  double pw = 1.0;
  for (int l = 0; l <= coeffs.k; ++l) {
    s += pw * (alpha_coeff(l, theta) * coeffs.coeff(i, l) +
               beta_coeff(l, theta) * coeffs.coeff(i + 1, l));
    pw *= coeffs.dx;
  }
  return s;
}

namespace {

int required_ghost(const ShiftQuery& shift, int n) {
  const std::int64_t o = shift.offset;
  if (std::abs(o) > n)
    throw std::invalid_argument("shift moves feet more than one domain width outside the grid");
  return static_cast<int>(std::max<std::int64_t>(1, std::abs(o) + 1));
}

}  // namespace

CellField1D q_shifted_field(const CellField1D& field, ReconKind kind, const CwenoParams& params,
                            const ShiftQuery& shift, BoundaryPolicy policy) {
  const int g = required_ghost(shift, field.n());
  const auto coeffs = build_coeffs(field, kind, params, policy, g);
  CellField1D out(field.grid);
  const int o = static_cast<int>(shift.offset);
  // precompute basis values
  const int k = coeffs.k;
  std::vector<double> a(k + 1), b(k + 1);
  double pw = 1.0;
  for (int l = 0; l <= k; ++l) {
    a[l] = pw * alpha_coeff(l, shift.theta);
    b[l] = pw * beta_coeff(l, shift.theta);
    pw *= coeffs.dx;
  }
  for (int i = 0; i < field.n(); ++i) {
    double s = 0.0;
    for (int l = 0; l <= k; ++l)
      s += a[l] * coeffs.coeff(i + o, l) + b[l] * coeffs.coeff(i + o + 1, l);
    out.values[i] = s;
  }
  return out;
}

CellField1D point_weno34_shifted_field(const CellField1D& field, const CwenoParams& params,
                                       const ShiftQuery& shift, BoundaryPolicy policy) {
  const int n = field.n();
  const std::int64_t o64 = shift.offset;
  if (std::abs(o64) > n)
    throw std::invalid_argument("shift moves feet more than one domain width outside the grid");
  const int o = static_cast<int>(o64);
  const double th = shift.theta;
  const int g = std::abs(o) + 3;
  const auto e = ghost_extend(field, policy, g);
  const double eps = params.eps_for(field.dx());
  const int p = params.p;
  CellField1D out(field.grid);
  const double gL = (2.0 - th) / 3.0, gR = (1.0 + th) / 3.0;
  for (int i = 0; i < n; ++i) {
    const int c = i + o + g;
    const double um1 = e[c - 1], u0 = e[c], u1 = e[c + 1], u2 = e[c + 2];
    const double PL = u0 + 0.5 * th * (u1 - um1) + 0.5 * th * th * (u1 - 2.0 * u0 + um1);
    const double PR =
        u0 + 0.5 * th * (-3.0 * u0 + 4.0 * u1 - u2) + 0.5 * th * th * (u0 - 2.0 * u1 + u2);
    const double dL2 = um1 - 2.0 * u0 + u1;
    const double dR2 = u0 - 2.0 * u1 + u2;
    const double sR = -3.0 * u0 + 4.0 * u1 - u2;
    const double bL = (13.0 / 12.0) * dL2 * dL2 + 0.25 * (u1 - um1) * (u1 - um1);
    const double bR = (13.0 / 12.0) * dR2 * dR2 + 0.25 * sR * sR;
    const double aL = gL / ipow(eps + bL, p);
    const double aR = gR / ipow(eps + bR, p);
    out.values[i] = (aL * PL + aR * PR) / (aL + aR);
  }
  return out;
}

CellField1D shifted_field(const CellField1D& field, ReconKind kind, const CwenoParams& params,
                          const ShiftQuery& shift, BoundaryPolicy policy) {
  if (kind == ReconKind::PointWeno34)
    return point_weno34_shifted_field(field, params, shift, policy);
  return q_shifted_field(field, kind, params, shift, policy);
}

}  // namespace slrecon
