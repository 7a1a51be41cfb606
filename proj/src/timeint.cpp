#include "slrecon/timeint.hpp"

#include <cmath>
#include <stdexcept>

namespace slrecon {

ButcherTable dirk2_table() {
  const double al = 1.0 - std::sqrt(2.0) / 2.0;
  ButcherTable t;
  t.s = 2;
  t.a = {al, 0.0, 1.0 - al, al};
  t.b = {1.0 - al, al};
  t.c = {al, 1.0};
  return t;
}

ButcherTable dirk43_table() {
  const double g = 1767732205903.0 / 4055673282236.0;
  const double c3 = 3.0 / 5.0;
  const double b2 = -4482444167858.0 / 7529755066697.0;
  const double b3 = 11266239266428.0 / 11593286722821.0;
  const double d = -640167445237.0 / 6845629431997.0;
  ButcherTable t;
  t.s = 4;
  t.a = {0.0,          0.0, 0.0, 0.0,
         g,            g,   0.0, 0.0,
         c3 - d - g,   d,   g,   0.0,
         1.0 - b2 - b3 - g, b2, b3, g};
  t.b = {1.0 - b2 - b3 - g, b2, b3, g};
  t.c = {0.0, 2.0 * g, c3, 1.0};
  return t;
}

BdfCoeffs bdf_coeffs(int order) {
  if (order == 2) return {2, {4.0 / 3.0, -1.0 / 3.0}, 2.0 / 3.0};
  if (order == 3) return {3, {18.0 / 11.0, -9.0 / 11.0, 2.0 / 11.0}, 6.0 / 11.0};
  throw std::invalid_argument("bdf_coeffs: order must be 2 or 3");
}

Integrator integrator_from_string(const std::string& name) {
  if (name == "dirk2") return Integrator::Dirk2;
  if (name == "dirk43") return Integrator::Dirk43;
  if (name == "bdf2") return Integrator::Bdf2;
  if (name == "bdf3") return Integrator::Bdf3;
  throw std::invalid_argument("unknown integrator: " + name);
}

std::string to_string(Integrator integ) {
  switch (integ) {
    case Integrator::Dirk2: return "dirk2";
    case Integrator::Dirk43: return "dirk43";
    case Integrator::Bdf2: return "bdf2";
    case Integrator::Bdf3: return "bdf3";
  }
  return "?";
}

bool is_bdf(Integrator integ) {
  return integ == Integrator::Bdf2 || integ == Integrator::Bdf3;
}

int integrator_order(Integrator integ) {
  switch (integ) {
    case Integrator::Dirk2:
    case Integrator::Bdf2: return 2;
    case Integrator::Dirk43:
    case Integrator::Bdf3: return 3;
  }
  return 0;
}

}  // namespace slrecon
