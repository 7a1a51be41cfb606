#ifndef SLRECON_TIMEINT_HPP_
#define SLRECON_TIMEINT_HPP_

#include <string>
#include <vector>

namespace slrecon {

//! Stiffly accurate DIRK tableau: lower-triangular A, b equal to the last row.
struct ButcherTable {
  int s = 0;
  std::vector<double> a;  // s*s, row-major
  std::vector<double> b;
  std::vector<double> c;

  double A(int k, int l) const { return a[static_cast<size_t>(k) * s + l]; }
};

ButcherTable dirk2_table();
ButcherTable dirk43_table();

struct BdfCoeffs {
  int s = 0;                 // order (2 or 3)
  std::vector<double> alpha; // history weights, most recent level first
  double beta_s = 0.0;       // implicit weight
};

BdfCoeffs bdf_coeffs(int order);

enum class Integrator { Dirk2, Dirk43, Bdf2, Bdf3 };
Integrator integrator_from_string(const std::string& name);
std::string to_string(Integrator integ);
bool is_bdf(Integrator integ);
//! BDF order, or the DIRK's design order for the bootstrap pairing.
int integrator_order(Integrator integ);

}  // namespace slrecon

#endif  // SLRECON_TIMEINT_HPP_
