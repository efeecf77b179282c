#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupchar/equation.hpp"
#include "groupchar/intbox.hpp"
#include "groupchar/measure.hpp"

namespace groupchar {

// Truncated Fourier model of a distribution on the q-torus: complex
// coefficients on [-M, M]^q plus a certified bound on the mass of the
// discarded tail.
struct TorusModel {
  IntBox box;
  std::vector<cplx> coeffs;
  double tail_bound = 0.0;
  std::string family;                    // "wrapped_gaussian", "remark2", ...
  std::map<std::string, double> params;  // family parameters, for reports

  TorusModel(IntBox b, std::vector<cplx> c, double tail);

  cplx at(std::span<const int> m) const { return coeffs[static_cast<size_t>(box.index_of(m))]; }
  bool conjugate_symmetric(double eps = tol::strict) const;
  int64_t first_vanishing(double eps = tol::vanishing) const;  // flat index or -1
};

// --- model gallery ---

// coeffs(m) = exp(i m t0) exp(-sigma m^2) on Z, q = 1.
TorusModel wrapped_gaussian(double sigma, double t0, int M);

// coeffs(m) = exp(-m^2) on even m, exp(-m^2 + eps) on odd m.
TorusModel remark2_family(double eps, int M);

// q = l coordinates, k-th factor exp(-a_k m^2) / exp(-a_k m^2 + k); requires
// the total coefficient sum to stay below 2.
TorusModel remark4_family(int l, const std::vector<double>& a, int M);

// coeffs(m) = exp(-a m^2 + i (pi/2) m^3).
TorusModel remark5_family(double a, int M);

// --- density certification ---

struct DensityReport {
  double min_value = 0.0;
  std::vector<double> argmin;  // angles in [0, 2*pi)
  double tail_bound = 0.0;
  double lipschitz_slack = 0.0;
  double max_imag = 0.0;       // sanity: should be ~0 for real densities
  int grid_points = 0;
  bool certified = false;      // min - tail - slack > 0
};

// Evaluates the partial Fourier sum on a uniform grid (grid_points per axis,
// must be >= 4M) and certifies positivity via tail and Lipschitz slack.
DensityReport density_min(const TorusModel& model, int grid_points);

// Total coefficient sum over all of Z^q (box part plus tail estimate).
double total_coefficient_sum(const TorusModel& model);

// --- box-restricted identity checkers ---

// Product identity over tuples whose free entries lie in [-B, B]^q and whose
// derived entries (y_n and all y_j +- y) stay inside the model box. Tuples
// that would leave the box are skipped, not counted.
EquationReport check_product_equation_box(const TorusModel& model, int n, int inner_bound);

// Parallelogram law for a real table on the box; pairs with u+v or u-v
// outside the box are skipped. When even_only is set, u and v range over the
// doubled lattice inside the box.
EquationReport check_parallelogram_box(const IntBox& box, const std::vector<double>& table,
                                       bool even_only = false);

// Norm identity m(u+v) m(u-v) = m(u)^2 for a unit-modulus box table.
EquationReport check_norm_equation_box(const IntBox& box, const std::vector<cplx>& table);

// Power law m(p y) = m(y)^p for |p| <= max_p with p y inside the box.
EquationReport check_power_law_box(const IntBox& box, const std::vector<cplx>& table, int max_p);

struct TorusCharacterFit {
  bool is_character = false;
  std::vector<double> t0;                 // angles, valid when is_character
  std::vector<int> witness_u, witness_v;  // sign-canonical failing pair otherwise
  double max_violation = 0.0;
};

// Fits t0 from the unit phases at the generators and verifies l(m) =
// exp(i m t0) over the whole box. On failure the reported witness is the
// smallest failing multiplicativity pair, canonicalized under global sign.
TorusCharacterFit torus_character_fit(const IntBox& box, const std::vector<cplx>& phases);

// -ln|coeffs| over the box (the half convention); the full convention doubles it.
std::vector<double> torus_log_magnitude(const TorusModel& model, bool full);

}  // namespace groupchar
