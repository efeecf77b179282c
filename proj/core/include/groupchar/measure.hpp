#pragma once

#include <vector>

#include "groupchar/group.hpp"
#include "groupchar/tolerances.hpp"

namespace groupchar {

// Dense real-weight table over a finite group. Distributions are the
// nonnegative, mass-one special case; nothing here enforces that.
struct SignedMeasure {
  FiniteAbelianGroup group;
  std::vector<double> weights;

  SignedMeasure(FiniteAbelianGroup g, std::vector<double> w);

  double total_mass() const;
  double min_weight() const;
  bool is_distribution(double eps = tol::distribution) const;

  double at(const GroupElement& x) const { return weights[static_cast<size_t>(group.index_of(x))]; }

  static SignedMeasure point_mass(const FiniteAbelianGroup& g, const GroupElement& x);
  static SignedMeasure uniform(const FiniteAbelianGroup& g);
  static SignedMeasure uniform_on(const Subgroup& h);
};

// Complex table over the (self-dual) character group.
struct CharFunction {
  FiniteAbelianGroup group;
  std::vector<cplx> values;

  CharFunction(FiniteAbelianGroup g, std::vector<cplx> v);

  // Index of the first value with |f(y)| < eps, or -1 if none.
  int64_t first_vanishing(double eps = tol::vanishing) const;
  bool nonvanishing(double eps = tol::vanishing) const { return first_vanishing(eps) < 0; }
  double max_abs() const;
};

// Real table over the character group (log-magnitudes, residuals, exponents).
struct DualFunction {
  FiniteAbelianGroup group;
  std::vector<double> values;

  DualFunction(FiniteAbelianGroup g, std::vector<double> v);
};

// f(y) = sum_x (x, y) mu(x), by direct summation.
CharFunction char_function(const SignedMeasure& mu);

// mu(x) = (1/|G|) sum_y conj((x, y)) f(y). The imaginary residue must stay
// below tol::imag_residue or the input was not conjugate-symmetric.
SignedMeasure inverse_transform(const CharFunction& f);

SignedMeasure convolve(const SignedMeasure& a, const SignedMeasure& b);

// Pushforward under x -> -x.
SignedMeasure reflect(const SignedMeasure& mu);

struct Symmetrization {
  SignedMeasure nu;      // mu * reflect(mu)
  CharFunction nu_hat;   // |mu_hat|^2, real and nonnegative
};
Symmetrization symmetrize(const SignedMeasure& mu);

}  // namespace groupchar
