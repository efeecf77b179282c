#include "groupchar/measure.hpp"

#include <algorithm>
#include <cmath>

#include "groupchar/errors.hpp"

namespace groupchar {

SignedMeasure::SignedMeasure(FiniteAbelianGroup g, std::vector<double> w)
    : group(std::move(g)), weights(std::move(w)) {
  if (static_cast<int64_t>(weights.size()) != group.order())
    fail(ErrorKind::Structural, "weight table size does not match group order");
}

double SignedMeasure::total_mass() const {
  double total = 0;
  for (double w : weights) total += w;
  return total;
}

double SignedMeasure::min_weight() const {
  return *std::min_element(weights.begin(), weights.end());
}

bool SignedMeasure::is_distribution(double eps) const {
  return min_weight() >= -eps && std::abs(total_mass() - 1.0) <= eps;
}

SignedMeasure SignedMeasure::point_mass(const FiniteAbelianGroup& g, const GroupElement& x) {
  std::vector<double> w(static_cast<size_t>(g.order()), 0.0);
  w[static_cast<size_t>(g.index_of(x))] = 1.0;
  return SignedMeasure(g, std::move(w));
}

SignedMeasure SignedMeasure::uniform(const FiniteAbelianGroup& g) {
  std::vector<double> w(static_cast<size_t>(g.order()), 1.0 / static_cast<double>(g.order()));
  return SignedMeasure(g, std::move(w));
}

SignedMeasure SignedMeasure::uniform_on(const Subgroup& h) {
  std::vector<double> w(static_cast<size_t>(h.parent().order()), 0.0);
  for (int64_t idx : h.indices()) w[static_cast<size_t>(idx)] = 1.0 / static_cast<double>(h.size());
  return SignedMeasure(h.parent(), std::move(w));
}

CharFunction::CharFunction(FiniteAbelianGroup g, std::vector<cplx> v)
    : group(std::move(g)), values(std::move(v)) {
  if (static_cast<int64_t>(values.size()) != group.order())
    fail(ErrorKind::Structural, "value table size does not match group order");
}

int64_t CharFunction::first_vanishing(double eps) const {
  for (int64_t y = 0; y < group.order(); ++y)
    if (std::abs(values[static_cast<size_t>(y)]) < eps) return y;
  return -1;
}

double CharFunction::max_abs() const {
  double m = 0;
  for (const cplx& v : values) m = std::max(m, std::abs(v));
  return m;
}

DualFunction::DualFunction(FiniteAbelianGroup g, std::vector<double> v)
    : group(std::move(g)), values(std::move(v)) {
  if (static_cast<int64_t>(values.size()) != group.order())
    fail(ErrorKind::Structural, "value table size does not match group order");
}

CharFunction char_function(const SignedMeasure& mu) {
  const auto& g = mu.group;
  const int64_t n = g.order();
  std::vector<cplx> values(static_cast<size_t>(n));
  for (int64_t y = 0; y < n; ++y) {
    cplx acc = 0;
    for (int64_t x = 0; x < n; ++x)
      acc += mu.weights[static_cast<size_t>(x)] * g.pairing_i(x, y);
    values[static_cast<size_t>(y)] = acc;
  }
  return CharFunction(g, std::move(values));
}

SignedMeasure inverse_transform(const CharFunction& f) {
  const auto& g = f.group;
  const int64_t n = g.order();
  const int64_t L = g.pairing_order();
  std::vector<double> weights(static_cast<size_t>(n));
  double max_imag = 0;
  for (int64_t x = 0; x < n; ++x) {
    cplx acc = 0;
    for (int64_t y = 0; y < n; ++y) {
      int64_t t = g.pairing_exponent_i(x, y);
      acc += f.values[static_cast<size_t>(y)] * g.root_of_unity(t == 0 ? 0 : L - t);
    }
    acc /= static_cast<double>(n);
    max_imag = std::max(max_imag, std::abs(acc.imag()));
    weights[static_cast<size_t>(x)] = acc.real();
  }
  if (max_imag >= tol::imag_residue)
    fail(ErrorKind::NotASignedMeasure,
         "inverse transform has imaginary residue " + std::to_string(max_imag) +
             "; input is not conjugate-symmetric");
  return SignedMeasure(g, std::move(weights));
}

SignedMeasure convolve(const SignedMeasure& a, const SignedMeasure& b) {
  if (!(a.group == b.group)) fail(ErrorKind::Structural, "convolution needs matching groups");
  const auto& g = a.group;
  const int64_t n = g.order();
  std::vector<double> weights(static_cast<size_t>(n), 0.0);
  for (int64_t t = 0; t < n; ++t) {
    const double wa = a.weights[static_cast<size_t>(t)];
    if (wa == 0.0) continue;
    for (int64_t x = 0; x < n; ++x)
      weights[static_cast<size_t>(x)] += wa * b.weights[static_cast<size_t>(g.sub_i(x, t))];
  }
  return SignedMeasure(g, std::move(weights));
}

SignedMeasure reflect(const SignedMeasure& mu) {
  const auto& g = mu.group;
  std::vector<double> weights(static_cast<size_t>(g.order()));
  for (int64_t x = 0; x < g.order(); ++x)
    weights[static_cast<size_t>(x)] = mu.weights[static_cast<size_t>(g.neg_i(x))];
  return SignedMeasure(g, std::move(weights));
}

Symmetrization symmetrize(const SignedMeasure& mu) {
  SignedMeasure nu = convolve(mu, reflect(mu));
  CharFunction nu_hat = char_function(nu);
  // Scrub the float dust: the transform of mu * reflect(mu) is |mu_hat|^2.
  for (cplx& v : nu_hat.values) v = cplx(v.real(), 0.0);
  return Symmetrization{std::move(nu), std::move(nu_hat)};
}

}  // namespace groupchar
