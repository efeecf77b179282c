#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupchar/measure.hpp"

namespace groupchar {

// How an exhaustive tuple space should be visited.
struct CheckMode {
  enum class Kind { exhaustive, sampled } kind = Kind::exhaustive;
  uint64_t seed = 0;
  int64_t count = 100000;

  static CheckMode exhaustive() { return CheckMode{}; }
  static CheckMode sampled(uint64_t seed, int64_t count = 100000) {
    return CheckMode{Kind::sampled, seed, count};
  }
};

// Outcome of checking one identity over a tuple space. The witness is the
// lexicographically first tuple attaining the maximum violation and is only
// recorded when the check fails its tolerance.
struct EquationReport {
  std::string equation;
  int n = 0;
  double max_violation = 0.0;
  std::vector<std::vector<int>> witness;
  int64_t tuples_checked = 0;
  bool sampled = false;
  uint64_t seed = 0;
  double tolerance = tol::equation;

  bool passed() const { return max_violation <= tolerance; }
};

// Symmetric table Phi(u, v) derived from a square-like exponent.
struct BiadditiveForm {
  FiniteAbelianGroup group;
  std::vector<double> values;  // row-major |G| x |G|

  double at(int64_t u, int64_t v) const {
    return values[static_cast<size_t>(u * group.order() + v)];
  }
};

// --- finite difference calculus ---

// Applies the difference operators for the given steps, innermost first.
DualFunction finite_difference(const DualFunction& psi, const std::vector<GroupElement>& steps);
CharFunction finite_difference(const CharFunction& f, const std::vector<GroupElement>& steps);

// Least m <= max_m such that every (m+1)-fold iterated difference with a
// fixed step annihilates psi; nullopt when no such m exists.
std::optional<int> polynomial_degree(const DualFunction& psi, int max_m = 5);

// --- identity checkers over finite groups ---

// Product identity: prod f(y_j + y) = prod f(y_j - y) over tuples with
// sum y_j = 0 (y_1..y_{n-1} and y free, y_n determined).
EquationReport check_product_equation(const CharFunction& f, int n,
                                      CheckMode mode = CheckMode::exhaustive());

// Additive form of the same identity for real tables.
EquationReport check_additive_equation(const DualFunction& psi, int n,
                                       CheckMode mode = CheckMode::exhaustive());

// Quadratic (parallelogram) law phi(u+v) + phi(u-v) = 2 phi(u) + 2 phi(v)
// over pairs from the given domain.
EquationReport check_parallelogram(const DualFunction& phi, const Subgroup& domain);
EquationReport check_parallelogram(const DualFunction& phi);  // whole dual group

// Phi(u, v) = [phi(u+v) - phi(u) - phi(v)] / 2; requires phi(0) = 0.
BiadditiveForm biadditive_from_quadratic(const DualFunction& phi);

// Additivity of Phi in its first slot over triples (u, u', v).
EquationReport check_biadditive(const BiadditiveForm& form);

// Iterated difference identities: order-2 or order-3 difference in k composed
// with a doubled step in h. When restrict_k is given, k and y range over the
// subgroup and h stays free.
EquationReport check_mixed_difference(const DualFunction& psi, int order,
                                      const Subgroup* restrict_k = nullptr);

// Evenness psi(-y) = psi(y).
EquationReport check_evenness(const DualFunction& psi);

// m(u+v) m(u-v) = m(u)^2 for unit-modulus tables.
EquationReport check_norm_equation(const CharFunction& m);

// m(p y) = m(y)^p for |p| <= max_p. Witness entries are ([p], y).
EquationReport check_power_law(const CharFunction& m, int max_p);

// --- character extraction ---

struct CharacterTestResult {
  bool is_character = false;
  GroupElement x0;                      // valid when is_character
  std::vector<int> witness_u, witness_v;  // first multiplicativity failure otherwise
  double max_violation = 0.0;
};

// Decides whether a unit-modulus table is multiplicative and, if so, finds
// the unique x0 with l(y) = (x0, y) for all y.
CharacterTestResult character_test(const CharFunction& l);

// --- exhaustive two-factor oracle ---

struct Lemma2Report {
  std::string y1, y2;
  int n = 0;
  int64_t total_candidates = 0;
  int64_t norm_equation_count = 0;       // candidates satisfying the norm identity
  int64_t hypothesis_count = 0;          // ... whose axis restrictions are characters
  int64_t confirmed_characters = 0;
  int64_t non_character_survivors = 0;
  std::vector<std::vector<int>> survivor_exponents;  // up to 8 samples

  bool all_confirmed() const { return non_character_survivors == 0; }
};

// Enumerates every map from Y1 x Y2 into the n-th roots of unity, filters by
// the norm identity plus character restrictions on both axes, and runs
// character_test on each survivor.
Lemma2Report lemma2_oracle(const FiniteAbelianGroup& y1, const FiniteAbelianGroup& y2, int n);

// Concatenation of cyclic factors (the ambient group for lemma2_oracle).
FiniteAbelianGroup product_group(const FiniteAbelianGroup& y1, const FiniteAbelianGroup& y2);

}  // namespace groupchar
