#include "groupchar/equation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <numbers>
#include <span>
#include <thread>

#include "groupchar/errors.hpp"
#include "groupchar/parallel.hpp"
#include "groupchar/rng.hpp"

namespace groupchar {

namespace {

constexpr double kExhaustiveBudget = 1e8;

// Running (max violation, lexicographically first witness tuple).
struct BestTuple {
  double violation = -1.0;
  std::vector<int64_t> tuple;

  void consider(double v, std::span<const int64_t> digits) {
    if (v > violation) {
      violation = v;
      tuple.assign(digits.begin(), digits.end());
    } else if (v == violation &&
               std::lexicographical_compare(digits.begin(), digits.end(), tuple.begin(),
                                            tuple.end())) {
      tuple.assign(digits.begin(), digits.end());
    }
  }
};

double space_size(int64_t base, int exponent) {
  return std::pow(static_cast<double>(base), exponent);
}

template <class Eval>
void scan_digit_range(int nd, int64_t radix, int64_t lo, int64_t hi, Eval&& eval,
                      BestTuple& best) {
  if (lo >= hi) return;
  std::vector<int64_t> d(static_cast<size_t>(nd), 0);
  d[0] = lo;
  for (;;) {
    best.consider(eval(std::span<const int64_t>(d)), d);
    int pos = nd - 1;
    for (;;) {
      ++d[static_cast<size_t>(pos)];
      const int64_t limit = pos == 0 ? hi : radix;
      if (d[static_cast<size_t>(pos)] < limit) break;
      if (pos == 0) return;
      d[static_cast<size_t>(pos)] = 0;
      --pos;
    }
  }
}

// Shared enumeration for the product/additive identities: nd free digits over
// the whole group, optional chunked threads, optional sampling.
template <class Eval, class WitnessOf>
EquationReport run_free_tuple_check(const FiniteAbelianGroup& g, int nd, std::string equation,
                                    int n_meta, CheckMode mode, Eval&& eval,
                                    WitnessOf&& witness_of) {
  const int64_t radix = g.order();
  EquationReport report;
  report.equation = std::move(equation);
  report.n = n_meta;

  BestTuple best;
  if (mode.kind == CheckMode::Kind::exhaustive) {
    const double total = space_size(radix, nd);
    if (total > kExhaustiveBudget)
      fail(ErrorKind::BudgetExceeded,
           "exhaustive tuple space of size " + std::to_string(total) +
               " exceeds budget; use sampled mode");
    report.tuples_checked = static_cast<int64_t>(total);
    const int threads = thread_budget();
    if (threads > 1 && total > 65536.0 && radix > 1) {
      std::vector<std::future<BestTuple>> parts;
      const int chunks = static_cast<int>(std::min<int64_t>(threads, radix));
      for (int c = 0; c < chunks; ++c) {
        const int64_t lo = radix * c / chunks;
        const int64_t hi = radix * (c + 1) / chunks;
        parts.push_back(std::async(std::launch::async, [&, lo, hi] {
          BestTuple local;
          scan_digit_range(nd, radix, lo, hi, eval, local);
          return local;
        }));
      }
      for (auto& part : parts) {
        BestTuple local = part.get();
        if (local.violation >= 0) best.consider(local.violation, local.tuple);
      }
    } else {
      scan_digit_range(nd, radix, 0, radix, eval, best);
    }
  } else {
    report.sampled = true;
    report.seed = mode.seed;
    report.tuples_checked = mode.count;
    Rng rng(mode.seed);
    std::vector<int64_t> d(static_cast<size_t>(nd));
    for (int64_t i = 0; i < mode.count; ++i) {
      for (auto& digit : d) digit = static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(radix)));
      best.consider(eval(std::span<const int64_t>(d)), d);
    }
  }

  report.max_violation = std::max(best.violation, 0.0);
  if (report.max_violation > report.tolerance && !best.tuple.empty())
    report.witness = witness_of(std::span<const int64_t>(best.tuple));
  return report;
}

std::vector<int64_t> whole_group(const FiniteAbelianGroup& g) {
  std::vector<int64_t> all(static_cast<size_t>(g.order()));
  for (int64_t i = 0; i < g.order(); ++i) all[static_cast<size_t>(i)] = i;
  return all;
}

EquationReport finish_report(EquationReport report, const BestTuple& best,
                             const FiniteAbelianGroup& g) {
  report.max_violation = std::max(best.violation, 0.0);
  if (report.max_violation > report.tolerance && !best.tuple.empty()) {
    for (int64_t idx : best.tuple) report.witness.push_back(g.element(idx).coords);
  }
  return report;
}

// Exhaustive scan over a product of explicit index domains. Values handed to
// the callback are element indices, not positions.
EquationReport enumerate_identity(const FiniteAbelianGroup& g,
                                  const std::vector<const std::vector<int64_t>*>& domains,
                                  std::string equation, int n_meta, CheckMode mode,
                                  const std::function<double(std::span<const int64_t>)>& violation_of) {
  EquationReport report;
  report.equation = std::move(equation);
  report.n = n_meta;
  const int nd = static_cast<int>(domains.size());

  BestTuple best;
  std::vector<int64_t> vals(static_cast<size_t>(nd), 0);
  if (mode.kind == CheckMode::Kind::exhaustive) {
    double total = 1;
    for (const auto* dom : domains) total *= static_cast<double>(dom->size());
    if (total > kExhaustiveBudget)
      fail(ErrorKind::BudgetExceeded,
           "exhaustive tuple space of size " + std::to_string(total) +
               " exceeds budget; use sampled mode");
    report.tuples_checked = static_cast<int64_t>(total);
    if (total > 0) {
      std::vector<size_t> pos(static_cast<size_t>(nd), 0);
      for (int k = 0; k < nd; ++k) vals[static_cast<size_t>(k)] = (*domains[static_cast<size_t>(k)])[0];
      bool done = false;
      while (!done) {
        best.consider(violation_of(std::span<const int64_t>(vals)), vals);
        int k = nd - 1;
        for (;;) {
          if (k < 0) {
            done = true;
            break;
          }
          if (++pos[static_cast<size_t>(k)] < domains[static_cast<size_t>(k)]->size()) {
            vals[static_cast<size_t>(k)] = (*domains[static_cast<size_t>(k)])[pos[static_cast<size_t>(k)]];
            break;
          }
          pos[static_cast<size_t>(k)] = 0;
          vals[static_cast<size_t>(k)] = (*domains[static_cast<size_t>(k)])[0];
          --k;
        }
      }
    }
  } else {
    report.sampled = true;
    report.seed = mode.seed;
    report.tuples_checked = mode.count;
    Rng rng(mode.seed);
    for (int64_t i = 0; i < mode.count; ++i) {
      for (int k = 0; k < nd; ++k) {
        const auto& dom = *domains[static_cast<size_t>(k)];
        vals[static_cast<size_t>(k)] = dom[rng.next_below(dom.size())];
      }
      best.consider(violation_of(std::span<const int64_t>(vals)), vals);
    }
  }
  return finish_report(std::move(report), best, g);
}

}  // namespace

int thread_budget() {
  const char* env = std::getenv("GROUPCHAR_THREADS");
  if (env == nullptr) return 1;
  int requested = std::atoi(env);
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  return std::clamp(requested, 1, hw);
}

// --- finite differences ---

namespace {

template <class T>
std::vector<T> diff_once(const FiniteAbelianGroup& g, const std::vector<T>& table, int64_t h) {
  std::vector<T> out(table.size());
  for (int64_t y = 0; y < g.order(); ++y)
    out[static_cast<size_t>(y)] = table[static_cast<size_t>(g.add_i(y, h))] - table[static_cast<size_t>(y)];
  return out;
}

template <class T, class F>
F finite_difference_impl(const F& input, const std::vector<GroupElement>& steps) {
  if (steps.empty()) fail(ErrorKind::Structural, "finite_difference needs at least one step");
  std::vector<T> table = input.values;
  for (const auto& step : steps) table = diff_once(input.group, table, input.group.index_of(step));
  return F(input.group, std::move(table));
}

}  // namespace

DualFunction finite_difference(const DualFunction& psi, const std::vector<GroupElement>& steps) {
  return finite_difference_impl<double>(psi, steps);
}

CharFunction finite_difference(const CharFunction& f, const std::vector<GroupElement>& steps) {
  return finite_difference_impl<cplx>(f, steps);
}

std::optional<int> polynomial_degree(const DualFunction& psi, int max_m) {
  if (max_m < 0) fail(ErrorKind::Structural, "max_m must be nonnegative");
  const auto& g = psi.group;
  const auto all_zero = [](const std::vector<double>& t) {
    for (double v : t)
      if (std::abs(v) > tol::equation) return false;
    return true;
  };
  int needed = 0;
  for (int64_t h = 0; h < g.order(); ++h) {
    std::vector<double> table = psi.values;
    int k = 0;
    while (!all_zero(table)) {
      if (k == max_m + 1) return std::nullopt;
      table = diff_once(g, table, h);
      ++k;
    }
    needed = std::max(needed, k);
  }
  return std::max(0, needed - 1);
}

// --- product / additive identities ---

EquationReport check_product_equation(const CharFunction& f, int n, CheckMode mode) {
  if (n < 2) fail(ErrorKind::Structural, "product identity needs n >= 2");
  const auto& g = f.group;
  const auto& vals = f.values;
  const int nd = n;  // y_1..y_{n-1} and y
  auto eval = [&](std::span<const int64_t> d) {
    const int64_t y = d[static_cast<size_t>(nd - 1)];
    int64_t s = 0;
    cplx lhs(1.0, 0.0), rhs(1.0, 0.0);
    for (int j = 0; j + 1 < nd; ++j) {
      const int64_t yj = d[static_cast<size_t>(j)];
      s = g.add_i(s, yj);
      lhs *= vals[static_cast<size_t>(g.add_i(yj, y))];
      rhs *= vals[static_cast<size_t>(g.sub_i(yj, y))];
    }
    const int64_t yn = g.neg_i(s);
    lhs *= vals[static_cast<size_t>(g.add_i(yn, y))];
    rhs *= vals[static_cast<size_t>(g.sub_i(yn, y))];
    return std::abs(lhs - rhs);
  };
  auto witness_of = [&](std::span<const int64_t> d) {
    std::vector<std::vector<int>> w;
    int64_t s = 0;
    for (int j = 0; j + 1 < nd; ++j) {
      s = g.add_i(s, d[static_cast<size_t>(j)]);
      w.push_back(g.element(d[static_cast<size_t>(j)]).coords);
    }
    w.push_back(g.element(g.neg_i(s)).coords);
    w.push_back(g.element(d[static_cast<size_t>(nd - 1)]).coords);
    return w;
  };
  return run_free_tuple_check(g, nd, "eq3", n, mode, eval, witness_of);
}

EquationReport check_additive_equation(const DualFunction& psi, int n, CheckMode mode) {
  if (n < 2) fail(ErrorKind::Structural, "additive identity needs n >= 2");
  const auto& g = psi.group;
  const auto& vals = psi.values;
  const int nd = n;
  auto eval = [&](std::span<const int64_t> d) {
    const int64_t y = d[static_cast<size_t>(nd - 1)];
    int64_t s = 0;
    double lhs = 0, rhs = 0;
    for (int j = 0; j + 1 < nd; ++j) {
      const int64_t yj = d[static_cast<size_t>(j)];
      s = g.add_i(s, yj);
      lhs += vals[static_cast<size_t>(g.add_i(yj, y))];
      rhs += vals[static_cast<size_t>(g.sub_i(yj, y))];
    }
    const int64_t yn = g.neg_i(s);
    lhs += vals[static_cast<size_t>(g.add_i(yn, y))];
    rhs += vals[static_cast<size_t>(g.sub_i(yn, y))];
    return std::abs(lhs - rhs);
  };
  auto witness_of = [&](std::span<const int64_t> d) {
    std::vector<std::vector<int>> w;
    int64_t s = 0;
    for (int j = 0; j + 1 < nd; ++j) {
      s = g.add_i(s, d[static_cast<size_t>(j)]);
      w.push_back(g.element(d[static_cast<size_t>(j)]).coords);
    }
    w.push_back(g.element(g.neg_i(s)).coords);
    w.push_back(g.element(d[static_cast<size_t>(nd - 1)]).coords);
    return w;
  };
  return run_free_tuple_check(g, nd, "eq5", n, mode, eval, witness_of);
}

// --- quadratic law and the associated form ---

EquationReport check_parallelogram(const DualFunction& phi, const Subgroup& domain) {
  if (!(domain.parent() == phi.group))
    fail(ErrorKind::Structural, "domain subgroup belongs to a different group");
  const auto& g = phi.group;
  const auto& vals = phi.values;
  auto violation = [&](std::span<const int64_t> t) {
    const int64_t u = t[0], v = t[1];
    return std::abs(vals[static_cast<size_t>(g.add_i(u, v))] + vals[static_cast<size_t>(g.sub_i(u, v))] -
                    2.0 * (vals[static_cast<size_t>(u)] + vals[static_cast<size_t>(v)]));
  };
  const auto& idx = domain.indices();
  return enumerate_identity(g, {&idx, &idx}, "eq1", 0, CheckMode::exhaustive(), violation);
}

EquationReport check_parallelogram(const DualFunction& phi) {
  return check_parallelogram(phi, full_subgroup(phi.group));
}

BiadditiveForm biadditive_from_quadratic(const DualFunction& phi) {
  if (std::abs(phi.values[0]) > tol::equation)
    fail(ErrorKind::Structural, "quadratic exponent must vanish at zero");
  const auto& g = phi.group;
  const int64_t n = g.order();
  std::vector<double> values(static_cast<size_t>(n * n));
  for (int64_t u = 0; u < n; ++u)
    for (int64_t v = 0; v < n; ++v)
      values[static_cast<size_t>(u * n + v)] =
          0.5 * (phi.values[static_cast<size_t>(g.add_i(u, v))] - phi.values[static_cast<size_t>(u)] -
                 phi.values[static_cast<size_t>(v)]);
  return BiadditiveForm{g, std::move(values)};
}

EquationReport check_biadditive(const BiadditiveForm& form) {
  const auto& g = form.group;
  auto violation = [&](std::span<const int64_t> t) {
    const int64_t u = t[0], u2 = t[1], v = t[2];
    return std::abs(form.at(g.add_i(u, u2), v) - form.at(u, v) - form.at(u2, v));
  };
  auto all = whole_group(g);
  return enumerate_identity(g, {&all, &all, &all}, "biadditive", 0, CheckMode::exhaustive(),
                            violation);
}

// --- mixed difference identities ---

EquationReport check_mixed_difference(const DualFunction& psi, int order,
                                      const Subgroup* restrict_k) {
  if (order != 2 && order != 3) fail(ErrorKind::Structural, "difference order must be 2 or 3");
  const auto& g = psi.group;
  const auto& vals = psi.values;
  auto doubled_diff = [&](int64_t y, int64_t two_h) {
    return vals[static_cast<size_t>(g.add_i(y, two_h))] - vals[static_cast<size_t>(y)];
  };
  auto violation = [&](std::span<const int64_t> t) {
    const int64_t k = t[0], h = t[1], y = t[2];
    const int64_t two_h = g.add_i(h, h);
    double acc = 0;
    int sign = (order % 2 == 0) ? 1 : -1;
    int64_t shift = y;
    long long binom = 1;
    for (int i = 0; i <= order; ++i) {
      acc += sign * static_cast<double>(binom) * doubled_diff(shift, two_h);
      shift = g.add_i(shift, k);
      sign = -sign;
      binom = binom * (order - i) / (i + 1);
    }
    return std::abs(acc);
  };
  auto all = whole_group(g);
  std::string id;
  std::vector<const std::vector<int64_t>*> domains;
  if (restrict_k != nullptr) {
    if (!(restrict_k->parent() == g))
      fail(ErrorKind::Structural, "restriction subgroup belongs to a different group");
    id = order == 2 ? "eq8" : "eq10r";
    domains = {&restrict_k->indices(), &all, &restrict_k->indices()};
  } else {
    id = order == 2 ? "eq11" : "eq10";
    domains = {&all, &all, &all};
  }
  return enumerate_identity(g, domains, std::move(id), 0, CheckMode::exhaustive(), violation);
}

EquationReport check_evenness(const DualFunction& psi) {
  const auto& g = psi.group;
  auto violation = [&](std::span<const int64_t> t) {
    return std::abs(psi.values[static_cast<size_t>(g.neg_i(t[0]))] - psi.values[static_cast<size_t>(t[0])]);
  };
  auto all = whole_group(g);
  return enumerate_identity(g, {&all}, "eq6", 0, CheckMode::exhaustive(), violation);
}

// --- unit-phase identities ---

namespace {

void require_unit_modulus(const CharFunction& m, const char* what) {
  for (const cplx& v : m.values)
    if (std::abs(std::abs(v) - 1.0) > tol::equation)
      fail(ErrorKind::Structural, std::string(what) + " requires a unit-modulus table");
}

cplx unit_power(const cplx& v, long long p) {
  return std::polar(1.0, static_cast<double>(p) * std::arg(v));
}

}  // namespace

EquationReport check_norm_equation(const CharFunction& m) {
  require_unit_modulus(m, "norm identity");
  const auto& g = m.group;
  const auto& vals = m.values;
  auto violation = [&](std::span<const int64_t> t) {
    const int64_t u = t[0], v = t[1];
    return std::abs(vals[static_cast<size_t>(g.add_i(u, v))] * vals[static_cast<size_t>(g.sub_i(u, v))] -
                    vals[static_cast<size_t>(u)] * vals[static_cast<size_t>(u)]);
  };
  auto all = whole_group(g);
  return enumerate_identity(g, {&all, &all}, "eq13", 0, CheckMode::exhaustive(), violation);
}

EquationReport check_power_law(const CharFunction& m, int max_p) {
  require_unit_modulus(m, "power law");
  if (max_p < 0) fail(ErrorKind::Structural, "max_p must be nonnegative");
  const auto& g = m.group;
  EquationReport report;
  report.equation = "eq14";
  BestTuple best;
  std::vector<int64_t> key(2);
  for (long long p = -max_p; p <= max_p; ++p) {
    for (int64_t y = 0; y < g.order(); ++y) {
      const double v =
          std::abs(m.values[static_cast<size_t>(g.smul_i(p, y))] - unit_power(m.values[static_cast<size_t>(y)], p));
      key[0] = p + max_p;  // keep the merge key lexicographic in p
      key[1] = y;
      best.consider(v, key);
      ++report.tuples_checked;
    }
  }
  report.max_violation = std::max(best.violation, 0.0);
  if (report.max_violation > report.tolerance && !best.tuple.empty()) {
    report.witness.push_back({static_cast<int>(best.tuple[0] - max_p)});
    report.witness.push_back(g.element(best.tuple[1]).coords);
  }
  return report;
}

CharacterTestResult character_test(const CharFunction& l) {
  require_unit_modulus(l, "character test");
  const auto& g = l.group;
  CharacterTestResult result;

  BestTuple best;
  std::vector<int64_t> pair(2);
  for (int64_t u = 0; u < g.order(); ++u) {
    for (int64_t v = 0; v < g.order(); ++v) {
      pair[0] = u;
      pair[1] = v;
      best.consider(std::abs(l.values[static_cast<size_t>(g.add_i(u, v))] -
                             l.values[static_cast<size_t>(u)] * l.values[static_cast<size_t>(v)]),
                    pair);
    }
  }
  result.max_violation = std::max(best.violation, 0.0);
  if (result.max_violation > tol::equation) {
    result.is_character = false;
    result.witness_u = g.element(best.tuple[0]).coords;
    result.witness_v = g.element(best.tuple[1]).coords;
    return result;
  }

  // Multiplicative: read x0 off the generators, then verify everywhere.
  GroupElement x0 = g.zero();
  for (int j = 0; j < g.rank(); ++j) {
    GroupElement gen = g.zero();
    gen.coords[static_cast<size_t>(j)] = g.orders()[static_cast<size_t>(j)] > 1 ? 1 : 0;
    const double angle = std::arg(l.values[static_cast<size_t>(g.index_of(gen))]);
    const double frac = angle / (2.0 * std::numbers::pi);
    long long k = std::llround(frac * g.orders()[static_cast<size_t>(j)]);
    k %= g.orders()[static_cast<size_t>(j)];
    if (k < 0) k += g.orders()[static_cast<size_t>(j)];
    x0.coords[static_cast<size_t>(j)] = static_cast<int>(k);
  }
  const int64_t x0_idx = g.index_of(x0);
  // Multiplicativity error can accumulate along generator chains.
  const double verify_tol = tol::equation + static_cast<double>(g.order()) * result.max_violation;
  for (int64_t y = 0; y < g.order(); ++y) {
    if (std::abs(l.values[static_cast<size_t>(y)] - g.pairing_i(x0_idx, y)) > verify_tol)
      fail(ErrorKind::InternalError,
           "multiplicative table does not match any pairing; duality is broken");
  }
  result.is_character = true;
  result.x0 = std::move(x0);
  return result;
}

// --- two-factor exhaustive oracle ---

FiniteAbelianGroup product_group(const FiniteAbelianGroup& y1, const FiniteAbelianGroup& y2) {
  std::vector<int> orders = y1.orders();
  orders.insert(orders.end(), y2.orders().begin(), y2.orders().end());
  return FiniteAbelianGroup(std::move(orders));
}

Lemma2Report lemma2_oracle(const FiniteAbelianGroup& y1, const FiniteAbelianGroup& y2, int n) {
  if (n < 1) fail(ErrorKind::Structural, "root order must be positive");
  const FiniteAbelianGroup y = product_group(y1, y2);
  const int64_t size = y.order();

  double candidates = std::pow(static_cast<double>(n), static_cast<double>(size));
  if (candidates > 1e7)
    fail(ErrorKind::BudgetExceeded, "candidate space " + std::to_string(candidates) +
                                        " exceeds the enumeration budget");

  Lemma2Report report;
  report.y1 = y1.name();
  report.y2 = y2.name();
  report.n = n;
  report.total_candidates = static_cast<int64_t>(candidates);

  // Axis embeddings (a, 0) and (0, b), ordered by the factor's own indices.
  std::vector<int64_t> axis1, axis2;
  for (int64_t a = 0; a < y1.order(); ++a) {
    GroupElement e = y.zero();
    auto ca = y1.element(a).coords;
    std::copy(ca.begin(), ca.end(), e.coords.begin());
    axis1.push_back(y.index_of(e));
  }
  for (int64_t b = 0; b < y2.order(); ++b) {
    GroupElement e = y.zero();
    auto cb = y2.element(b).coords;
    std::copy(cb.begin(), cb.end(), e.coords.begin() + y1.rank());
    axis2.push_back(y.index_of(e));
  }

  // Precomputed index tables keep the inner loops integer-only.
  std::vector<int64_t> add(static_cast<size_t>(size * size)), sub(static_cast<size_t>(size * size));
  for (int64_t u = 0; u < size; ++u)
    for (int64_t v = 0; v < size; ++v) {
      add[static_cast<size_t>(u * size + v)] = y.add_i(u, v);
      sub[static_cast<size_t>(u * size + v)] = y.sub_i(u, v);
    }

  std::vector<int> e(static_cast<size_t>(size), 0);
  std::vector<cplx> roots(static_cast<size_t>(n));
  for (int d = 0; d < n; ++d)
    roots[static_cast<size_t>(d)] = std::polar(1.0, 2.0 * std::numbers::pi * d / n);

  auto norm_identity_holds = [&] {
    for (int64_t u = 0; u < size; ++u)
      for (int64_t v = 0; v < size; ++v) {
        const int lhs = e[static_cast<size_t>(add[static_cast<size_t>(u * size + v)])] +
                        e[static_cast<size_t>(sub[static_cast<size_t>(u * size + v)])];
        if ((lhs - 2 * e[static_cast<size_t>(u)]) % n != 0) return false;
      }
    return true;
  };
  auto axis_additive = [&](const std::vector<int64_t>& axis) {
    for (int64_t a : axis)
      for (int64_t b : axis) {
        const int lhs = e[static_cast<size_t>(add[static_cast<size_t>(a * size + b)])];
        if ((lhs - e[static_cast<size_t>(a)] - e[static_cast<size_t>(b)]) % n != 0) return false;
      }
    return true;
  };

  for (;;) {
    const bool norm_ok = norm_identity_holds();
    if (norm_ok) {
      ++report.norm_equation_count;
      if (axis_additive(axis1) && axis_additive(axis2)) {
        ++report.hypothesis_count;
        std::vector<cplx> values(static_cast<size_t>(size));
        for (int64_t i = 0; i < size; ++i)
          values[static_cast<size_t>(i)] = roots[static_cast<size_t>(e[static_cast<size_t>(i)])];
        CharFunction m(y, std::move(values));
        if (character_test(m).is_character) {
          ++report.confirmed_characters;
        } else {
          ++report.non_character_survivors;
          if (report.survivor_exponents.size() < 8)
            report.survivor_exponents.push_back(e);
        }
      }
    }
    // next exponent vector
    int pos = static_cast<int>(size) - 1;
    while (pos >= 0 && ++e[static_cast<size_t>(pos)] == n) {
      e[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return report;
}

}  // namespace groupchar
