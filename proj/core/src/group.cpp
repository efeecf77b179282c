#include "groupchar/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "groupchar/errors.hpp"

namespace groupchar {

namespace {
constexpr int64_t kMaxOrder = 1'000'000;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Structural: return "Structural";
    case ErrorKind::Config: return "Config";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::VanishingCharFunction: return "VanishingCharFunction";
    case ErrorKind::NotASignedMeasure: return "NotASignedMeasure";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::ConditionUndefined: return "ConditionUndefined";
    case ErrorKind::DegenerateConditional: return "DegenerateConditional";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ',';
    out << coords[i];
  }
  out << ')';
  return out.str();
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) fail(ErrorKind::Structural, "group needs at least one cyclic factor");
  for (int n : orders_) {
    if (n < 1) fail(ErrorKind::Structural, "cyclic order must be >= 1");
    if (order_ > kMaxOrder / n) fail(ErrorKind::Structural, "group order exceeds supported size");
    order_ *= n;
  }
  strides_.assign(orders_.size(), 1);
  for (int i = static_cast<int>(orders_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * orders_[i + 1];

  lcm_ = 1;
  for (int n : orders_) lcm_ = std::lcm(lcm_, static_cast<int64_t>(n));
  lcm_weights_.reserve(orders_.size());
  for (int n : orders_) lcm_weights_.push_back(lcm_ / n);

  auto roots = std::make_shared<std::vector<cplx>>(static_cast<size_t>(lcm_));
  for (int64_t t = 0; t < lcm_; ++t) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(lcm_);
    (*roots)[static_cast<size_t>(t)] = std::polar(1.0, angle);
  }
  roots_ = std::move(roots);

  auto coords = std::make_shared<std::vector<int>>(static_cast<size_t>(order_) * orders_.size());
  for (int64_t idx = 0; idx < order_; ++idx) {
    int64_t rest = idx;
    for (size_t j = 0; j < orders_.size(); ++j) {
      (*coords)[idx * orders_.size() + j] = static_cast<int>(rest / strides_[j]);
      rest %= strides_[j];
    }
  }
  coords_ = std::move(coords);
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view spec) {
  std::vector<int> orders;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t sep = spec.find_first_of("xX", pos);
    std::string_view token = spec.substr(pos, sep == std::string_view::npos ? sep : sep - pos);
    if (!token.empty() && (token.front() == 'Z' || token.front() == 'z')) token.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 1)
      fail(ErrorKind::Config, "invalid group spec: '" + std::string(spec) + "'");
    orders.push_back(value);
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  return FiniteAbelianGroup(std::move(orders));
}

std::string FiniteAbelianGroup::name() const {
  std::ostringstream out;
  for (size_t i = 0; i < orders_.size(); ++i) {
    if (i) out << 'x';
    out << 'Z' << orders_[i];
  }
  return out.str();
}

int64_t FiniteAbelianGroup::add_i(int64_t a, int64_t b) const {
  const int* ca = coords_at(a);
  const int* cb = coords_at(b);
  int64_t out = 0;
  for (int j = 0; j < rank(); ++j) {
    int s = ca[j] + cb[j];
    if (s >= orders_[j]) s -= orders_[j];
    out += static_cast<int64_t>(s) * strides_[j];
  }
  return out;
}

int64_t FiniteAbelianGroup::sub_i(int64_t a, int64_t b) const {
  const int* ca = coords_at(a);
  const int* cb = coords_at(b);
  int64_t out = 0;
  for (int j = 0; j < rank(); ++j) {
    int s = ca[j] - cb[j];
    if (s < 0) s += orders_[j];
    out += static_cast<int64_t>(s) * strides_[j];
  }
  return out;
}

int64_t FiniteAbelianGroup::neg_i(int64_t a) const {
  const int* ca = coords_at(a);
  int64_t out = 0;
  for (int j = 0; j < rank(); ++j) {
    int s = ca[j] == 0 ? 0 : orders_[j] - ca[j];
    out += static_cast<int64_t>(s) * strides_[j];
  }
  return out;
}

int64_t FiniteAbelianGroup::smul_i(long long p, int64_t a) const {
  const int* ca = coords_at(a);
  int64_t out = 0;
  for (int j = 0; j < rank(); ++j) {
    long long s = (p % orders_[j]) * ca[j] % orders_[j];
    if (s < 0) s += orders_[j];
    out += static_cast<int64_t>(s) * strides_[j];
  }
  return out;
}

int64_t FiniteAbelianGroup::index_of(const GroupElement& e) const {
  if (static_cast<int>(e.coords.size()) != rank())
    fail(ErrorKind::Structural, "element rank does not match group " + name());
  int64_t out = 0;
  for (int j = 0; j < rank(); ++j) {
    if (e.coords[j] < 0 || e.coords[j] >= orders_[j])
      fail(ErrorKind::Structural, "element coordinate out of range for " + name());
    out += static_cast<int64_t>(e.coords[j]) * strides_[j];
  }
  return out;
}

GroupElement FiniteAbelianGroup::element(int64_t index) const {
  if (index < 0 || index >= order_) fail(ErrorKind::Structural, "element index out of range");
  const int* c = coords_at(index);
  return GroupElement{std::vector<int>(c, c + rank())};
}

GroupElement FiniteAbelianGroup::make_element(std::span<const long long> raw) const {
  if (static_cast<int>(raw.size()) != rank())
    fail(ErrorKind::Structural, "element rank does not match group " + name());
  GroupElement e;
  e.coords.resize(raw.size());
  for (int j = 0; j < rank(); ++j) {
    long long r = raw[j] % orders_[j];
    if (r < 0) r += orders_[j];
    e.coords[j] = static_cast<int>(r);
  }
  return e;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  return element(add_i(index_of(a), index_of(b)));
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  return element(neg_i(index_of(a)));
}

GroupElement FiniteAbelianGroup::scalar_mul(long long p, const GroupElement& a) const {
  return element(smul_i(p, index_of(a)));
}

GroupElement FiniteAbelianGroup::zero() const {
  return GroupElement{std::vector<int>(orders_.size(), 0)};
}

int64_t FiniteAbelianGroup::pairing_exponent_i(int64_t x, int64_t y) const {
  const int* cx = coords_at(x);
  const int* cy = coords_at(y);
  int64_t t = 0;
  for (int j = 0; j < rank(); ++j) {
    t += static_cast<int64_t>(cx[j]) * cy[j] % lcm_ * lcm_weights_[j] % lcm_;
    t %= lcm_;
  }
  return t;
}

cplx FiniteAbelianGroup::pairing_i(int64_t x, int64_t y) const {
  return (*roots_)[static_cast<size_t>(pairing_exponent_i(x, y))];
}

cplx FiniteAbelianGroup::pairing(const GroupElement& x, const GroupElement& y) const {
  return pairing_i(index_of(x), index_of(y));
}

Subgroup::Subgroup(FiniteAbelianGroup parent, std::vector<int64_t> element_indices)
    : parent_(std::move(parent)), indices_(std::move(element_indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  member_.assign(static_cast<size_t>(parent_.order()), 0);
  for (int64_t idx : indices_) {
    if (idx < 0 || idx >= parent_.order())
      fail(ErrorKind::Structural, "subgroup element out of range");
    member_[static_cast<size_t>(idx)] = 1;
  }
  if (indices_.empty() || !member_[0])
    fail(ErrorKind::Structural, "subgroup must contain zero");
  for (int64_t a : indices_) {
    if (!member_[static_cast<size_t>(parent_.neg_i(a))])
      fail(ErrorKind::Structural, "subgroup not closed under negation");
    for (int64_t b : indices_)
      if (!member_[static_cast<size_t>(parent_.add_i(a, b))])
        fail(ErrorKind::Structural, "subgroup not closed under addition");
  }
}

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(indices_.size());
  for (int64_t idx : indices_) out.push_back(parent_.element(idx));
  return out;
}

Subgroup trivial_subgroup(const FiniteAbelianGroup& g) { return Subgroup(g, {0}); }

Subgroup full_subgroup(const FiniteAbelianGroup& g) {
  std::vector<int64_t> all(static_cast<size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

std::pair<Subgroup, Subgroup> torsion_subgroups(const FiniteAbelianGroup& g) {
  std::vector<int64_t> kernel;
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::vector<int64_t> image;
  for (int64_t x = 0; x < g.order(); ++x) {
    int64_t dbl = g.add_i(x, x);
    if (dbl == 0) kernel.push_back(x);
    if (!seen[static_cast<size_t>(dbl)]) {
      seen[static_cast<size_t>(dbl)] = 1;
      image.push_back(dbl);
    }
  }
  return {Subgroup(g, std::move(kernel)), Subgroup(g, std::move(image))};
}

Subgroup annihilator(const FiniteAbelianGroup& g, const Subgroup& h) {
  if (!(h.parent() == g)) fail(ErrorKind::Structural, "subgroup belongs to a different group");
  std::vector<int64_t> out;
  for (int64_t y = 0; y < g.order(); ++y) {
    bool kills_all = true;
    for (int64_t x : h.indices()) {
      if (g.pairing_exponent_i(x, y) != 0) {
        kills_all = false;
        break;
      }
    }
    if (kills_all) out.push_back(y);
  }
  return Subgroup(g, std::move(out));
}

CosetDecomposition cosets_mod(const FiniteAbelianGroup& g, const Subgroup& h) {
  if (!(h.parent() == g)) fail(ErrorKind::Structural, "subgroup belongs to a different group");
  std::vector<int32_t> coset_of(static_cast<size_t>(g.order()), -1);
  std::vector<int64_t> reps;
  for (int64_t x = 0; x < g.order(); ++x) {
    if (coset_of[static_cast<size_t>(x)] >= 0) continue;
    int32_t id = static_cast<int32_t>(reps.size());
    reps.push_back(x);
    for (int64_t s : h.indices()) coset_of[static_cast<size_t>(g.add_i(x, s))] = id;
  }
  return CosetDecomposition(h, std::move(reps), std::move(coset_of));
}

}  // namespace groupchar
