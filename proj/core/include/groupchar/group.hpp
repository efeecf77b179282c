#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace groupchar {

using cplx = std::complex<double>;

// An element is a tuple of residues, one per cyclic factor, always reduced.
struct GroupElement {
  std::vector<int> coords;

  auto operator<=>(const GroupElement&) const = default;
  std::string to_string() const;
};

// Product of cyclic groups Z_{n_1} x ... x Z_{n_k}. The same value serves as
// the group and (self-dually) its character group. Elements are addressed
// either as coordinate tuples or as flat indices in lexicographic order
// (first coordinate most significant). Immutable after construction.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> orders);

  // Parses "Z4xZ2xZ3" (case-insensitive, 'x'-separated, optional Z prefixes).
  static FiniteAbelianGroup parse(std::string_view spec);

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  int64_t order() const { return order_; }
  std::string name() const;

  bool operator==(const FiniteAbelianGroup& other) const { return orders_ == other.orders_; }

  // --- flat-index arithmetic (hot paths) ---
  int64_t add_i(int64_t a, int64_t b) const;
  int64_t sub_i(int64_t a, int64_t b) const;
  int64_t neg_i(int64_t a) const;
  int64_t smul_i(long long p, int64_t a) const;

  // --- coordinate layer ---
  int64_t index_of(const GroupElement& e) const;       // validates shape and range
  GroupElement element(int64_t index) const;
  GroupElement make_element(std::span<const long long> raw) const;  // reduces mod orders

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scalar_mul(long long p, const GroupElement& a) const;
  GroupElement zero() const;

  // --- duality pairing (x, y) = exp(2*pi*i * sum x_j y_j / n_j) ---
  cplx pairing(const GroupElement& x, const GroupElement& y) const;
  cplx pairing_i(int64_t x, int64_t y) const;
  // Exact exponent t in [0, L) with pairing = exp(2*pi*i*t/L), L = lcm(orders).
  int64_t pairing_exponent_i(int64_t x, int64_t y) const;
  int64_t pairing_order() const { return lcm_; }
  cplx root_of_unity(int64_t t) const { return (*roots_)[static_cast<size_t>(t)]; }

 private:
  std::vector<int> orders_;
  std::vector<int64_t> strides_;
  int64_t order_ = 1;
  int64_t lcm_ = 1;
  std::vector<int64_t> lcm_weights_;                  // lcm / n_j
  std::shared_ptr<const std::vector<cplx>> roots_;    // exp(2*pi*i*t/L), shared across copies
  std::shared_ptr<const std::vector<int>> coords_;    // flattened coords cache, order x rank

  const int* coords_at(int64_t index) const { return coords_->data() + index * rank(); }
};

// Explicit element set closed under the group operations.
class Subgroup {
 public:
  Subgroup(FiniteAbelianGroup parent, std::vector<int64_t> element_indices);

  const FiniteAbelianGroup& parent() const { return parent_; }
  int64_t size() const { return static_cast<int64_t>(indices_.size()); }
  const std::vector<int64_t>& indices() const { return indices_; }
  bool contains(int64_t index) const { return member_[static_cast<size_t>(index)] != 0; }
  std::vector<GroupElement> elements() const;

 private:
  FiniteAbelianGroup parent_;
  std::vector<int64_t> indices_;  // sorted
  std::vector<char> member_;
};

Subgroup trivial_subgroup(const FiniteAbelianGroup& g);
Subgroup full_subgroup(const FiniteAbelianGroup& g);

// Kernel and image of doubling: ({x : 2x = 0}, {2x : x in G}).
std::pair<Subgroup, Subgroup> torsion_subgroups(const FiniteAbelianGroup& g);

// {y : (h, y) = 1 for all h in H}, computed with exact integer arithmetic.
Subgroup annihilator(const FiniteAbelianGroup& g, const Subgroup& h);

// Partition of g into cosets of a subgroup. Representatives are the
// lexicographically least member of each coset; the zero coset comes first.
class CosetDecomposition {
 public:
  CosetDecomposition(Subgroup subgroup, std::vector<int64_t> representatives,
                     std::vector<int32_t> coset_of)
      : subgroup_(std::move(subgroup)),
        representatives_(std::move(representatives)),
        coset_of_(std::move(coset_of)) {}

  const Subgroup& subgroup() const { return subgroup_; }
  int64_t count() const { return static_cast<int64_t>(representatives_.size()); }
  const std::vector<int64_t>& representatives() const { return representatives_; }
  int64_t representative(int64_t coset) const { return representatives_[static_cast<size_t>(coset)]; }
  int32_t coset_of(int64_t element_index) const { return coset_of_[static_cast<size_t>(element_index)]; }

 private:
  Subgroup subgroup_;
  std::vector<int64_t> representatives_;
  std::vector<int32_t> coset_of_;
};

CosetDecomposition cosets_mod(const FiniteAbelianGroup& g, const Subgroup& h);

}  // namespace groupchar
