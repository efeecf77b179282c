#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "groupchar/errors.hpp"

namespace groupchar {

// The integer box [-M, M]^q indexing truncated Fourier tables on the q-torus.
// Flat indices run in lexicographic order of (m_1 + M, ..., m_q + M), first
// coordinate most significant.
struct IntBox {
  int q = 1;
  int M = 0;

  IntBox(int q_, int M_) : q(q_), M(M_) {
    if (q < 1 || M < 0) fail(ErrorKind::Structural, "box needs q >= 1 and M >= 0");
  }

  int side() const { return 2 * M + 1; }
  int64_t size() const {
    int64_t s = 1;
    for (int i = 0; i < q; ++i) s *= side();
    return s;
  }

  bool contains(std::span<const int> m) const {
    for (int c : m)
      if (c < -M || c > M) return false;
    return true;
  }

  int64_t index_of(std::span<const int> m) const {
    int64_t idx = 0;
    for (int j = 0; j < q; ++j) idx = idx * side() + (m[static_cast<size_t>(j)] + M);
    return idx;
  }

  std::vector<int> coords_of(int64_t index) const {
    std::vector<int> m(static_cast<size_t>(q));
    for (int j = q - 1; j >= 0; --j) {
      m[static_cast<size_t>(j)] = static_cast<int>(index % side()) - M;
      index /= side();
    }
    return m;
  }

  // Advances coords in lexicographic order; false once exhausted.
  bool next(std::vector<int>& m) const {
    for (int j = q - 1; j >= 0; --j) {
      if (m[static_cast<size_t>(j)] < M) {
        ++m[static_cast<size_t>(j)];
        return true;
      }
      m[static_cast<size_t>(j)] = -M;
    }
    return false;
  }

  std::vector<int> first() const { return std::vector<int>(static_cast<size_t>(q), -M); }

  bool operator==(const IntBox&) const = default;
};

}  // namespace groupchar
