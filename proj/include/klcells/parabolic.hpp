#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"

namespace klc {

// Subset I of the simple-root indices {1..n-1}. Maximal runs of consecutive
// indices give the Levi blocks: a run of length l contributes a block of
// size l+1 and uncovered positions contribute singleton blocks.
struct ParabolicSubset {
  int n = 0;
  std::vector<int> indices;  // sorted, distinct, within 1..n-1

  ParabolicSubset() = default;
  ParabolicSubset(int rank, std::vector<int> idx) : n(rank), indices(std::move(idx)) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int i : indices)
      if (i < 1 || i >= n) throw std::invalid_argument("ParabolicSubset: index out of range");
  }

  static ParabolicSubset from_mask(int rank, unsigned mask) {
    std::vector<int> idx;
    for (int i = 1; i < rank; ++i)
      if (mask & (1u << (i - 1))) idx.push_back(i);
    return ParabolicSubset(rank, std::move(idx));
  }

  // Composition (n_1, ..., n_r) of n.
  std::vector<int> blocks() const {
    std::vector<int> b;
    int pos = 1;
    std::size_t k = 0;
    while (pos <= n) {
      int sz = 1;
      while (k < indices.size() && indices[k] == pos + sz - 1) {
        ++sz;
        ++k;
      }
      b.push_back(sz);
      pos += sz;
    }
    return b;
  }

  bool operator==(const ParabolicSubset&) const = default;
};

// Longest element of W_I: each Levi block reversed in place.
inline Permutation parabolic_longest(const ParabolicSubset& I) {
  std::vector<int> w(I.n);
  int pos = 1;
  for (int b : I.blocks()) {
    for (int j = 0; j < b; ++j) w[pos - 1 + j] = pos + b - 1 - j;
    pos += b;
  }
  return Permutation(std::move(w));
}

inline std::string format_parabolic(const ParabolicSubset& I) {
  std::string s;
  for (std::size_t i = 0; i < I.indices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(I.indices[i]);
  }
  return s;
}

inline std::optional<ParabolicSubset> parse_parabolic(int n, std::string_view s) {
  std::vector<int> idx;
  if (!s.empty()) {
    for (auto part : split(s, ',')) {
      auto r = parse_rational(part);
      if (!r || r->denominator() != 1) return std::nullopt;
      idx.push_back(static_cast<int>(r->numerator()));
    }
  }
  try {
    return ParabolicSubset(n, std::move(idx));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace klc
