#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "rational.hpp"
#include "weight.hpp"

namespace klc {

// Rows weakly increase left to right, columns strictly increase top to
// bottom, row lengths weakly decrease.
struct YoungTableau {
  std::vector<std::vector<Rat>> rows;

  bool operator==(const YoungTableau&) const = default;
  std::size_t box_count() const {
    std::size_t c = 0;
    for (const auto& r : rows) c += r.size();
    return c;
  }
};

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline bool is_valid_tableau(const YoungTableau& T) {
  for (std::size_t i = 0; i < T.rows.size(); ++i) {
    if (T.rows[i].empty()) return false;
    if (i > 0 && T.rows[i].size() > T.rows[i - 1].size()) return false;
    for (std::size_t j = 0; j + 1 < T.rows[i].size(); ++j)
      if (T.rows[i][j] > T.rows[i][j + 1]) return false;
    if (i > 0)
      for (std::size_t j = 0; j < T.rows[i].size(); ++j)
        if (T.rows[i - 1][j] >= T.rows[i][j]) return false;
  }
  return true;
}

// Bump x into row r (and below): replace the leftmost entry strictly bigger
// than x, or append. Returns (row, column) of the box that grew.
inline std::pair<int, int> tableau_insert(YoungTableau& T, Rat x) {
  std::size_t r = 0;
  for (;;) {
    if (r == T.rows.size()) T.rows.emplace_back();
    auto& row = T.rows[r];
    std::size_t j = 0;
    while (j < row.size() && row[j] <= x) ++j;
    if (j == row.size()) {
      row.push_back(x);
      return {static_cast<int>(r), static_cast<int>(j)};
    }
    std::swap(row[j], x);
    ++r;
  }
}

// Insertion tableau plus the recording tableau (box k holds k).
inline std::pair<YoungTableau, YoungTableau> insert_sequence(const std::vector<Rat>& seq) {
  YoungTableau T, rec;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    auto [r, c] = tableau_insert(T, seq[k]);
    if (r == static_cast<int>(rec.rows.size())) rec.rows.emplace_back();
    rec.rows[r].push_back(Rat(static_cast<long long>(k + 1)));
    (void)c;
  }
  return {T, rec};
}

inline YoungTableau tableau_of_weight(const WeightVector& t) {
  if (!is_integral(t)) throw std::invalid_argument("tableau_of_weight: weight not integral");
  return insert_sequence(t).first;
}

inline YoungTableau tableau_of_permutation(const Permutation& w) {
  std::vector<Rat> seq;
  seq.reserve(w.n());
  for (int i = 1; i <= w.n(); ++i) seq.emplace_back(static_cast<long long>(w(i)));
  return insert_sequence(seq).first;
}

inline Partition shape(const YoungTableau& T) {
  Partition p;
  for (const auto& r : T.rows) p.push_back(static_cast<int>(r.size()));
  return p;
}

inline std::vector<int> column_lengths(const YoungTableau& T) {
  std::vector<int> c;
  if (T.rows.empty()) return c;
  c.assign(T.rows[0].size(), 0);
  for (const auto& r : T.rows)
    for (std::size_t j = 0; j < r.size(); ++j) ++c[j];
  return c;
}

// sum_i c_i (c_i - 1) / 2 over column lengths.
inline long long a_value(const YoungTableau& T) {
  long long a = 0;
  for (int c : column_lengths(T)) a += static_cast<long long>(c) * (c - 1) / 2;
  return a;
}

// Position i receives the rank of t_i in the sorted multiset; ties get
// smaller ranks at earlier positions.
inline Permutation rank_word(const WeightVector& t) {
  if (!is_integral(t)) throw std::invalid_argument("rank_word: weight not integral");
  const int n = static_cast<int>(t.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return t[a] < t[b]; });
  std::vector<int> w(n);
  for (int r = 0; r < n; ++r) w[order[r]] = r + 1;
  return Permutation(std::move(w));
}

// w_lambda = inverse of the rank word.
inline Permutation weight_to_permutation(const WeightVector& t) {
  return rank_word(t).inverse();
}

// Entries are exactly 1..n with rows/columns increasing (rows strictly,
// since entries are distinct).
inline bool is_standard(const YoungTableau& T, int n) {
  if (!is_valid_tableau(T) || T.box_count() != static_cast<std::size_t>(n)) return false;
  std::vector<bool> seen(n, false);
  for (const auto& r : T.rows)
    for (const auto& x : r) {
      if (x.denominator() != 1) return false;
      const long long v = x.numerator();
      if (v < 1 || v > n || seen[v - 1]) return false;
      seen[v - 1] = true;
    }
  return true;
}

inline std::string format_tableau(const YoungTableau& T) {
  std::string s = "[";
  for (std::size_t i = 0; i < T.rows.size(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < T.rows[i].size(); ++j) {
      if (j) s += ',';
      s += to_string(T.rows[i][j]);
    }
    s += ']';
  }
  s += ']';
  return s;
}

inline std::string format_partition(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace klc
