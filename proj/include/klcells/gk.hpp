#pragma once

#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tableau.hpp"
#include "weight.hpp"

namespace klc {

// GK dimension of L(lambda) with lambda+rho = t, via the column statistics
// of the insertion tableau: n(n-1)/2 - a = (n^2 - sum c_i^2)/2.
struct GKReport {
  WeightVector weight;
  std::vector<int> columns;
  long long a = 0;
  long long gkdim = 0;
};

inline GKReport gkdim_weight(const WeightVector& t) {
  if (!is_integral(t)) throw std::invalid_argument("gkdim_weight: weight not integral");
  const long long n = static_cast<long long>(t.size());
  const YoungTableau T = tableau_of_weight(t);
  GKReport rep;
  rep.weight = t;
  rep.columns = column_lengths(T);
  rep.a = a_value(T);
  rep.gkdim = n * (n - 1) / 2 - rep.a;
  long long sumsq = 0;
  for (int c : rep.columns) sumsq += static_cast<long long>(c) * c;
  assert(rep.gkdim == (n * n - sumsq) / 2);
  return rep;
}

inline long long gkdim_of_w(const Permutation& w) {
  const long long n = w.n();
  long long sumsq = 0;
  for (int c : column_lengths(tableau_of_permutation(w))) sumsq += static_cast<long long>(c) * c;
  return (n * n - sumsq) / 2;
}

// GKdim = n-1 exactly when the column lengths are (n-1, 1).
inline bool is_minimal_gkdim(const WeightVector& t) {
  if (!is_integral(t)) throw std::invalid_argument("is_minimal_gkdim: weight not integral");
  if (t.size() < 2) throw std::invalid_argument("is_minimal_gkdim: n >= 2 required");
  const auto c = column_lengths(tableau_of_weight(t));
  return c.size() == 2 && c[0] == static_cast<int>(t.size()) - 1 && c[1] == 1;
}

namespace detail {
inline bool strictly_decreasing_by_integers(const WeightVector& t, int lo, int hi) {
  // 1-based inclusive range
  for (int i = lo; i < hi; ++i) {
    const Rat d = t[i - 1] - t[i];
    if (d.denominator() != 1 || d.numerator() <= 0) return false;
  }
  return true;
}
}  // namespace detail

// All p in 1..n-1 such that (t_1..t_p) and (t_{p+1}..t_n) both strictly
// decrease by positive integers.
inline std::vector<int> pq_dominant_indices(const WeightVector& t) {
  if (!is_integral(t)) throw std::invalid_argument("pq_dominant_indices: weight not integral");
  const int n = static_cast<int>(t.size());
  std::vector<int> out;
  for (int p = 1; p <= n - 1; ++p)
    if (detail::strictly_decreasing_by_integers(t, 1, p) &&
        detail::strictly_decreasing_by_integers(t, p + 1, n))
      out.push_back(p);
  return out;
}

struct MinimalityWitness {
  int p = 0;
  std::optional<int> i1;
  std::string route;
};

namespace detail {
// The extra condition on a (p, n-p)-dominant weight: a smallest i1 <= p with
// t_{i1} <= t_{p+1}, and t_p > t_{p+2} when i1 != p (vacuous past the end).
inline std::optional<int> corollary_i1(const WeightVector& t, int p) {
  const int n = static_cast<int>(t.size());
  int i1 = 0;
  for (int i = 1; i <= p; ++i)
    if (t[i - 1] <= t[p]) { i1 = i; break; }
  if (i1 == 0) return std::nullopt;
  if (i1 != p && p + 2 <= n && !(t[p - 1] > t[p + 1])) return std::nullopt;
  return i1;
}
}  // namespace detail

// Smallest (p, n-p)-dominant split satisfying the i1 condition.
inline std::optional<MinimalityWitness> corollary_pq_witness(const WeightVector& t) {
  for (int p : pq_dominant_indices(t)) {
    if (auto i1 = detail::corollary_i1(t, p)) {
      MinimalityWitness w;
      w.p = p;
      w.i1 = *i1;
      w.route = "corollary-pq";
      return w;
    }
  }
  return std::nullopt;
}

// All p for which the Corollary condition holds, for uniqueness reporting.
inline std::vector<int> corollary_pq_all(const WeightVector& t) {
  std::vector<int> out;
  for (int p : pq_dominant_indices(t))
    if (detail::corollary_i1(t, p)) out.push_back(p);
  return out;
}

// Positions whose removal leaves an ordered sequence. Absent when t is
// already ordered or when no single removal works.
inline std::optional<std::set<int>> ordered_after_removal(const WeightVector& t) {
  if (!is_integral(t)) throw std::invalid_argument("ordered_after_removal: weight not integral");
  if (is_ordered(t)) return std::nullopt;
  std::set<int> positions;
  for (std::size_t i = 0; i < t.size(); ++i) {
    WeightVector u;
    u.reserve(t.size() - 1);
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) u.push_back(t[j]);
    if (is_ordered(u)) positions.insert(static_cast<int>(i) + 1);
  }
  if (positions.empty()) return std::nullopt;
  return positions;
}

}  // namespace klc
