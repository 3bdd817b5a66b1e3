#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gk.hpp"
#include "parabolic.hpp"
#include "tableau.hpp"
#include "weight.hpp"

namespace klc {

// Type-A nilpotent orbit, classified by its Jordan type.
struct NilpotentOrbitLabel {
  Partition jordan_type;
  bool operator==(const NilpotentOrbitLabel&) const = default;
};

inline Partition dual_partition(const Partition& p) {
  Partition d;
  if (p.empty()) return d;
  d.assign(p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++d[j];
  return d;
}

inline long long orbit_dim(const NilpotentOrbitLabel& o, int n) {
  long long total = 0, sumsq = 0;
  for (int part : o.jordan_type) total += part;
  if (total != n) throw std::invalid_argument("orbit_dim: partition does not sum to n");
  for (int part : dual_partition(o.jordan_type)) sumsq += static_cast<long long>(part) * part;
  return static_cast<long long>(n) * n - sumsq;
}

// Jordan type of the dense orbit of G(n cap w.n): in type A the row shape
// of the insertion tableau of w.
inline NilpotentOrbitLabel steinberg_orbit(const Permutation& w) {
  return {shape(tableau_of_permutation(w))};
}

// Label of the leading component of the associated variety. SimpleRootClosure
// names the minimal orbital variety closure of B.alpha_p, Nilradical the
// variety u_I of a proper parabolic, TableauLabel the generic type-A label.
struct VarietyLabel {
  enum class Kind { SimpleRootClosure, Nilradical, Tableau };
  Kind kind = Kind::Tableau;
  int p = 0;                // SimpleRootClosure
  ParabolicSubset I;        // Nilradical
  YoungTableau tableau;     // Tableau

  bool operator==(const VarietyLabel&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::SimpleRootClosure:
        return "Balpha(" + std::to_string(p) + ")";
      case Kind::Nilradical:
        return "nilradical(I=" + format_parabolic(I) + ")";
      case Kind::Tableau:
        return "tableau(" + format_tableau(tableau) + ")";
    }
    return "";
  }
};

namespace detail {
// For a standard tableau of column shape (n-1, 1): the merged position k of
// the single second-column entry s in the first column, t_{k-1} < s < t_k.
inline int merge_position(const YoungTableau& T) {
  const int n = static_cast<int>(T.box_count());
  const Rat s = T.rows[0][1];
  int k = n;
  for (int i = 1; i < static_cast<int>(T.rows.size()); ++i) {
    if (T.rows[i][0] > s) { k = i + 1; break; }
  }
  return k;
}
}  // namespace detail

struct RichardsonData {
  ParabolicSubset I;
  std::vector<int> blocks;
  long long dim_u = 0;
  Permutation w_I;
  NilpotentOrbitLabel orbit;
};

inline RichardsonData richardson_data(const ParabolicSubset& I) {
  RichardsonData r;
  r.I = I;
  r.blocks = I.blocks();
  long long sumsq = 0;
  for (int b : r.blocks) sumsq += static_cast<long long>(b) * b;
  r.dim_u = (static_cast<long long>(I.n) * I.n - sumsq) / 2;
  r.w_I = parabolic_longest(I);
  Partition sorted = r.blocks;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  r.orbit = {dual_partition(sorted)};
  return r;
}

inline VarietyLabel orbital_variety_label(const Permutation& w) {
  const int n = w.n();
  const YoungTableau T = tableau_of_permutation(w);
  const auto cols = column_lengths(T);

  // Minimal-orbit shape: one label per hat-word cell.
  if (cols.size() == 2 && cols[0] == n - 1 && cols[1] == 1) {
    VarietyLabel lab;
    lab.kind = VarietyLabel::Kind::SimpleRootClosure;
    lab.p = detail::merge_position(T) - 1;
    return lab;
  }

  // Richardson cells carry the nilradical label; the full subset I would
  // name the zero variety, which keeps its tableau label instead.
  for (unsigned mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
    const ParabolicSubset I = ParabolicSubset::from_mask(n, mask);
    if (tableau_of_permutation(parabolic_longest(I)) == T) {
      VarietyLabel lab;
      lab.kind = VarietyLabel::Kind::Nilradical;
      lab.I = I;
      return lab;
    }
  }

  VarietyLabel lab;
  lab.kind = VarietyLabel::Kind::Tableau;
  lab.tableau = T;
  return lab;
}

// Minimal-GKdim pipeline: w_lambda, its tableau, and the merged position of
// the second-column entry give p = k-1.
inline VarietyLabel minimal_variety_of_weight(const WeightVector& t) {
  if (!is_minimal_gkdim(t))
    throw std::invalid_argument("minimal_variety_of_weight: weight is not of minimal GK dimension");
  const YoungTableau T = tableau_of_permutation(weight_to_permutation(t));
  VarietyLabel lab;
  lab.kind = VarietyLabel::Kind::SimpleRootClosure;
  lab.p = detail::merge_position(T) - 1;
  return lab;
}

// Maximal-GKdim modules in the parabolic category of I: the label is the
// nilradical itself.
inline VarietyLabel max_gkdim_variety(const WeightVector& t, const ParabolicSubset& I) {
  if (!is_integral(t)) throw std::invalid_argument("max_gkdim_variety: weight not integral");
  if (static_cast<int>(t.size()) != I.n)
    throw std::invalid_argument("max_gkdim_variety: rank mismatch");
  int pos = 1;
  for (int b : I.blocks()) {
    if (!detail::strictly_decreasing_by_integers(t, pos, pos + b - 1))
      throw std::invalid_argument("max_gkdim_variety: weight not dominant-regular on a Levi block");
    pos += b;
  }
  const RichardsonData rd = richardson_data(I);
  if (gkdim_weight(t).gkdim != rd.dim_u)
    throw std::invalid_argument("max_gkdim_variety: GK dimension is not dim u_I");
  Partition sorted = rd.blocks;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  if (shape(tableau_of_permutation(weight_to_permutation(t))) != dual_partition(sorted))
    throw std::invalid_argument("max_gkdim_variety: tableau shape mismatch");
  VarietyLabel lab;
  lab.kind = VarietyLabel::Kind::Nilradical;
  lab.I = I;
  return lab;
}

// I_w = I_y iff w ~L y; in type A, equality of the insertion tableaux of
// the inverses.
inline bool annihilators_equal(const Permutation& w, const Permutation& y) {
  if (w.n() != y.n()) throw std::invalid_argument("annihilators_equal: rank mismatch");
  return tableau_of_permutation(w.inverse()) == tableau_of_permutation(y.inverse());
}

inline std::string format_orbit(const NilpotentOrbitLabel& o) { return format_partition(o.jordan_type); }

}  // namespace klc
