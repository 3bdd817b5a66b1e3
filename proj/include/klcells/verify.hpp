#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gk.hpp"
#include "kl.hpp"
#include "model.hpp"
#include "tableau.hpp"
#include "varieties.hpp"

namespace klc {

struct VerifyReport {
  std::string target;
  std::string range;
  long long checked = 0;
  std::vector<std::string> failures;
  double elapsed_seconds = 0;

  bool ok() const { return failures.empty(); }
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline long long count_standard_tableaux(const Partition& shape) {
  // Hook length formula.
  long long n = 0;
  for (int p : shape) n += p;
  const Partition dual = dual_partition(shape);
  long long numer = 1;
  for (long long k = 2; k <= n; ++k) numer *= k;
  long long hooks = 1;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j)
      hooks *= (shape[i] - j) + (dual[j] - static_cast<int>(i)) - 1;
  return numer / hooks;
}

}  // namespace detail

// Partition of S_n into insertion-tableau fibers: right side groups by T(w),
// left by T(w^{-1}), two-sided by shape.
inline CellPartition rs_cells(const SymmetricGroupModel& model, CellSide side) {
  std::map<std::string, std::vector<std::size_t>> fibers;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const Permutation& w = model.element(i);
    std::string key;
    switch (side) {
      case CellSide::Right: key = format_tableau(tableau_of_permutation(w)); break;
      case CellSide::Left: key = format_tableau(tableau_of_permutation(w.inverse())); break;
      case CellSide::TwoSided: key = format_partition(shape(tableau_of_permutation(w))); break;
    }
    fibers[key].push_back(i);
  }
  std::vector<std::vector<std::size_t>> members;
  for (auto& [key, elems] : fibers) members.push_back(std::move(elems));
  std::sort(members.begin(), members.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  CellPartition part;
  part.side = side;
  part.cell_of.assign(model.size(), -1);
  part.members = std::move(members);
  for (std::size_t c = 0; c < part.members.size(); ++c)
    for (std::size_t w : part.members[c]) part.cell_of[w] = static_cast<int>(c);
  return part;
}

inline bool same_partition(const CellPartition& a, const CellPartition& b) {
  if (a.cell_of.size() != b.cell_of.size()) return false;
  if (a.num_cells() != b.num_cells()) return false;
  // Canonical ids are both keyed by smallest member, so the maps must agree.
  return a.cell_of == b.cell_of;
}

// KL right cells of S_n equal the insertion-tableau fibers.
inline VerifyReport verify_engine(int n) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.target = "engine";
  rep.range = "n=" + std::to_string(n);
  SymmetricGroupModel model(n);
  KLTable table(model);
  table.compute_all();
  const CellPartition kl = cells(table, CellSide::Right);
  const CellPartition rs = rs_cells(model, CellSide::Right);
  rep.checked = static_cast<long long>(model.size());
  if (!same_partition(kl, rs)) {
    std::ostringstream os;
    os << "S" << n << ": KL right cells (" << kl.num_cells() << ") differ from RS fibers ("
       << rs.num_cells() << ")";
    rep.failures.push_back(os.str());
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

// Right-cell equality coincides with equality of orbital-variety labels, and
// within each two-sided cell the right cells are counted by the standard
// tableaux of the shape.
inline VerifyReport verify_thm1(int n) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.target = "thm1";
  rep.range = "n=" + std::to_string(n);
  SymmetricGroupModel model(n);
  KLTable table(model);
  table.compute_all();
  const CellPartition right = cells(table, CellSide::Right);
  const CellPartition two = cells(table, CellSide::TwoSided);

  std::vector<std::string> labels(model.size());
  for (std::size_t i = 0; i < model.size(); ++i)
    labels[i] = orbital_variety_label(model.element(i)).str();
  for (std::size_t x = 0; x < model.size(); ++x)
    for (std::size_t y = x + 1; y < model.size(); ++y) {
      ++rep.checked;
      if ((labels[x] == labels[y]) != right.same_cell(x, y)) {
        rep.failures.push_back("label/right-cell mismatch at " + model.element_repr(x) + ", " +
                               model.element_repr(y));
      }
    }

  for (const auto& cell : two.members) {
    std::set<int> right_ids;
    for (std::size_t w : cell) right_ids.insert(right.cell_of[w]);
    const Partition sh = shape(tableau_of_permutation(model.element(cell.front())));
    const long long expect = detail::count_standard_tableaux(sh);
    if (static_cast<long long>(right_ids.size()) != expect) {
      rep.failures.push_back("two-sided cell of shape " + format_partition(sh) + " has " +
                             std::to_string(right_ids.size()) + " right cells, expected " +
                             std::to_string(expect));
    }
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

// Exhaustive tableau side of the minimal-GKdim theorem.
inline VerifyReport verify_thm2_perm(int n) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.target = "thm2";
  rep.range = "n=" + std::to_string(n);

  std::vector<YoungTableau> hat_tableaux;
  for (int k = 2; k <= n; ++k) {
    const Permutation w = hat_word(n, k);
    hat_tableaux.push_back(tableau_of_permutation(w));
    const VarietyLabel lab = orbital_variety_label(w);
    if (lab.kind != VarietyLabel::Kind::SimpleRootClosure || lab.p != k - 1)
      rep.failures.push_back("hat_word(" + std::to_string(n) + "," + std::to_string(k) +
                             ") labeled " + lab.str() + ", expected Balpha(" +
                             std::to_string(k - 1) + ")");
  }

  long long minimal_count = 0;
  for (const Permutation& w : detail::all_permutations(n)) {
    ++rep.checked;
    const bool minimal = gkdim_of_w(w) == n - 1;
    const YoungTableau T = tableau_of_permutation(w);
    int matches = 0;
    for (const auto& H : hat_tableaux)
      if (H == T) ++matches;
    if (minimal) ++minimal_count;
    if (minimal != (matches == 1) || matches > 1) {
      rep.failures.push_back("minimality/fiber mismatch at " + format_permutation(w));
    }
  }
  const long long expect = static_cast<long long>(n - 1) * (n - 1);
  if (minimal_count != expect)
    rep.failures.push_back("minimal-GKdim count " + std::to_string(minimal_count) +
                           ", expected " + std::to_string(expect));
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

namespace detail {

inline WeightVector random_integral_weight(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mode(0, 9);
  std::uniform_int_distribution<int> coord(-2, n + 2);
  std::uniform_int_distribution<int> gap(1, 3);
  std::uniform_int_distribution<int> half(0, 1);
  WeightVector t;
  if (mode(rng) < 6) {
    for (int i = 0; i < n; ++i) t.emplace_back(static_cast<long long>(coord(rng)));
  } else {
    // An ordered sequence of length n-1 with one extra coordinate spliced in.
    std::vector<long long> dec;
    long long v = coord(rng) + n;
    for (int i = 0; i < n - 1; ++i) {
      dec.push_back(v);
      v -= gap(rng);
    }
    std::uniform_int_distribution<int> pos(0, n - 1);
    const int at = pos(rng);
    for (int i = 0, j = 0; i < n; ++i) {
      if (i == at) t.emplace_back(static_cast<long long>(coord(rng)));
      else t.emplace_back(dec[j++]);
    }
  }
  if (half(rng)) {
    for (auto& x : t) x += Rat(1, 2);
  }
  return t;
}

}  // namespace detail

// Sampled weight side: the four characterizations of GKdim = n-1 agree, and
// the dominance-route p matches the tableau-route k-1 when unique.
inline VerifyReport verify_thm2_weight(int n, int samples, std::uint64_t seed) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.target = "thm2-weight";
  rep.range = "n=" + std::to_string(n) + " samples=" + std::to_string(samples) +
              " seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ull);
  long long multi_witness = 0;
  for (int i = 0; i < samples; ++i) {
    const WeightVector t = detail::random_integral_weight(n, rng);
    ++rep.checked;
    const bool a = gkdim_weight(t).gkdim == n - 1;
    const bool b = is_minimal_gkdim(t);
    const bool c = corollary_pq_witness(t).has_value();
    const bool d = ordered_after_removal(t).has_value();
    if (a != b || a != c || a != d) {
      rep.failures.push_back("characterization mismatch at weight " + format_weight(t) + " (" +
                             std::to_string(a) + std::to_string(b) + std::to_string(c) +
                             std::to_string(d) + ")");
      continue;
    }
    if (a) {
      const int tableau_p = minimal_variety_of_weight(t).p;
      const auto all_p = corollary_pq_all(t);
      if (all_p.size() > 1) ++multi_witness;
      if (all_p.size() == 1 && all_p[0] != tableau_p)
        rep.failures.push_back("dominance p=" + std::to_string(all_p[0]) + " vs tableau p=" +
                               std::to_string(tableau_p) + " at weight " + format_weight(t));
      // The tableau route must land in the hat-word fiber for k = p+1.
      if (tableau_of_permutation(weight_to_permutation(t)) !=
          tableau_of_permutation(hat_word(n, tableau_p + 1)))
        rep.failures.push_back("weight " + format_weight(t) + " not in hat-word fiber k=" +
                               std::to_string(tableau_p + 1));
    }
  }
  if (multi_witness > 0)
    rep.range += " multi-witness=" + std::to_string(multi_witness);
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

// Richardson data for every composition of n; optionally checks the KL right
// cell of w_I against its tableau fiber.
inline VerifyReport verify_thm3(int n, bool with_kl) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.target = "thm3";
  rep.range = "n=" + std::to_string(n);

  std::unique_ptr<SymmetricGroupModel> model;
  std::unique_ptr<KLTable> table;
  CellPartition right;
  if (with_kl) {
    model = std::make_unique<SymmetricGroupModel>(n);
    table = std::make_unique<KLTable>(*model);
    table->compute_all();
    right = cells(*table, CellSide::Right);
  }

  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    ++rep.checked;
    const ParabolicSubset I = ParabolicSubset::from_mask(n, mask);
    const RichardsonData rd = richardson_data(I);
    Partition sorted = rd.blocks;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    const YoungTableau T = tableau_of_permutation(rd.w_I);
    if (shape(T) != dual_partition(sorted))
      rep.failures.push_back("shape mismatch for I=" + format_parabolic(I));
    if (gkdim_of_w(rd.w_I) != rd.dim_u)
      rep.failures.push_back("GKdim(w_I) != dim u_I for I=" + format_parabolic(I));
    if (orbit_dim(rd.orbit, n) != 2 * rd.dim_u)
      rep.failures.push_back("orbit dimension != 2 dim u_I for I=" + format_parabolic(I));
    if (with_kl) {
      const std::size_t wi = model->index_of(rd.w_I);
      for (std::size_t y = 0; y < model->size(); ++y) {
        const bool fiber = tableau_of_permutation(model->element(y)) == T;
        if (fiber != right.same_cell(wi, y)) {
          rep.failures.push_back("right cell of w_I mismatch for I=" + format_parabolic(I));
          break;
        }
      }
    }
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

// Steinberg-map coherence: dim O_w = 2 GKdim L_w, and (with KL) orbit fibers
// equal two-sided cells.
inline VerifyReport verify_steinberg(int n, bool with_kl) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.target = "steinberg";
  rep.range = "n=" + std::to_string(n);
  SymmetricGroupModel model(n);
  std::vector<std::string> orbit_of(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) {
    const Permutation& w = model.element(i);
    const NilpotentOrbitLabel o = steinberg_orbit(w);
    orbit_of[i] = format_orbit(o);
    ++rep.checked;
    if (orbit_dim(o, n) != 2 * gkdim_of_w(w))
      rep.failures.push_back("dimension mismatch at " + format_permutation(w));
  }
  if (with_kl) {
    KLTable table(model);
    table.compute_all();
    const CellPartition two = cells(table, CellSide::TwoSided);
    for (std::size_t x = 0; x < model.size(); ++x)
      for (std::size_t y = x + 1; y < model.size(); ++y)
        if ((orbit_of[x] == orbit_of[y]) != two.same_cell(x, y)) {
          rep.failures.push_back("orbit fiber / two-sided cell mismatch at " +
                                 model.element_repr(x) + ", " + model.element_repr(y));
        }
  }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

// Primitive-ideal corollary: annihilator equality is KL left-cell equality,
// and matches right-cell equality of the inverses.
inline VerifyReport verify_sec3(int n) {
  detail::Stopwatch timer;
  VerifyReport rep;
  rep.target = "sec3";
  rep.range = "n=" + std::to_string(n);
  SymmetricGroupModel model(n);
  KLTable table(model);
  table.compute_all();
  const CellPartition left = cells(table, CellSide::Left);
  const CellPartition right = cells(table, CellSide::Right);
  for (std::size_t x = 0; x < model.size(); ++x)
    for (std::size_t y = x + 1; y < model.size(); ++y) {
      ++rep.checked;
      const bool ann = annihilators_equal(model.element(x), model.element(y));
      if (ann != left.same_cell(x, y))
        rep.failures.push_back("annihilator/left-cell mismatch at " + model.element_repr(x) +
                               ", " + model.element_repr(y));
      if (ann != right.same_cell(model.inverse(x), model.inverse(y)))
        rep.failures.push_back("annihilator/inverse-right-cell mismatch at " +
                               model.element_repr(x) + ", " + model.element_repr(y));
    }
  rep.elapsed_seconds = timer.seconds();
  return rep;
}

}  // namespace klc
