#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "model.hpp"

namespace klc {

// Integer polynomial in q, constant term first, no trailing zeros.
struct PolynomialQ {
  std::vector<long long> coeffs;

  static PolynomialQ zero() { return {}; }
  static PolynomialQ one() { return {{1}}; }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : 0;
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  // this += c * q^shift * p
  void add_scaled(const PolynomialQ& p, long long c, int shift) {
    if (c == 0 || p.is_zero()) return;
    if (coeffs.size() < p.coeffs.size() + shift) coeffs.resize(p.coeffs.size() + shift, 0);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) coeffs[i + shift] += c * p.coeffs[i];
    trim();
  }

  bool operator==(const PolynomialQ&) const = default;

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
      const long long c = coeffs[k];
      if (c == 0) continue;
      if (!s.empty()) s += (c > 0) ? "+" : "-";
      else if (c < 0) s += "-";
      const long long a = c > 0 ? c : -c;
      if (k == 0) s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a);
        s += "q";
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }
};

// Memoized table of KL polynomials P_{x,w} over a finite model, computed by
// the standard recurrence with left multiplication. mu(x,w) is read off the
// top permitted degree (l(w)-l(x)-1)/2.
class KLTable {
 public:
  explicit KLTable(const CoxeterModel& model) : model_(model), bruhat_(model) {}

  const CoxeterModel& model() const { return model_; }

  bool leq(std::size_t x, std::size_t w) { return bruhat_.leq(x, w); }

  const PolynomialQ& polynomial(std::size_t x, std::size_t w) {
    if (!leq(x, w)) throw std::domain_error("kl_polynomial: x not <= w in Bruhat order");
    return get(x, w);
  }

  long long mu(std::size_t x, std::size_t w) {
    if (x == w || !leq(x, w)) return 0;
    const int d = model_.length(w) - model_.length(x);
    if (d % 2 == 0) return 0;
    return get(x, w).coeff((d - 1) / 2);
  }

  // mu in either Bruhat orientation; 0 when incomparable.
  long long mu_sym(std::size_t x, std::size_t w) {
    if (leq(x, w)) return mu(x, w);
    if (leq(w, x)) return mu(w, x);
    return 0;
  }

  // Fill the table for every comparable pair.
  void compute_all() {
    std::vector<std::size_t> by_len(model_.size());
    for (std::size_t i = 0; i < by_len.size(); ++i) by_len[i] = i;
    std::sort(by_len.begin(), by_len.end(), [&](std::size_t a, std::size_t b) {
      return model_.length(a) < model_.length(b);
    });
    for (std::size_t w : by_len)
      for (std::size_t x = 0; x < model_.size(); ++x)
        if (leq(x, w)) get(x, w);
  }

  std::size_t entries() const { return table_.size(); }

  // Versioned plain-text cache. Results must be identical with or without it.
  void save(std::ostream& os) const {
    os << "KLCACHE 1 " << model_.id() << "\n";
    std::map<std::pair<std::size_t, std::size_t>, const PolynomialQ*> sorted;
    for (const auto& [key, poly] : table_)
      sorted.emplace(std::make_pair(key / model_.size(), key % model_.size()), &poly);
    for (const auto& [xw, poly] : sorted) {
      os << model_.element_repr(xw.first) << ";" << model_.element_repr(xw.second) << ";";
      for (int k = 0; k <= poly->degree(); ++k) {
        if (k) os << ",";
        os << poly->coeffs[k];
      }
      os << "\n";
    }
  }

  // Returns the number of records loaded; throws on malformed or mismatched input.
  std::size_t load(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("kl cache: empty file");
    const std::string expect = "KLCACHE 1 " + model_.id();
    if (header != expect) throw std::runtime_error("kl cache: bad header '" + header + "'");
    std::string line;
    std::size_t count = 0;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      auto parts = split(line, ';');
      if (parts.size() != 3) throw std::runtime_error("kl cache: bad record '" + line + "'");
      auto x = model_.parse_element(parts[0]);
      auto w = model_.parse_element(parts[1]);
      if (!x || !w) throw std::runtime_error("kl cache: bad element in '" + line + "'");
      PolynomialQ p;
      for (auto c : split(parts[2], ',')) {
        auto r = parse_rational(c);
        if (!r || r->denominator() != 1) throw std::runtime_error("kl cache: bad coefficient");
        p.coeffs.push_back(r->numerator());
      }
      p.trim();
      table_[key_of(*x, *w)] = p;
      ++count;
    }
    return count;
  }

 private:
  std::uint64_t key_of(std::size_t x, std::size_t w) const {
    return static_cast<std::uint64_t>(x) * model_.size() + w;
  }

  const PolynomialQ& get(std::size_t x, std::size_t w) {
    static const PolynomialQ kZero = PolynomialQ::zero();
    static const PolynomialQ kOne = PolynomialQ::one();
    if (x == w) return kOne;
    if (!leq(x, w)) return kZero;
    const std::uint64_t key = key_of(x, w);
    if (auto it = table_.find(key); it != table_.end()) return it->second;

    int s = 0;
    const std::uint32_t ld = model_.left_descents(w);
    while (!(ld & (1u << s))) ++s;
    const std::size_t v = model_.left_mult(s, w);  // l(v) = l(w) - 1
    const std::size_t sx = model_.left_mult(s, x);

    PolynomialQ res;
    if (model_.length(sx) < model_.length(x)) {
      res = get(sx, v);
      res.add_scaled(get(x, v), 1, 1);
      for (std::size_t z = 0; z < model_.size(); ++z) {
        if (z == v || model_.length(model_.left_mult(s, z)) >= model_.length(z)) continue;
        if (!leq(x, z) || !leq(z, v)) continue;
        const long long m = mu(z, v);
        if (m == 0) continue;
        res.add_scaled(get(x, z), -m, (model_.length(w) - model_.length(z)) / 2);
      }
    } else {
      res = get(sx, w);
    }
    auto [it, inserted] = table_.emplace(key, std::move(res));
    (void)inserted;
    return it->second;
  }

  const CoxeterModel& model_;
  BruhatOrder bruhat_;
  std::unordered_map<std::uint64_t, PolynomialQ> table_;
};

enum class CellSide { Left, Right, TwoSided };

// Cells are the strongly connected components of the mu-edge preorder
// graph; edge x -> y when mu_sym(x,y) != 0 and the relevant descent set of
// x is not contained in that of y. Cell ids are assigned by smallest member
// in enumeration order.
struct CellPartition {
  CellSide side = CellSide::Right;
  std::vector<int> cell_of;                    // element index -> cell id
  std::vector<std::vector<std::size_t>> members;  // cell id -> sorted elements
  std::set<std::pair<int, int>> preorder;      // condensation edges between cells

  std::size_t num_cells() const { return members.size(); }
  bool same_cell(std::size_t x, std::size_t y) const { return cell_of[x] == cell_of[y]; }
};

namespace detail {

inline std::vector<std::vector<std::size_t>> scc(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int next_index = 0;

  // Iterative Tarjan.
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      auto& f = frames.back();
      if (f.edge < adj[f.v].size()) {
        const std::size_t u = adj[f.v][f.edge++];
        if (index[u] == -1) {
          index[u] = low[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = true;
          frames.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], index[u]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<std::size_t> comp;
          for (;;) {
            const std::size_t u = stack.back();
            stack.pop_back();
            on_stack[u] = false;
            comp.push_back(u);
            if (u == f.v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        const std::size_t v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          const std::size_t p = frames.back().v;
          low[p] = std::min(low[p], low[v]);
        }
      }
    }
  }
  return comps;
}

}  // namespace detail

inline CellPartition cells(KLTable& table, CellSide side) {
  const CoxeterModel& model = table.model();
  const std::size_t n = model.size();

  std::vector<std::uint32_t> lmask(n), rmask(n);
  for (std::size_t w = 0; w < n; ++w) {
    lmask[w] = model.left_descents(w);
    rmask[w] = model.right_descents(w);
  }

  std::vector<std::vector<std::size_t>> adj(n);
  auto add_edges = [&](std::size_t x, std::size_t y, const std::vector<std::uint32_t>& mask) {
    if (mask[x] & ~mask[y]) adj[x].push_back(y);
    if (mask[y] & ~mask[x]) adj[y].push_back(x);
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (table.mu_sym(x, y) == 0) continue;
      if (side == CellSide::Left || side == CellSide::TwoSided) add_edges(x, y, lmask);
      if (side == CellSide::Right || side == CellSide::TwoSided) add_edges(x, y, rmask);
    }

  auto comps = detail::scc(adj);
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  CellPartition part;
  part.side = side;
  part.cell_of.assign(n, -1);
  part.members = std::move(comps);
  for (std::size_t c = 0; c < part.members.size(); ++c)
    for (std::size_t w : part.members[c]) part.cell_of[w] = static_cast<int>(c);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y : adj[x])
      if (part.cell_of[x] != part.cell_of[y])
        part.preorder.emplace(part.cell_of[x], part.cell_of[y]);
  return part;
}

}  // namespace klc
