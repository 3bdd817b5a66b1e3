#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace klc {

// Element of S_n in one-line notation: w(i) is stored at position i (1-based).
// Composition is (u*w)(i) = u(w(i)); s_i acts on the left by swapping the
// values i, i+1 and on the right by swapping positions i, i+1.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
    const int n = static_cast<int>(word_.size());
    std::vector<bool> seen(n, false);
    for (int v : word_) {
      if (v < 1 || v > n || seen[v - 1])
        throw std::invalid_argument("Permutation: not a bijection of 1..n");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int n() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& one_line() const { return word_; }

  Permutation inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= n(); ++i) inv[word_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

inline Permutation compose(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> r(w.n());
  for (int i = 1; i <= w.n(); ++i) r[i - 1] = u(w(i));
  return Permutation(std::move(r));
}

inline int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

struct DescentSets {
  std::set<int> left;
  std::set<int> right;
};

inline DescentSets descent_sets(const Permutation& w) {
  DescentSets d;
  const Permutation inv = w.inverse();
  for (int i = 1; i < w.n(); ++i) {
    if (w(i) > w(i + 1)) d.right.insert(i);
    if (inv(i) > inv(i + 1)) d.left.insert(i);
  }
  return d;
}

// Left multiplication by s_i: swap the values i and i+1.
inline Permutation left_mult_gen(int i, const Permutation& w) {
  std::vector<int> r = w.one_line();
  for (int& v : r) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return Permutation(std::move(r));
}

inline Permutation right_mult_gen(const Permutation& w, int i) {
  std::vector<int> r = w.one_line();
  std::swap(r[i - 1], r[i]);
  return Permutation(std::move(r));
}

// Recursive descent rule: pick s with l(sw) < l(w); then u <= w iff
// su <= sw when l(su) < l(u), and u <= sw otherwise.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  if (u == w) return true;
  if (length(u) >= length(w)) return false;
  const Permutation winv = w.inverse();
  int s = 0;
  for (int i = 1; i < w.n(); ++i)
    if (winv(i) > winv(i + 1)) { s = i; break; }
  const Permutation sw = left_mult_gen(s, w);
  const Permutation su = left_mult_gen(s, u);
  if (length(su) < length(u)) return bruhat_leq(su, sw);
  return bruhat_leq(u, sw);
}

inline Permutation longest_element(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

// One-line (n, n-1, ..., k+1, k-1, ..., 1, k) for 2 <= k <= n.
inline Permutation hat_word(int n, int k) {
  if (k < 2 || k > n) throw std::invalid_argument("hat_word: k out of range");
  std::vector<int> w;
  w.reserve(n);
  for (int v = n; v >= 1; --v)
    if (v != k) w.push_back(v);
  w.push_back(k);
  return Permutation(std::move(w));
}

inline std::string format_permutation(const Permutation& w) {
  std::string s;
  for (int i = 1; i <= w.n(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(w(i));
  }
  return s;
}

inline std::optional<Permutation> parse_permutation(std::string_view s) {
  std::vector<int> w;
  for (auto part : split(s, ',')) {
    auto r = parse_rational(part);
    if (!r || r->denominator() != 1) return std::nullopt;
    w.push_back(static_cast<int>(r->numerator()));
  }
  try {
    return Permutation(std::move(w));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace klc
