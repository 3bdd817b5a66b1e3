#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dihedral.hpp"
#include "permutation.hpp"

namespace klc {

// Finite Coxeter group behind an index-based contract. Elements are indexed
// 0..size()-1 in a fixed enumeration; the KL engine and the Bruhat order
// work only through this interface.
class CoxeterModel {
 public:
  virtual ~CoxeterModel() = default;

  virtual int num_generators() const = 0;
  virtual std::size_t size() const = 0;
  virtual std::size_t identity() const = 0;
  virtual int length(std::size_t w) const = 0;
  virtual std::size_t left_mult(int s, std::size_t w) const = 0;   // s in 0..num_generators()-1
  virtual std::size_t right_mult(std::size_t w, int s) const = 0;
  virtual std::size_t inverse(std::size_t w) const = 0;
  virtual std::string element_repr(std::size_t w) const = 0;
  virtual std::optional<std::size_t> parse_element(std::string_view s) const = 0;
  virtual std::string id() const = 0;

  // Descent sets as generator bitmasks.
  std::uint32_t left_descents(std::size_t w) const {
    std::uint32_t m = 0;
    for (int s = 0; s < num_generators(); ++s)
      if (length(left_mult(s, w)) < length(w)) m |= 1u << s;
    return m;
  }
  std::uint32_t right_descents(std::size_t w) const {
    std::uint32_t m = 0;
    for (int s = 0; s < num_generators(); ++s)
      if (length(right_mult(w, s)) < length(w)) m |= 1u << s;
    return m;
  }
};

// S_n with elements enumerated in lexicographic one-line order.
class SymmetricGroupModel : public CoxeterModel {
 public:
  explicit SymmetricGroupModel(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SymmetricGroupModel: n >= 1 required");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    do {
      elements_.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    lengths_.reserve(elements_.size());
    inverses_.reserve(elements_.size());
    left_.assign(std::max(0, n - 1), std::vector<std::size_t>(elements_.size()));
    right_.assign(std::max(0, n - 1), std::vector<std::size_t>(elements_.size()));
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      lengths_.push_back(klc::length(elements_[i]));
      inverses_.push_back(index_of(elements_[i].inverse()));
      for (int s = 1; s < n; ++s) {
        left_[s - 1][i] = index_of(left_mult_gen(s, elements_[i]));
        right_[s - 1][i] = index_of(right_mult_gen(elements_[i], s));
      }
    }
  }

  int n() const { return n_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

  // Lexicographic rank via the Lehmer code.
  std::size_t index_of(const Permutation& w) const {
    if (w.n() != n_) throw std::invalid_argument("index_of: rank mismatch");
    std::size_t rank = 0;
    std::size_t fact = 1;
    for (int i = 2; i <= n_; ++i) fact *= i;
    for (int i = 1; i <= n_; ++i) {
      fact /= (n_ - i + 1);
      int smaller = 0;
      for (int j = i + 1; j <= n_; ++j)
        if (w(j) < w(i)) ++smaller;
      rank += smaller * fact;
    }
    return rank;
  }

  int num_generators() const override { return n_ - 1; }
  std::size_t size() const override { return elements_.size(); }
  std::size_t identity() const override { return 0; }
  int length(std::size_t w) const override { return lengths_[w]; }
  std::size_t left_mult(int s, std::size_t w) const override { return left_[s][w]; }
  std::size_t right_mult(std::size_t w, int s) const override { return right_[s][w]; }
  std::size_t inverse(std::size_t w) const override { return inverses_[w]; }
  std::string element_repr(std::size_t w) const override { return format_permutation(elements_[w]); }
  std::optional<std::size_t> parse_element(std::string_view s) const override {
    auto p = parse_permutation(s);
    if (!p || p->n() != n_) return std::nullopt;
    return index_of(*p);
  }
  std::string id() const override { return "S" + std::to_string(n_); }

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::vector<int> lengths_;
  std::vector<std::size_t> inverses_;
  std::vector<std::vector<std::size_t>> left_, right_;
};

// I2(m), 2m elements. Index 0 is e, 2m-1 is the longest element; the word
// of length k starting with generator g sits at index 2k-1+g.
class DihedralModel : public CoxeterModel {
 public:
  explicit DihedralModel(int m) : m_(m) {
    if (m < 3) throw std::invalid_argument("DihedralModel: m >= 3 required");
  }

  int m() const { return m_; }

  DihedralElement element(std::size_t i) const {
    if (i == 0) return DihedralElement::identity(m_);
    if (i == static_cast<std::size_t>(2 * m_ - 1)) return DihedralElement(m_, m_, 0);
    const int k = static_cast<int>((i + 1) / 2);
    const int g = static_cast<int>((i + 1) % 2);
    return DihedralElement(m_, k, g);
  }

  std::size_t index_of(const DihedralElement& w) const {
    if (w.k == 0) return 0;
    if (w.k == m_) return 2 * m_ - 1;
    return 2 * w.k - 1 + w.start;
  }

  int num_generators() const override { return 2; }
  std::size_t size() const override { return 2 * static_cast<std::size_t>(m_); }
  std::size_t identity() const override { return 0; }
  int length(std::size_t w) const override { return element(w).length(); }
  std::size_t left_mult(int s, std::size_t w) const override { return index_of(element(w).left_mult(s)); }
  std::size_t right_mult(std::size_t w, int s) const override { return index_of(element(w).right_mult(s)); }
  std::size_t inverse(std::size_t w) const override { return index_of(element(w).inverse()); }
  std::string element_repr(std::size_t w) const override { return element(w).word(); }
  std::optional<std::size_t> parse_element(std::string_view s) const override {
    if (s == "e") return 0;
    if (s.empty() || s.size() > static_cast<std::size_t>(m_)) return std::nullopt;
    DihedralElement w = DihedralElement::identity(m_);
    for (char c : s) {
      if (c != '1' && c != '2') return std::nullopt;
      DihedralElement next = w.right_mult(c - '1');
      if (next.length() != w.length() + 1) return std::nullopt;  // not reduced
      w = next;
    }
    return index_of(w);
  }
  std::string id() const override { return "I2(" + std::to_string(m_) + ")"; }

 private:
  int m_;
};

// Memoized Bruhat order on a model, by the recursive descent rule.
class BruhatOrder {
 public:
  explicit BruhatOrder(const CoxeterModel& model) : model_(model) {}

  bool leq(std::size_t x, std::size_t w) {
    if (x == w) return true;
    if (model_.length(x) >= model_.length(w)) return false;
    const std::uint64_t key = static_cast<std::uint64_t>(x) * model_.size() + w;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int s = 0;
    const std::uint32_t ld = model_.left_descents(w);
    while (!(ld & (1u << s))) ++s;
    const std::size_t sw = model_.left_mult(s, w);
    const std::size_t sx = model_.left_mult(s, x);
    const bool r = (model_.length(sx) < model_.length(x)) ? leq(sx, sw) : leq(x, sw);
    memo_.emplace(key, r);
    return r;
  }

 private:
  const CoxeterModel& model_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace klc
