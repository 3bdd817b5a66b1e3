#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "rational.hpp"

namespace klc {

// Coordinates of lambda+rho = (t_1, ..., t_n). Exact rationals throughout;
// an "integral" weight is one whose pairwise coordinate differences are
// integers (a global half-integer shift is allowed).
using WeightVector = std::vector<Rat>;

inline bool is_integral(const WeightVector& t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if ((t[i] - t[0]).denominator() != 1) return false;
  return true;
}

// All consecutive differences t_i - t_{i+1} are positive integers.
inline bool is_ordered(const WeightVector& t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const Rat d = t[i] - t[i + 1];
    if (d.denominator() != 1 || d.numerator() <= 0) return false;
  }
  return true;
}

// ((n-1)/2, (n-3)/2, ..., -(n-1)/2).
inline WeightVector rho(int n) {
  if (n < 2) throw std::invalid_argument("rho: n >= 2 required");
  WeightVector t;
  t.reserve(n);
  for (int i = 0; i < n; ++i) t.emplace_back(n - 1 - 2 * i, 2);
  return t;
}

// (w.t)_i = t_{w^{-1}(i)}.
inline WeightVector act_on_weight(const Permutation& w, const WeightVector& t) {
  if (static_cast<std::size_t>(w.n()) != t.size())
    throw std::invalid_argument("act_on_weight: rank mismatch");
  const Permutation inv = w.inverse();
  WeightVector r(t.size());
  for (int i = 1; i <= w.n(); ++i) r[i - 1] = t[inv(i) - 1];
  return r;
}

inline WeightVector negate(const WeightVector& t) {
  WeightVector r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = -t[i];
  return r;
}

inline std::string format_weight(const WeightVector& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += to_string(t[i]);
  }
  return s;
}

inline std::optional<WeightVector> parse_weight(std::string_view s) {
  WeightVector t;
  for (auto part : split(s, ',')) {
    auto r = parse_rational(part);
    if (!r) return std::nullopt;
    t.push_back(*r);
  }
  return t;
}

}  // namespace klc
