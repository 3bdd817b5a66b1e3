#include <doctest.h>

#include <map>
#include <random>

#include "klcells/klcells.hpp"

using namespace klc;

namespace {

YoungTableau T(std::initializer_list<std::initializer_list<long long>> rows) {
  YoungTableau t;
  for (const auto& r : rows) {
    t.rows.emplace_back();
    for (long long x : r) t.rows.back().emplace_back(x);
  }
  return t;
}

WeightVector W(std::initializer_list<long long> v) {
  WeightVector t;
  for (long long x : v) t.emplace_back(x);
  return t;
}

WeightVector random_integral(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-3, n + 3);
  std::uniform_int_distribution<int> half(0, 1);
  WeightVector t;
  for (int i = 0; i < n; ++i) t.emplace_back(static_cast<long long>(coord(rng)));
  if (half(rng))
    for (auto& x : t) x += Rat(1, 2);
  return t;
}

}  // namespace

TEST_CASE("insertion examples") {
  CHECK(insert_sequence({Rat(1), Rat(2), Rat(3)}).first == T({{1, 2, 3}}));
  CHECK(insert_sequence({Rat(1), Rat(4), Rat(9), Rat(0)}).first == T({{0, 4, 9}, {1}}));
  CHECK(insert_sequence({Rat(2), Rat(3), Rat(4), Rat(1)}).first == T({{1, 3, 4}, {2}}));
  CHECK(insert_sequence({}).first == YoungTableau{});
  CHECK(insert_sequence({Rat(7)}).first == T({{7}}));
}

TEST_CASE("tableau of a weight") {
  CHECK(tableau_of_weight(W({1, 4, 9, 1, 0})) == T({{0, 1, 9}, {1}, {4}}));
  CHECK(tableau_of_weight(W({5, 4, 2, 1, 3})) == T({{1, 3}, {2}, {4}, {5}}));
  CHECK(tableau_of_weight(W({3, 2, 1})) == T({{1}, {2}, {3}}));
  CHECK_THROWS_AS(tableau_of_weight({Rat(1, 2), Rat(0)}), std::invalid_argument);
}

TEST_CASE("tableau of a permutation") {
  CHECK(tableau_of_permutation(Permutation::identity(4)) == T({{1, 2, 3, 4}}));
  CHECK(tableau_of_permutation(hat_word(5, 3)) == T({{1, 3}, {2}, {4}, {5}}));
  CHECK(tableau_of_permutation(longest_element(4)) == T({{1}, {2}, {3}, {4}}));
}

TEST_CASE("rank word and weight-to-permutation") {
  CHECK(rank_word(W({1, 4, 9, 0})) == Permutation({2, 3, 4, 1}));
  CHECK(rank_word(W({1, 4, 9, 1, 0})) == Permutation({2, 4, 5, 3, 1}));
  CHECK(rank_word(W({5, 4, 3, 2, 1})) == Permutation({5, 4, 3, 2, 1}));
  CHECK(weight_to_permutation(W({1, 4, 9, 0})) == Permutation({4, 1, 2, 3}));
  CHECK(weight_to_permutation(W({1, 0, 2, -1, -2})) == hat_word(5, 3));
  CHECK(weight_to_permutation(W({1, 2, 3})) == Permutation::identity(3));
}

TEST_CASE("shape, columns and a-value") {
  const YoungTableau row = tableau_of_permutation(Permutation::identity(5));
  CHECK(shape(row) == Partition{5});
  CHECK(a_value(row) == 0);
  const YoungTableau t = tableau_of_weight(W({1, 4, 9, 0}));
  CHECK(shape(t) == Partition{3, 1});
  CHECK(column_lengths(t) == std::vector<int>{2, 1, 1});
  CHECK(a_value(t) == 1);
  const YoungTableau col = tableau_of_permutation(longest_element(5));
  CHECK(a_value(col) == 10);
}

TEST_CASE("insertion output is always a valid tableau") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 8; ++n)
    for (int rep = 0; rep < 300; ++rep) {
      const WeightVector t = random_integral(n, rng);
      const auto [ins, rec] = insert_sequence(t);
      CHECK(is_valid_tableau(ins));
      CHECK(is_standard(rec, n));
      CHECK(shape(ins) == shape(rec));
    }
}

TEST_CASE("recording tableau of w is the insertion tableau of its inverse") {
  for (int n = 2; n <= 5; ++n) {
    SymmetricGroupModel m(n);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Permutation& w = m.element(i);
      std::vector<Rat> seq;
      for (int k = 1; k <= n; ++k) seq.emplace_back(static_cast<long long>(w(k)));
      const auto [ins, rec] = insert_sequence(seq);
      CHECK(rec == tableau_of_permutation(w.inverse()));
      (void)ins;
    }
  }
}

TEST_CASE("the RS map is injective on S_n with standard output") {
  for (int n = 2; n <= 6; ++n) {
    SymmetricGroupModel m(n);
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Permutation& w = m.element(i);
      std::vector<Rat> seq;
      for (int k = 1; k <= n; ++k) seq.emplace_back(static_cast<long long>(w(k)));
      const auto [ins, rec] = insert_sequence(seq);
      CHECK(is_standard(ins, n));
      CHECK(is_standard(rec, n));
      CHECK(shape(ins) == shape(rec));
      const std::string key = format_tableau(ins) + "|" + format_tableau(rec);
      CHECK(seen.emplace(key, i).second);
    }
  }
}

TEST_CASE("weight and permutation tableaux share a shape") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const WeightVector t = random_integral(n, rng);
    CHECK(shape(tableau_of_weight(t)) ==
          shape(tableau_of_permutation(weight_to_permutation(t))));
  }
}

TEST_CASE("a-value matches a direct cell count over columns") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const YoungTableau t = tableau_of_weight(random_integral(n, rng));
    long long direct = 0;
    for (int c : column_lengths(t))
      for (int i = 0; i < c; ++i) direct += i;
    CHECK(a_value(t) == direct);
  }
}

TEST_CASE("tableau serialization") {
  CHECK(format_tableau(T({{0, 4, 9}, {1}})) == "[[0,4,9],[1]]");
  CHECK(format_partition({3, 1}) == "3,1");
}
