#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "coxrsk/coxeter.hpp"
#include "fixtures.hpp"

using namespace coxrsk;

namespace {

// Product of adjacent transpositions, composed right to left.
Permutation word_product(int n, const std::vector<int>& letters) {
  Permutation w = Permutation::identity(n);
  for (int a : letters) w = w * Permutation::adjacent(n, a);
  return w;
}

// Every Coxeter element of S_n as a sorted set of image vectors, found by
// multiplying out all (n-1)! words.
std::set<std::vector<int>> elements_from_words(int n) {
  std::vector<int> letters(static_cast<std::size_t>(n - 1));
  std::iota(letters.begin(), letters.end(), 1);
  std::set<std::vector<int>> out;
  do {
    out.insert(word_product(n, letters).images());
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

bool is_unimodal_from_one(const std::vector<int>& cycle) {
  const auto peak = std::max_element(cycle.begin(), cycle.end());
  return std::is_sorted(cycle.begin(), peak + 1) &&
         std::is_sorted(peak, cycle.end(), std::greater<>());
}

}  // namespace

TEST_CASE("permutations") {
  const Permutation s1 = Permutation::adjacent(3, 1);
  const Permutation s2 = Permutation::adjacent(3, 2);
  CHECK((s1 * s2).images() == std::vector<int>{2, 3, 1});
  CHECK((s1 * s2)(1) == 2);
  CHECK(length(s1 * s2) == 2);
  CHECK((s1 * s2).inverse() == s2 * s1);
  CHECK(length(Permutation::identity(5)) == 0);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), FormatError);
  CHECK_THROWS_AS(Permutation::adjacent(3, 3), RangeError);
}

TEST_CASE("construction") {
  const CoxeterElement c = CoxeterElement::from_cycle({1, 3, 4, 2});
  CHECK(c(1) == 3);
  CHECK(c(3) == 4);
  CHECK(c(4) == 2);
  CHECK(c(2) == 1);
  CHECK(to_string(c) == "(1,3,4,2)");
  CHECK(CoxeterElement::from_word({2, 1, 3}) == c);
  CHECK(CoxeterElement::from_permutation(c.perm()) == c);
  CHECK(c.inverse().cycle() == std::vector<int>{1, 2, 4, 3});
  CHECK(CoxeterElement::from_cycle({1, 2}).cycle() == std::vector<int>{1, 2});

  CHECK_THROWS_AS(CoxeterElement::from_cycle({2, 1, 3}), FormatError);
  CHECK_THROWS_AS(CoxeterElement::from_cycle({1, 1, 2}), FormatError);
  CHECK_THROWS_AS(CoxeterElement::from_cycle({1}), FormatError);
  CHECK_THROWS_AS(CoxeterElement::from_cycle({1, 3, 2, 4}), DomainError);
  CHECK_THROWS_AS(CoxeterElement::from_word({1, 1}), FormatError);
  CHECK_THROWS_AS(CoxeterElement::from_permutation(Permutation({2, 1, 3})), DomainError);
}

TEST_CASE("initial and final letters") {
  const CoxeterElement c = CoxeterElement::from_word({2, 1, 3});
  CHECK(is_initial(c, 2));
  CHECK_FALSE(is_initial(c, 1));
  CHECK_FALSE(is_initial(c, 3));
  CHECK(is_final(c, 1));
  CHECK(is_final(c, 3));
  CHECK_FALSE(is_final(c, 2));
  CHECK_THROWS_AS(is_initial(c, 0), RangeError);
  CHECK_THROWS_AS(is_final(c, 4), RangeError);

  for (int n = 2; n <= 7; ++n)
    for (const auto& c2 : enumerate_coxeter(n)) {
      const int l = length(c2.perm());
      CHECK(l == n - 1);
      for (int i = 1; i < n; ++i) {
        const Permutation s = Permutation::adjacent(n, i);
        CHECK(is_initial(c2, i) == (length(s * c2.perm()) < l));
        CHECK(is_final(c2, i) == (length(c2.perm() * s) < l));
      }
    }
}

TEST_CASE("enumeration matches all words") {
  CHECK(enumerate_coxeter(2).size() == 1);
  for (int n = 3; n <= 10; ++n) {
    const auto elements = enumerate_coxeter(n);
    CHECK(elements.size() == (std::size_t{1} << (n - 2)));
    std::set<std::vector<int>> images;
    for (const auto& c : elements) {
      images.insert(c.perm().images());
      CHECK(std::find(elements.begin(), elements.end(), c.inverse()) != elements.end());
      CHECK(is_unimodal_from_one(c.cycle()));
    }
    CHECK(images.size() == elements.size());
    if (n <= 9) CHECK(images == elements_from_words(n));
  }
  CHECK_THROWS_AS(enumerate_coxeter(1), DomainError);
}

TEST_CASE("unimodal cycles are exactly the Coxeter elements") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 2);
    std::size_t unimodal = 0;
    do {
      std::vector<int> cycle{1};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      if (is_unimodal_from_one(cycle)) {
        ++unimodal;
        CHECK(CoxeterElement::from_cycle(cycle).cycle() == cycle);
      } else {
        CHECK_THROWS_AS(CoxeterElement::from_cycle(cycle), DomainError);
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    CHECK(unimodal == enumerate_coxeter(n).size());
  }
}

TEST_CASE("from_orientation") {
  // s_2 before s_1, s_2 before s_3.
  CHECK(from_orientation(4, {false, true}) == CoxeterElement::from_word({2, 1, 3}));
  CHECK(from_orientation(4, {true, true}) == CoxeterElement::from_word({1, 2, 3}));
  CHECK(from_orientation(4, {false, false}) == CoxeterElement::from_word({3, 2, 1}));
}

TEST_CASE("reference AR quiver") {
  const CoxeterElement c = fixtures::reference_coxeter();
  const ArQuiver q = ar_quiver(c);
  CHECK(q.vertices.size() == 36);
  std::set<std::pair<Transposition, Transposition>> got, expected;
  for (const auto& [u, v] : q.arcs)
    got.insert({q.vertices[static_cast<std::size_t>(u)], q.vertices[static_cast<std::size_t>(v)]});
  for (const auto& arc : fixtures::reference_ar_arcs()) expected.insert(arc);
  CHECK(expected.size() == 56);
  CHECK(got == expected);
  CHECK(q.sources() == std::vector<Transposition>{{2, 3}, {6, 7}, {8, 9}});
  CHECK(q.sinks() == std::vector<Transposition>{{1, 2}, {4, 5}, {7, 8}});
  CHECK(q.id({1, 2}) == 0);
  CHECK(q.id({8, 9}) == 35);
  CHECK_THROWS_AS(q.id({3, 3}), DomainError);
}

TEST_CASE("AR quiver of the long cycle") {
  const ArQuiver q = ar_quiver(CoxeterElement::from_cycle({1, 2, 3, 4}));
  CHECK(q.vertices.size() == 6);
  std::set<std::pair<Transposition, Transposition>> got;
  for (const auto& [u, v] : q.arcs)
    got.insert({q.vertices[static_cast<std::size_t>(u)], q.vertices[static_cast<std::size_t>(v)]});
  const std::set<std::pair<Transposition, Transposition>> expected{
      {{1, 2}, {1, 3}}, {{1, 3}, {1, 4}}, {{1, 3}, {2, 3}},
      {{1, 4}, {2, 4}}, {{2, 3}, {2, 4}}, {{2, 4}, {3, 4}}};
  CHECK(got == expected);
  CHECK(q.sources() == std::vector<Transposition>{{1, 2}});
  CHECK(q.sinks() == std::vector<Transposition>{{3, 4}});
}

TEST_CASE("quiver arcs follow the two rules and sources track initial letters") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& c : enumerate_coxeter(n)) {
      const ArQuiver q = ar_quiver(c);
      CHECK(q.vertices.size() == static_cast<std::size_t>(n * (n - 1) / 2));
      std::set<std::pair<Transposition, Transposition>> expected, got;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          if (i < c(j)) expected.insert({{i, j}, {i, c(j)}});
          if (c(i) < j) expected.insert({{i, j}, {c(i), j}});
        }
      for (const auto& [u, v] : q.arcs)
        got.insert({q.vertices[static_cast<std::size_t>(u)],
                    q.vertices[static_cast<std::size_t>(v)]});
      CHECK(got == expected);
      std::vector<Transposition> initial, final_letters;
      for (int i = 1; i < n; ++i) {
        if (is_initial(c, i)) initial.push_back({i, i + 1});
        if (is_final(c, i)) final_letters.push_back({i, i + 1});
      }
      CHECK(q.sources() == initial);
      CHECK(q.sinks() == final_letters);
    }
}

TEST_CASE("slices have one source and one sink") {
  for (int n = 2; n <= 9; ++n)
    for (const auto& c : enumerate_coxeter(n)) {
      const ArQuiver q = ar_quiver(c);
      for (int m = 1; m < n; ++m) {
        const ArSlice s = ar_slice(q, m);
        CHECK(s.vertices.size() == static_cast<std::size_t>(m * (n - m)));
        for (const auto& t : s.vertices) CHECK((t.lo <= m && m < t.hi));
        CHECK(s.sources().size() == 1);
        CHECK(s.sinks().size() == 1);
      }
      CHECK_THROWS_AS(ar_slice(q, 0), RangeError);
      CHECK_THROWS_AS(ar_slice(q, n), RangeError);
    }
}

TEST_CASE("slice of the reference quiver") {
  const ArSlice s = ar_slice(fixtures::reference_coxeter(), 5);
  CHECK(s.vertices.size() == 20);
  const WeightedDag dag = s.with_weights(std::vector<Weight>(20, 1));
  CHECK(dag.vertex_count() == 20);
  CHECK_THROWS_AS(s.with_weights({1, 2}), DomainError);
}
