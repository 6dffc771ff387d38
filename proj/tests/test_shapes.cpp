#include "doctest.h"

#include <functional>
#include <map>
#include <set>

#include "coxrsk/shapes.hpp"
#include "fixtures.hpp"

using namespace coxrsk;

namespace {

// All elementary bipartitions of {1..n}, by brute force over subsets.
std::vector<IntervalBipartition> all_elementary(int n) {
  std::vector<IntervalBipartition> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> b, e;
    for (int x = 1; x <= n; ++x) ((mask >> (x - 1)) & 1U ? b : e).push_back(x);
    if (b.empty() || e.empty()) continue;
    IntervalBipartition be(b, e);
    if (be.is_elementary()) out.push_back(be);
  }
  return out;
}

// All partitions with lambda_1 + length - 1 == hook.
void partitions_with_hook(int hook, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining_rows, int max_part) {
    if (remaining_rows == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= max_part; ++p) {
      cur.push_back(p);
      rec(remaining_rows - 1, p);
      cur.pop_back();
    }
  };
  for (int first = 1; first <= hook; ++first) {
    cur = {first};
    rec(hook - first, first);
  }
}

// Boxes of the diagram found by scanning a bounding square.
std::vector<Box> enumerate_diagonal(const Partition& s, int m) {
  std::vector<Box> out;
  for (int i = 1; i <= 20; ++i)
    for (int j = 1; j <= 20; ++j)
      if (s.contains({i, j}) && i - j + s.first() == m) out.push_back({i, j});
  return out;
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK_THROWS_AS(Partition({}), DomainError);
  CHECK_THROWS_AS(Partition({0, 0}), DomainError);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, -1}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0, 1}), DomainError);
  const Partition p({5, 3, 3, 2});
  CHECK(p.size() == 13);
  CHECK(p.contains({4, 2}));
  CHECK_FALSE(p.contains({4, 3}));
  CHECK_FALSE(p.contains({5, 1}));
  CHECK(p.index_of({2, 1}) == 5);
}

TEST_CASE("hook_length_11") {
  CHECK(hook_length_11(Partition({5, 3, 3, 2})) == 8);
  CHECK(hook_length_11(Partition({1})) == 1);
  CHECK(hook_length_11(Partition({4})) == 4);
}

TEST_CASE("diagonal") {
  const Partition p({5, 3, 3, 2});
  const Diagonal d5 = diagonal(p, 5);
  CHECK(d5.boxes == std::vector<Box>{{1, 1}, {2, 2}, {3, 3}});
  CHECK(d5.apex == Box{3, 3});
  const Diagonal d1 = diagonal(p, 1);
  CHECK(d1.boxes == std::vector<Box>{{1, 5}});
  CHECK(d1.apex == Box{1, 5});
  const Diagonal only = diagonal(Partition({1}), 1);
  CHECK(only.boxes == std::vector<Box>{{1, 1}});
  CHECK_THROWS_AS(diagonal(p, 0), RangeError);
  CHECK_THROWS_AS(diagonal(p, 9), RangeError);
  try {
    diagonal(p, 9);
  } catch (const RangeError& e) {
    CHECK(std::string(e.what()).find("[1, 8]") != std::string::npos);
  }
}

TEST_CASE("ideal_boxes") {
  const Partition p({5, 3, 3, 2});
  const auto block = ideal_boxes(p, {3, 3});
  CHECK(block.size() == 9);
  for (const Box& b : block) CHECK((b.row <= 3 && b.col <= 3));
  CHECK(ideal_boxes(p, {1, 5}) == std::vector<Box>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK(ideal_boxes(p, {1, 1}) == std::vector<Box>{{1, 1}});
  CHECK_THROWS_AS(ideal_boxes(p, {2, 4}), DomainError);
}

TEST_CASE("is_rpp") {
  const Partition p({5, 3, 3, 2});
  CHECK(is_rpp(Filling::from_rows(p, {{0, 3, 5, 5, 7}, {1, 5, 5}, {4, 6, 9}, {4, 10}})));
  CHECK_FALSE(is_rpp(fixtures::reference_input()));
  CHECK(is_rpp(Filling(p)));
  CHECK(is_rpp(fixtures::reference_output()));
  // Column violation only.
  CHECK_FALSE(is_rpp(Filling::from_rows(Partition({1, 1}), {{2}, {1}})));
}

TEST_CASE("filling construction errors") {
  const Partition p({2, 1});
  CHECK_THROWS_AS(Filling::from_rows(p, {{1, 2}}), DomainError);
  CHECK_THROWS_AS(Filling::from_rows(p, {{1, 2}, {3, 4}}), DomainError);
  CHECK_THROWS_AS(Filling(p, {1, 2, -1}), DomainError);
  Filling f(p);
  CHECK_THROWS_AS(f.set({2, 2}, 1), DomainError);
  CHECK(Filling::from_rows(p, {{1, 2}, {3}}).rows() ==
        std::vector<std::vector<Weight>>{{1, 2}, {3}});
}

TEST_CASE("partition_of_bipartition") {
  CHECK(partition_of_bipartition({{1, 2, 4, 8}, {3, 5, 6, 7, 9}})->parts() ==
        std::vector<int>{5, 5, 4, 1});
  CHECK(partition_of_bipartition({{1}, {2}})->parts() == std::vector<int>{1});
  CHECK(partition_of_bipartition({{1, 4, 5, 7}, {2, 3, 6, 8, 9}})->parts() ==
        std::vector<int>{5, 3, 3, 2});
  // B above E gives the zero partition.
  CHECK_FALSE(partition_of_bipartition({{3, 4}, {1, 2}}).has_value());
  // Not starting at 1 is still an interval bipartition.
  CHECK(partition_of_bipartition({{3}, {4, 5}})->parts() == std::vector<int>{2});
}

TEST_CASE("interval bipartition validation") {
  CHECK_THROWS_AS(IntervalBipartition({1, 3}, {4}), DomainError);
  CHECK_THROWS_AS(IntervalBipartition({1, 2}, {2, 3}), DomainError);
  CHECK_THROWS_AS(IntervalBipartition({}, {}), DomainError);
  CHECK_THROWS_AS(IntervalBipartition({0}, {1}), DomainError);
  CHECK(IntervalBipartition({1}, {2}).is_elementary());
  CHECK_FALSE(IntervalBipartition({2}, {1}).is_elementary());
  CHECK_FALSE(IntervalBipartition({1, 3}, {2}).is_elementary());
}

TEST_CASE("elementary_bipartition") {
  const auto a = elementary_bipartition(Partition({5, 5, 4, 1}));
  CHECK(a.b() == std::vector<int>{1, 2, 4, 8});
  CHECK(a.e() == std::vector<int>{3, 5, 6, 7, 9});
  const auto b = elementary_bipartition(Partition({1}));
  CHECK(b.b() == std::vector<int>{1});
  CHECK(b.e() == std::vector<int>{2});

  // Oracle: search every elementary bipartition of {1..9}.
  const Partition target({5, 3, 3, 2});
  std::vector<IntervalBipartition> hits;
  for (const auto& be : all_elementary(9))
    if (partition_of_bipartition(be) == target) hits.push_back(be);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].b() == std::vector<int>{1, 4, 5, 7});
  CHECK(hits[0].e() == std::vector<int>{2, 3, 6, 8, 9});
  CHECK(elementary_bipartition(target) == hits[0]);
}

TEST_CASE("box_label") {
  const Partition p({5, 3, 3, 2});
  const auto be = elementary_bipartition(p);
  CHECK(box_label(p, be, {1, 1}) == Transposition{1, 9});
  CHECK(box_label(p, be, {3, 3}) == Transposition{5, 6});
  CHECK(box_label(Partition({2, 1}), IntervalBipartition({1, 3}, {2, 4}), {2, 1}) ==
        Transposition{3, 4});
  CHECK_THROWS_AS(box_label(p, be, {4, 3}), DomainError);
  CHECK_THROWS_AS(box_label(p, IntervalBipartition({1, 2, 4, 8}, {3, 5, 6, 7, 9}), {1, 1}),
                  DomainError);
  for (const Box& b : p.boxes()) {
    const auto t = box_label(p, be, b);
    CHECK(t.lo < t.hi);
  }
}

TEST_CASE("round trip and uniqueness of elementary bipartitions, hook <= 12") {
  for (int hook = 1; hook <= 12; ++hook) {
    const int n = hook + 1;
    std::map<std::vector<int>, int> preimages;
    for (const auto& be : all_elementary(n)) {
      const auto lambda = partition_of_bipartition(be);
      REQUIRE(lambda.has_value());
      ++preimages[lambda->parts()];
    }
    std::vector<std::vector<int>> shapes;
    partitions_with_hook(hook, shapes);
    CHECK(shapes.size() == (std::size_t{1} << (hook - 1)));
    CHECK(preimages.size() == shapes.size());
    for (const auto& parts : shapes) {
      const Partition lambda(parts);
      CHECK(preimages[parts] == 1);
      const auto be = elementary_bipartition(lambda);
      CHECK(be.is_elementary());
      CHECK(be.min() == 1);
      CHECK(be.max() == n);
      CHECK(partition_of_bipartition(be) == lambda);
    }
  }
}

TEST_CASE("diagonals partition the diagram and match the bipartition labels") {
  for (int hook = 1; hook <= 8; ++hook) {
    std::vector<std::vector<int>> shapes;
    partitions_with_hook(hook, shapes);
    for (const auto& parts : shapes) {
      const Partition lambda(parts);
      const auto be = elementary_bipartition(lambda);
      std::map<Box, int> hits;
      for (int m = 1; m <= hook; ++m) {
        const Diagonal d = diagonal(lambda, m);
        CHECK(d.boxes == enumerate_diagonal(lambda, m));
        REQUIRE_FALSE(d.boxes.empty());
        for (std::size_t k = 0; k < d.boxes.size(); ++k) {
          ++hits[d.boxes[k]];
          CHECK(box_leq(d.boxes[k], d.apex));
          if (k > 0) CHECK(d.boxes[k].row == d.boxes[k - 1].row + 1);
        }
        std::set<Box> labelled;
        for (const Box& b : lambda.boxes())
          if (be.b(b.row) <= m && m < be.e(be.q() - b.col + 1)) labelled.insert(b);
        const auto ideal = ideal_boxes(lambda, d.apex);
        CHECK(std::set<Box>(ideal.begin(), ideal.end()) == labelled);
        for (const Box& b : labelled) CHECK(box_leq(b, d.apex));
      }
      CHECK(hits.size() == static_cast<std::size_t>(lambda.size()));
      for (const auto& [box, count] : hits) CHECK(count == 1);
    }
  }
}
