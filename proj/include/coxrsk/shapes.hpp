#pragma once

// Integer partitions, Ferrers diagrams, fillings and interval bipartitions.
//
// Boxes are (row, column), both 1-based; box (i,j) is in the diagram of
// lambda iff j <= lambda_i. Row i has lambda_i boxes.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coxrsk/common.hpp"

namespace coxrsk {

struct Box {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
};

// Componentwise order on boxes.
constexpr bool box_leq(Box a, Box b) noexcept {
  return a.row <= b.row && a.col <= b.col;
}

std::string to_string(const Box& b);

// Nonzero integer partition. Trailing zeros in the input are dropped.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  // 1-based; returns 0 past the last part.
  int part(int i) const noexcept;
  int first() const noexcept { return parts_.front(); }
  // Number of boxes |Fer(lambda)|.
  int size() const noexcept { return size_; }

  bool contains(Box b) const noexcept;
  // Boxes in row-major order.
  std::vector<Box> boxes() const;
  // Position of `b` in boxes(); b must be in the diagram.
  std::size_t index_of(Box b) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  std::vector<int> row_offset_;
  int size_ = 0;
};

std::string to_string(const Partition& p);

// Number of boxes in the first row or first column.
int hook_length_11(const Partition& shape);

struct Diagonal {
  int index = 0;
  // Ascending by row; the apex is the last box.
  std::vector<Box> boxes;
  Box apex;
};

// Boxes with row - col + lambda_1 == m, for 1 <= m <= hook_length_11.
Diagonal diagonal(const Partition& shape, int m);

// Boxes of the diagram lying componentwise below `apex`.
std::vector<Box> ideal_boxes(const Partition& shape, Box apex);

// Nonnegative integer filling of a Ferrers diagram, stored row-major.
class Filling {
 public:
  // All-zero filling.
  explicit Filling(Partition shape);
  Filling(Partition shape, std::vector<Weight> row_major);

  static Filling from_rows(Partition shape,
                           const std::vector<std::vector<Weight>>& rows);

  const Partition& shape() const noexcept { return shape_; }
  Weight at(Box b) const;
  void set(Box b, Weight value);
  Weight operator()(int row, int col) const { return at({row, col}); }

  std::span<const Weight> values() const noexcept { return values_; }
  std::vector<std::vector<Weight>> rows() const;
  Weight total() const noexcept;
  Weight max_entry() const noexcept;

  friend bool operator==(const Filling&, const Filling&) = default;

 private:
  Partition shape_;
  std::vector<Weight> values_;
};

// True iff the filling weakly increases along rows and columns.
bool is_rpp(const Filling& f);

// Two-block set partition of an integer interval {i..j}.
class IntervalBipartition {
 public:
  IntervalBipartition(std::vector<int> b, std::vector<int> e);

  const std::vector<int>& b() const noexcept { return b_; }
  const std::vector<int>& e() const noexcept { return e_; }
  // 1-based element accessors b_i and e_j.
  int b(int i) const { return b_.at(static_cast<std::size_t>(i - 1)); }
  int e(int j) const { return e_.at(static_cast<std::size_t>(j - 1)); }
  int p() const noexcept { return static_cast<int>(b_.size()); }
  int q() const noexcept { return static_cast<int>(e_.size()); }
  int min() const noexcept;
  int max() const noexcept;
  bool in_b(int x) const noexcept;
  bool in_e(int x) const noexcept;
  // 1 in B and max(B u E) in E.
  bool is_elementary() const noexcept;

  friend bool operator==(const IntervalBipartition&,
                         const IntervalBipartition&) = default;

 private:
  std::vector<int> b_;
  std::vector<int> e_;
};

// lambda(B,E)_i = #{e in E | b_i < e}. nullopt is the zero partition.
std::optional<Partition> partition_of_bipartition(
    const IntervalBipartition& be);

// The unique elementary bipartition of {1..hook+1} mapping to `shape`.
IntervalBipartition elementary_bipartition(const Partition& shape);

// Transposition (b_i, e_{q-j+1}) attached to box (i,j).
Transposition box_label(const Partition& shape, const IntervalBipartition& be,
                        Box b);

}  // namespace coxrsk
