#include "coxrsk/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coxrsk {

std::string to_string(const Transposition& t) {
  return "(" + std::to_string(t.lo) + "," + std::to_string(t.hi) + ")";
}

std::string to_string(const Box& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (parts_.empty()) {
    throw DomainError("partition must be nonzero");
  }
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0) {
      throw DomainError("partition has a negative part at position " +
                        std::to_string(k + 1));
    }
    if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]) {
      throw DomainError("partition is not weakly decreasing at position " +
                        std::to_string(k + 1));
    }
  }
  if (parts_.back() == 0) {
    throw DomainError("partition has an interior zero part");
  }
  row_offset_.resize(parts_.size());
  int acc = 0;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    row_offset_[k] = acc;
    acc += parts_[k];
  }
  size_ = acc;
}

int Partition::part(int i) const noexcept {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

bool Partition::contains(Box b) const noexcept {
  return b.row >= 1 && b.col >= 1 && b.col <= part(b.row);
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
  return out;
}

std::size_t Partition::index_of(Box b) const {
  if (!contains(b)) {
    throw DomainError("box " + to_string(b) + " is outside shape " +
                      coxrsk::to_string(*this));
  }
  return static_cast<std::size_t>(row_offset_[static_cast<std::size_t>(b.row - 1)] +
                                  b.col - 1);
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < p.parts().size(); ++k) {
    if (k) os << ',';
    os << p.parts()[k];
  }
  os << ')';
  return os.str();
}

int hook_length_11(const Partition& shape) {
  return shape.first() + shape.length() - 1;
}

Diagonal diagonal(const Partition& shape, int m) {
  const int h = hook_length_11(shape);
  if (m < 1 || m > h) {
    throw RangeError("diagonal index " + std::to_string(m) +
                     " outside [1, " + std::to_string(h) + "]");
  }
  Diagonal d;
  d.index = m;
  // row - col = m - lambda_1
  const int offset = m - shape.first();
  for (int i = std::max(1, offset + 1); i <= shape.length(); ++i) {
    const int j = i - offset;
    if (j < 1) break;
    if (j <= shape.part(i)) d.boxes.push_back({i, j});
  }
  d.apex = d.boxes.back();
  return d;
}

std::vector<Box> ideal_boxes(const Partition& shape, Box apex) {
  if (!shape.contains(apex)) {
    throw DomainError("apex " + to_string(apex) + " is outside shape " +
                      to_string(shape));
  }
  std::vector<Box> out;
  for (int i = 1; i <= apex.row; ++i)
    for (int j = 1; j <= apex.col; ++j) out.push_back({i, j});
  return out;
}

Filling::Filling(Partition shape)
    : shape_(std::move(shape)),
      values_(static_cast<std::size_t>(shape_.size()), 0) {}

Filling::Filling(Partition shape, std::vector<Weight> row_major)
    : shape_(std::move(shape)), values_(std::move(row_major)) {
  if (values_.size() != static_cast<std::size_t>(shape_.size())) {
    throw DomainError("filling has " + std::to_string(values_.size()) +
                      " values but shape " + to_string(shape_) + " has " +
                      std::to_string(shape_.size()) + " boxes");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0) {
      throw DomainError("filling value at position " + std::to_string(k) +
                        " is negative");
    }
  }
}

Filling Filling::from_rows(Partition shape,
                           const std::vector<std::vector<Weight>>& rows) {
  if (rows.size() != static_cast<std::size_t>(shape.length())) {
    throw DomainError("filling has " + std::to_string(rows.size()) +
                      " rows but shape " + to_string(shape) + " has " +
                      std::to_string(shape.length()));
  }
  std::vector<Weight> flat;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != static_cast<std::size_t>(shape.part(static_cast<int>(r) + 1))) {
      throw DomainError("row " + std::to_string(r + 1) + " has " +
                        std::to_string(rows[r].size()) + " entries, shape " +
                        to_string(shape) + " expects " +
                        std::to_string(shape.part(static_cast<int>(r) + 1)));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return Filling(std::move(shape), std::move(flat));
}

Weight Filling::at(Box b) const { return values_[shape_.index_of(b)]; }

void Filling::set(Box b, Weight value) {
  if (value < 0) throw DomainError("filling values must be nonnegative");
  values_[shape_.index_of(b)] = value;
}

std::vector<std::vector<Weight>> Filling::rows() const {
  std::vector<std::vector<Weight>> out;
  auto it = values_.begin();
  for (int part : shape_.parts()) {
    out.emplace_back(it, it + part);
    it += part;
  }
  return out;
}

Weight Filling::total() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), Weight{0});
}

Weight Filling::max_entry() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

bool is_rpp(const Filling& f) {
  const Partition& s = f.shape();
  for (int i = 1; i <= s.length(); ++i) {
    for (int j = 1; j <= s.part(i); ++j) {
      const Weight v = f(i, j);
      if (j + 1 <= s.part(i) && v > f(i, j + 1)) return false;
      if (j <= s.part(i + 1) && v > f(i + 1, j)) return false;
    }
  }
  return true;
}

IntervalBipartition::IntervalBipartition(std::vector<int> b, std::vector<int> e)
    : b_(std::move(b)), e_(std::move(e)) {
  std::sort(b_.begin(), b_.end());
  std::sort(e_.begin(), e_.end());
  if (b_.empty() && e_.empty()) {
    throw DomainError("interval bipartition must cover a nonempty interval");
  }
  std::vector<int> all(b_);
  all.insert(all.end(), e_.begin(), e_.end());
  std::sort(all.begin(), all.end());
  if (all.front() < 1) {
    throw DomainError("interval bipartition entries must be positive");
  }
  for (std::size_t k = 1; k < all.size(); ++k) {
    if (all[k] == all[k - 1]) {
      throw DomainError("value " + std::to_string(all[k]) +
                        " appears twice in the bipartition");
    }
    if (all[k] != all[k - 1] + 1) {
      throw DomainError("bipartition does not cover an interval: gap after " +
                        std::to_string(all[k - 1]));
    }
  }
}

int IntervalBipartition::min() const noexcept {
  if (b_.empty()) return e_.front();
  if (e_.empty()) return b_.front();
  return std::min(b_.front(), e_.front());
}

int IntervalBipartition::max() const noexcept {
  if (b_.empty()) return e_.back();
  if (e_.empty()) return b_.back();
  return std::max(b_.back(), e_.back());
}

bool IntervalBipartition::in_b(int x) const noexcept {
  return std::binary_search(b_.begin(), b_.end(), x);
}

bool IntervalBipartition::in_e(int x) const noexcept {
  return std::binary_search(e_.begin(), e_.end(), x);
}

bool IntervalBipartition::is_elementary() const noexcept {
  return in_b(1) && in_e(max());
}

std::optional<Partition> partition_of_bipartition(
    const IntervalBipartition& be) {
  std::vector<int> parts;
  parts.reserve(be.b().size());
  for (int bi : be.b()) {
    const auto above = std::upper_bound(be.e().begin(), be.e().end(), bi);
    parts.push_back(static_cast<int>(be.e().end() - above));
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (parts.empty()) return std::nullopt;
  return Partition(std::move(parts));
}

IntervalBipartition elementary_bipartition(const Partition& shape) {
  // b_i is preceded by i-1 elements of B and by q - lambda_i elements of E.
  const int n = hook_length_11(shape) + 1;
  std::vector<int> b;
  for (int i = 1; i <= shape.length(); ++i)
    b.push_back(i + shape.first() - shape.part(i));
  std::vector<int> e;
  auto it = b.begin();
  for (int x = 1; x <= n; ++x) {
    if (it != b.end() && *it == x) {
      ++it;
    } else {
      e.push_back(x);
    }
  }
  return IntervalBipartition(std::move(b), std::move(e));
}

Transposition box_label(const Partition& shape, const IntervalBipartition& be,
                        Box b) {
  if (!shape.contains(b)) {
    throw DomainError("box " + to_string(b) + " is outside shape " +
                      to_string(shape));
  }
  const auto induced = partition_of_bipartition(be);
  if (!induced || *induced != shape) {
    throw DomainError("bipartition does not induce shape " + to_string(shape));
  }
  return {be.b(b.row), be.e(be.q() - b.col + 1)};
}

}  // namespace coxrsk
