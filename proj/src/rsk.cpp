#include "coxrsk/rsk.hpp"

#include <algorithm>
#include <functional>

namespace coxrsk {

namespace {

void require_shape(const Partition& shape, const Filling& f) {
  if (f.shape() != shape) {
    throw DomainError("filling has shape " + to_string(f.shape()) +
                      ", expected " + to_string(shape));
  }
}

// Writes the GK parts of `dag` onto diagonal m of `out`.
void fill_diagonal(const Diagonal& d, const WeightedDag& dag, Filling& out) {
  const GkResult gk = gk_prefix(dag, d.boxes.size());
  for (const Box& b : d.boxes)
    out.set(b, gk.part(static_cast<std::size_t>(d.apex.row - b.row + 1)));
}

}  // namespace

ShapeGraph::ShapeGraph(Partition shape)
    : shape_(std::move(shape)), boxes_(shape_.boxes()) {
  for (std::size_t k = 0; k < boxes_.size(); ++k) {
    const Box b = boxes_[k];
    const Box down{b.row + 1, b.col};
    const Box right{b.row, b.col + 1};
    if (shape_.contains(down))
      arcs_.push_back({static_cast<int>(k), static_cast<int>(shape_.index_of(down))});
    if (shape_.contains(right))
      arcs_.push_back({static_cast<int>(k), static_cast<int>(shape_.index_of(right))});
  }
}

ShapeGraph::Ideal ShapeGraph::ideal(int m) const {
  const Box apex = diagonal(shape_, m).apex;
  Ideal out;
  out.boxes = ideal_boxes(shape_, apex);
  // The ideal is the apex.row x apex.col rectangle.
  auto local = [&](int i, int j) { return (i - 1) * apex.col + (j - 1); };
  for (int i = 1; i <= apex.row; ++i) {
    for (int j = 1; j <= apex.col; ++j) {
      if (i < apex.row) out.arcs.push_back({local(i, j), local(i + 1, j)});
      if (j < apex.col) out.arcs.push_back({local(i, j), local(i, j + 1)});
    }
  }
  return out;
}

WeightedDag ShapeGraph::weighted(const Filling& f) const {
  require_shape(shape_, f);
  return WeightedDag({f.values().begin(), f.values().end()}, arcs_);
}

ShapeGraph graph_of_shape(const Partition& shape) { return ShapeGraph(shape); }

Filling gansner_rsk(const Partition& shape, const Filling& f) {
  require_shape(shape, f);
  const ShapeGraph graph(shape);
  Filling g(shape);
  for (int m = 1; m <= graph.hook(); ++m) {
    const Diagonal d = diagonal(shape, m);
    ShapeGraph::Ideal ideal = graph.ideal(m);
    std::vector<Weight> weights;
    weights.reserve(ideal.boxes.size());
    for (const Box& b : ideal.boxes) weights.push_back(f.at(b));
    fill_diagonal(d, WeightedDag(std::move(weights), std::move(ideal.arcs)), g);
  }
  return g;
}

LiftedFilling::LiftedFilling(Filling base, IntervalBipartition bipartition)
    : base_(std::move(base)),
      bipartition_(std::move(bipartition)),
      n_(bipartition_.max()) {
  const auto induced = partition_of_bipartition(bipartition_);
  if (!induced || *induced != base_.shape()) {
    throw DomainError("bipartition does not induce shape " + to_string(base_.shape()));
  }
  weights_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  const Partition& shape = base_.shape();
  const int q = bipartition_.q();
  for (const Box& b : shape.boxes()) {
    const int lo = bipartition_.b(b.row);
    const int hi = bipartition_.e(q - b.col + 1);
    weights_[static_cast<std::size_t>((lo - 1) * n_ + (hi - 1))] = base_.at(b);
  }
}

Weight LiftedFilling::weight(Transposition t) const {
  if (t.lo < 1 || t.lo >= t.hi || t.hi > n_) {
    throw DomainError("transposition " + to_string(t) + " not in S_" + std::to_string(n_));
  }
  return weights_[static_cast<std::size_t>((t.lo - 1) * n_ + (t.hi - 1))];
}

Weight LiftedFilling::total() const noexcept {
  Weight sum = 0;
  for (Weight w : weights_) sum += w;
  return sum;
}

Filling LiftedFilling::restrict() const {
  Filling out(base_.shape());
  for (const Box& b : base_.shape().boxes())
    out.set(b, weight(box_label(base_.shape(), bipartition_, b)));
  return out;
}

LiftedFilling lift_filling(const Partition& shape, const Filling& f) {
  require_shape(shape, f);
  return LiftedFilling(f, elementary_bipartition(shape));
}

Filling coxeter_rsk(const Partition& shape, const CoxeterElement& c,
                    const Filling& f) {
  require_shape(shape, f);
  const int n = hook_length_11(shape) + 1;
  if (c.n() != n) {
    throw DomainError("shape " + to_string(shape) + " needs a Coxeter element of S_" +
                      std::to_string(n) + ", got one of S_" + std::to_string(c.n()));
  }
  const LiftedFilling lifted = lift_filling(shape, f);
  const ArQuiver quiver = ar_quiver(c);
  Filling g(shape);
  for (int m = 1; m <= n - 1; ++m) {
    const ArSlice slice = ar_slice(quiver, m);
    std::vector<Weight> weights;
    weights.reserve(slice.vertices.size());
    for (const auto& t : slice.vertices) weights.push_back(lifted.weight(t));
    fill_diagonal(diagonal(shape, m), slice.with_weights(std::move(weights)), g);
  }
  return g;
}

CoxeterElement special_coxeter(const Partition& shape) {
  const IntervalBipartition be = elementary_bipartition(shape);
  const int n = hook_length_11(shape) + 1;
  if (n == 2) return CoxeterElement::from_word({1});

  enum class Role { kSink, kSource, kPass };
  auto role = [&](int i) {
    if (be.in_b(i) && be.in_e(i + 1)) return Role::kSink;
    // The end letters have a single neighbour and are a source otherwise.
    if (i == 1 || i == n - 1) return Role::kSource;
    if (be.in_e(i) && be.in_b(i + 1)) return Role::kSource;
    return Role::kPass;
  };

  // left_first[k-1]: s_k precedes s_{k+1} in the word.
  std::vector<bool> left_first(static_cast<std::size_t>(n - 2));
  for (int k = 1; k <= n - 2; ++k) {
    switch (role(k)) {
      case Role::kSink: left_first[static_cast<std::size_t>(k - 1)] = false; break;
      case Role::kSource: left_first[static_cast<std::size_t>(k - 1)] = true; break;
      case Role::kPass:
        left_first[static_cast<std::size_t>(k - 1)] = left_first[static_cast<std::size_t>(k - 2)];
        break;
    }
  }
  CoxeterElement c = from_orientation(n, left_first);

  for (int i = 1; i <= n - 1; ++i) {
    const bool final_wanted = be.in_b(i) && be.in_e(i + 1);
    const bool initial_wanted = be.in_e(i) && be.in_b(i + 1);
    if (is_final(c, i) != final_wanted ||
        (i >= 2 && i <= n - 2 && is_initial(c, i) != initial_wanted)) {
      throw std::logic_error("special_coxeter: inconsistent orientation for " +
                             to_string(shape) + " at s_" + std::to_string(i));
    }
  }
  return c;
}

Filling forward_rsk(const Partition& shape, const RskVariant& variant,
                    const Filling& f) {
  if (const auto* c = std::get_if<CoxeterElement>(&variant)) return coxeter_rsk(shape, *c, f);
  return gansner_rsk(shape, f);
}

std::optional<Filling> invert_rsk(const Partition& shape,
                                  const RskVariant& variant, const Filling& g) {
  require_shape(shape, g);
  if (shape.size() > kInvertMaxBoxes) {
    throw CapacityError("inverse search supports at most " +
                        std::to_string(kInvertMaxBoxes) + " boxes, shape " +
                        to_string(shape) + " has " + std::to_string(shape.size()));
  }
  if (g.max_entry() > kInvertMaxEntry) {
    throw CapacityError("inverse search supports entries up to " +
                        std::to_string(kInvertMaxEntry) + ", got " +
                        std::to_string(g.max_entry()));
  }
  if (const auto* c = std::get_if<CoxeterElement>(&variant)) {
    if (c->n() != hook_length_11(shape) + 1) {
      throw DomainError("shape " + to_string(shape) + " needs a Coxeter element of S_" +
                        std::to_string(hook_length_11(shape) + 1));
    }
  }
  if (!is_rpp(g)) return std::nullopt;

  const int h = hook_length_11(shape);
  const int lambda1 = shape.first();

  // Diagonal-major order: m ascending, then row ascending.
  std::vector<Box> order = shape.boxes();
  std::sort(order.begin(), order.end(), [&](Box a, Box b) {
    const int ma = a.row - a.col + lambda1, mb = b.row - b.col + lambda1;
    return ma != mb ? ma < mb : a.row < b.row;
  });

  // Each value is at most the top part of its diagonal (a single path
  // through the box). The sum of g over diagonal m equals the f-sum of the
  // ideal below its apex.
  std::vector<Weight> target(static_cast<std::size_t>(h + 1), 0);
  std::vector<Box> apex(static_cast<std::size_t>(h + 1));
  for (int m = 1; m <= h; ++m) {
    const Diagonal d = diagonal(shape, m);
    apex[static_cast<std::size_t>(m)] = d.apex;
    for (const Box& b : d.boxes) target[static_cast<std::size_t>(m)] += g.at(b);
  }
  std::vector<std::vector<int>> ideals_of(order.size());
  std::vector<int> remaining(static_cast<std::size_t>(h + 1), 0);
  std::vector<Weight> bound(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Box b = order[k];
    bound[k] = g.at(apex[static_cast<std::size_t>(b.row - b.col + lambda1)]);
    for (int m = 1; m <= h; ++m) {
      if (box_leq(b, apex[static_cast<std::size_t>(m)])) {
        ideals_of[k].push_back(m);
        ++remaining[static_cast<std::size_t>(m)];
      }
    }
  }

  std::vector<Weight> partial(static_cast<std::size_t>(h + 1), 0);
  Filling f(shape);
  std::optional<Filling> found;

  std::function<void(std::size_t)> search = [&](std::size_t k) {
    if (found) return;
    if (k == order.size()) {
      if (forward_rsk(shape, variant, f) == g) found = f;
      return;
    }
    Weight lo = 0, hi = bound[k];
    for (int m : ideals_of[k]) {
      const auto mm = static_cast<std::size_t>(m);
      hi = std::min(hi, target[mm] - partial[mm]);
      if (remaining[mm] == 1) lo = std::max(lo, target[mm] - partial[mm]);
    }
    for (Weight v = lo; v <= hi && !found; ++v) {
      f.set(order[k], v);
      for (int m : ideals_of[k]) {
        partial[static_cast<std::size_t>(m)] += v;
        --remaining[static_cast<std::size_t>(m)];
      }
      search(k + 1);
      for (int m : ideals_of[k]) {
        partial[static_cast<std::size_t>(m)] -= v;
        ++remaining[static_cast<std::size_t>(m)];
      }
    }
    f.set(order[k], 0);
  };
  search(0);
  return found;
}

}  // namespace coxrsk
