#pragma once

// Greene-Kleitman invariants of vertex-weighted acyclic digraphs.
//
// M_l is the largest total weight of the union of supports of l paths.
// The solver casts M_l as a max-gain flow of value l in a vertex-split
// network and runs successive longest augmentations with potentials; one
// run yields M_1, ..., M_k incrementally.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coxrsk/common.hpp"

namespace coxrsk {

// Directed arc between zero-based vertex ids.
using Arc = std::pair<int, int>;

// Thrown when a digraph has a directed cycle; carries one such cycle as a
// closed vertex sequence (first vertex repeated at the end).
class CycleError : public DomainError {
 public:
  explicit CycleError(std::vector<int> cycle);
  const std::vector<int>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<int> cycle_;
};

// Topological order of a digraph on vertices 0..vertex_count-1.
// Throws CycleError with a witness cycle, DomainError on a bad arc.
std::vector<int> topological_order(std::size_t vertex_count,
                                   std::span<const Arc> arcs);

class WeightedDag {
 public:
  // Validates: vertex ids in range, no self-loops, no duplicate arcs,
  // nonnegative weights, acyclic.
  WeightedDag(std::vector<Weight> weights, std::vector<Arc> arcs);

  std::size_t vertex_count() const noexcept { return weights_.size(); }
  Weight weight(int v) const { return weights_.at(static_cast<std::size_t>(v)); }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::span<const int> successors(int v) const;
  std::span<const int> predecessors(int v) const;
  bool has_arc(int from, int to) const;
  const std::vector<int>& topological_order() const noexcept { return topo_; }
  Weight total_weight() const noexcept;

  // Same graph, new weights.
  WeightedDag reweighted(std::vector<Weight> weights) const;

 private:
  std::vector<Weight> weights_;
  std::vector<Arc> arcs_;
  std::vector<int> out_start_, out_;
  std::vector<int> in_start_, in_;
  std::vector<int> topo_;
};

struct PathTuple {
  std::vector<std::vector<int>> paths;

  // Sorted set of vertices visited by any path.
  std::vector<int> support() const;
};

// Sum of weights over the support of `t`; each vertex counted once.
// Throws DomainError if a path is empty or steps along a non-arc.
Weight weight_of(const WeightedDag& dag, const PathTuple& t);

struct GkResult {
  // M_0 = 0, M_1, ..., M_k.
  std::vector<Weight> prefix_maxima;
  // M_l - M_{l-1} for l = 1..k.
  std::vector<Weight> parts;
  // witnesses[l-1] realizes M_l with exactly l paths, when requested.
  std::vector<PathTuple> witnesses;

  // 1-based part accessor; parts past the end read as zero.
  Weight part(std::size_t index) const noexcept;
};

// M_0..M_max_paths computed by the flow solver.
GkResult gk_prefix(const WeightedDag& dag, std::size_t max_paths,
                   bool with_witnesses = false);

// M_l for a single l.
Weight max_weight_paths(const WeightedDag& dag, std::size_t paths);

// Parts truncated at the antichain width.
GkResult gk_invariant(const WeightedDag& dag, bool with_witnesses = false);

// Largest antichain, via reachability closure and a minimum chain cover
// (maximum bipartite matching on the comparability relation).
std::size_t antichain_width(const WeightedDag& dag);

// Exhaustive M_0..M_max_paths over unions of maximal paths. Refuses
// (CapacityError) graphs with more than 64 vertices, graphs with more than
// 14 vertices and more than 200 maximal paths, and searches needing more
// than kBruteforceBudget path combinations.
inline constexpr std::size_t kBruteforceBudget = 20'000'000;
std::vector<Weight> gk_bruteforce(const WeightedDag& dag,
                                  std::size_t max_paths);

}  // namespace coxrsk
