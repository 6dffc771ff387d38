#include "coxrsk/gkcore.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace coxrsk {

namespace {

std::string describe_cycle(const std::vector<int>& cycle) {
  std::string s = "directed cycle:";
  for (int v : cycle) s += " " + std::to_string(v);
  return s;
}

void check_arc_range(std::size_t vertex_count, const Arc& a) {
  const auto n = static_cast<long long>(vertex_count);
  if (a.first < 0 || a.second < 0 || a.first >= n || a.second >= n) {
    throw DomainError("arc [" + std::to_string(a.first) + "," +
                      std::to_string(a.second) + "] references a vertex outside [0, " +
                      std::to_string(vertex_count) + ")");
  }
}

// CSR adjacency.
void build_csr(std::size_t n, std::span<const Arc> arcs, bool forward,
               std::vector<int>& start, std::vector<int>& list) {
  start.assign(n + 1, 0);
  for (const auto& [u, v] : arcs) ++start[static_cast<std::size_t>(forward ? u : v) + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  list.assign(arcs.size(), 0);
  std::vector<int> fill(start.begin(), start.end() - 1);
  for (const auto& [u, v] : arcs) {
    const int from = forward ? u : v;
    const int to = forward ? v : u;
    list[static_cast<std::size_t>(fill[static_cast<std::size_t>(from)]++)] = to;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(list.begin() + start[v], list.begin() + start[v + 1]);
}

}  // namespace

CycleError::CycleError(std::vector<int> cycle)
    : DomainError(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

std::vector<int> topological_order(std::size_t vertex_count,
                                   std::span<const Arc> arcs) {
  for (const auto& a : arcs) {
    check_arc_range(vertex_count, a);
    if (a.first == a.second) throw CycleError({a.first, a.first});
  }
  std::vector<int> start, succ;
  build_csr(vertex_count, arcs, true, start, succ);
  std::vector<int> indegree(vertex_count, 0);
  for (const auto& a : arcs) ++indegree[static_cast<std::size_t>(a.second)];

  // Kahn with a min-heap so the order is canonical.
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (indegree[v] == 0) ready.push(static_cast<int>(v));
  std::vector<int> order;
  order.reserve(vertex_count);
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int k = start[static_cast<std::size_t>(u)]; k < start[static_cast<std::size_t>(u) + 1]; ++k) {
      const int v = succ[static_cast<std::size_t>(k)];
      if (--indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
  }
  if (order.size() == vertex_count) return order;

  // Every leftover vertex has a leftover predecessor; walk backwards until a
  // vertex repeats.
  std::vector<int> pstart, pred;
  build_csr(vertex_count, arcs, false, pstart, pred);
  int v = -1;
  for (std::size_t x = 0; x < vertex_count; ++x)
    if (indegree[x] > 0) { v = static_cast<int>(x); break; }
  std::vector<int> seen_at(vertex_count, -1);
  std::vector<int> walk;
  while (seen_at[static_cast<std::size_t>(v)] < 0) {
    seen_at[static_cast<std::size_t>(v)] = static_cast<int>(walk.size());
    walk.push_back(v);
    for (int k = pstart[static_cast<std::size_t>(v)]; k < pstart[static_cast<std::size_t>(v) + 1]; ++k) {
      const int u = pred[static_cast<std::size_t>(k)];
      if (indegree[static_cast<std::size_t>(u)] > 0) { v = u; break; }
    }
  }
  std::vector<int> cycle(walk.begin() + seen_at[static_cast<std::size_t>(v)], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  cycle.push_back(cycle.front());
  throw CycleError(std::move(cycle));
}

WeightedDag::WeightedDag(std::vector<Weight> weights, std::vector<Arc> arcs)
    : weights_(std::move(weights)), arcs_(std::move(arcs)) {
  for (std::size_t v = 0; v < weights_.size(); ++v) {
    if (weights_[v] < 0) {
      throw DomainError("vertex " + std::to_string(v) + " has negative weight");
    }
  }
  std::set<Arc> seen;
  for (const auto& a : arcs_) {
    check_arc_range(weights_.size(), a);
    if (a.first == a.second) {
      throw DomainError("self-loop at vertex " + std::to_string(a.first));
    }
    if (!seen.insert(a).second) {
      throw DomainError("duplicate arc [" + std::to_string(a.first) + "," +
                        std::to_string(a.second) + "]");
    }
  }
  topo_ = coxrsk::topological_order(weights_.size(), arcs_);
  build_csr(weights_.size(), arcs_, true, out_start_, out_);
  build_csr(weights_.size(), arcs_, false, in_start_, in_);
}

std::span<const int> WeightedDag::successors(int v) const {
  const auto k = static_cast<std::size_t>(v);
  return std::span<const int>(out_).subspan(
      static_cast<std::size_t>(out_start_.at(k)),
      static_cast<std::size_t>(out_start_.at(k + 1) - out_start_[k]));
}

std::span<const int> WeightedDag::predecessors(int v) const {
  const auto k = static_cast<std::size_t>(v);
  return std::span<const int>(in_).subspan(
      static_cast<std::size_t>(in_start_.at(k)),
      static_cast<std::size_t>(in_start_.at(k + 1) - in_start_[k]));
}

bool WeightedDag::has_arc(int from, int to) const {
  if (from < 0 || static_cast<std::size_t>(from) >= vertex_count()) return false;
  const auto s = successors(from);
  return std::binary_search(s.begin(), s.end(), to);
}

Weight WeightedDag::total_weight() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), Weight{0});
}

WeightedDag WeightedDag::reweighted(std::vector<Weight> weights) const {
  if (weights.size() != weights_.size()) {
    throw DomainError("reweighting needs " + std::to_string(weights_.size()) +
                      " weights, got " + std::to_string(weights.size()));
  }
  for (std::size_t v = 0; v < weights.size(); ++v)
    if (weights[v] < 0)
      throw DomainError("vertex " + std::to_string(v) + " has negative weight");
  WeightedDag copy = *this;
  copy.weights_ = std::move(weights);
  return copy;
}

std::vector<int> PathTuple::support() const {
  std::vector<int> s;
  for (const auto& p : paths) s.insert(s.end(), p.begin(), p.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Weight weight_of(const WeightedDag& dag, const PathTuple& t) {
  for (std::size_t k = 0; k < t.paths.size(); ++k) {
    const auto& p = t.paths[k];
    if (p.empty()) throw DomainError("path " + std::to_string(k) + " is empty");
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= dag.vertex_count())
        throw DomainError("path " + std::to_string(k) + " visits unknown vertex " +
                          std::to_string(v));
    }
    for (std::size_t s = 0; s + 1 < p.size(); ++s) {
      if (!dag.has_arc(p[s], p[s + 1])) {
        throw DomainError("path " + std::to_string(k) + " steps along non-arc " +
                          std::to_string(p[s]) + "->" + std::to_string(p[s + 1]));
      }
    }
  }
  Weight w = 0;
  for (int v : t.support()) w += dag.weight(v);
  return w;
}

Weight GkResult::part(std::size_t index) const noexcept {
  if (index == 0 || index > parts.size()) return 0;
  return parts[index - 1];
}

namespace {

// Unit-augmenting min-cost flow on the vertex-split network. Costs are
// negated gains.
class SplitFlowSolver {
 public:
  SplitFlowSolver(const WeightedDag& dag, Weight capacity) : dag_(dag) {
    const auto n = dag.vertex_count();
    adj_.resize(2 * n + 2);
    for (std::size_t v = 0; v < n; ++v) {
      const int in = vin(static_cast<int>(v));
      const int out = vout(static_cast<int>(v));
      add_edge(kSource, in, capacity, 0);
      add_edge(in, out, 1, -dag.weights()[v]);
      add_edge(in, out, capacity, 0);
      add_edge(out, kSink, capacity, 0);
    }
    for (const auto& [u, v] : dag.arcs()) add_edge(vout(u), vin(v), capacity, 0);
    init_potentials();
  }

  // Sends one unit along a cheapest residual path; returns its gain.
  Weight augment() {
    constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
    const std::size_t nodes = adj_.size();
    std::vector<Weight> dist(nodes, kInf);
    std::vector<std::pair<int, int>> parent(nodes, {-1, -1});
    using Item = std::pair<Weight, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[kSource] = 0;
    heap.push({0, kSource});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[static_cast<std::size_t>(u)]) continue;
      const auto& edges = adj_[static_cast<std::size_t>(u)];
      for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        if (e.cap <= 0) continue;
        const Weight reduced = e.cost + potential_[static_cast<std::size_t>(u)] -
                               potential_[static_cast<std::size_t>(e.to)];
        const Weight nd = d + reduced;
        if (nd < dist[static_cast<std::size_t>(e.to)]) {
          dist[static_cast<std::size_t>(e.to)] = nd;
          parent[static_cast<std::size_t>(e.to)] = {u, static_cast<int>(k)};
          heap.push({nd, e.to});
        }
      }
    }
    const Weight reach = dist[kSink];
    if (reach >= kInf) return 0;
    const Weight cost = reach + potential_[kSink] - potential_[kSource];
    for (std::size_t v = 0; v < nodes; ++v)
      potential_[v] += std::min(dist[v], reach);
    for (int v = kSink; v != kSource;) {
      const auto [u, k] = parent[static_cast<std::size_t>(v)];
      Edge& e = adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
      e.cap -= 1;
      adj_[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap += 1;
      v = u;
    }
    return -cost;
  }

  // Splits the current flow into source-to-sink paths, preferring to
  // continue along the smallest successor id.
  PathTuple decompose() const {
    const std::size_t nodes = adj_.size();
    std::vector<std::vector<std::pair<int, Weight>>> flow(nodes);
    for (std::size_t u = 0; u < nodes; ++u) {
      for (const Edge& e : adj_[u]) {
        if (!e.forward) continue;
        const Weight f = e.original - e.cap;
        if (f > 0) flow[u].push_back({e.to, f});
      }
      std::sort(flow[u].begin(), flow[u].end(),
                [](const auto& a, const auto& b) {
                  // Sink (node 1) last so paths extend when they can.
                  const bool as = a.first == kSink, bs = b.first == kSink;
                  if (as != bs) return bs;
                  return a.first < b.first;
                });
    }
    auto take = [&](int u) {
      for (auto& [to, f] : flow[static_cast<std::size_t>(u)]) {
        if (f > 0) {
          --f;
          return to;
        }
      }
      return -1;
    };
    PathTuple tuple;
    while (true) {
      int node = take(kSource);
      if (node < 0) break;
      std::vector<int> path;
      while (node != kSink) {
        if (node % 2 == 0) path.push_back((node - 2) / 2);
        node = take(node);
      }
      tuple.paths.push_back(std::move(path));
    }
    return tuple;
  }

 private:
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;
  static int vin(int v) { return 2 + 2 * v; }
  static int vout(int v) { return 3 + 2 * v; }

  struct Edge {
    int to;
    int rev;
    Weight cap;
    Weight cost;
    Weight original;
    bool forward;
  };

  void add_edge(int u, int v, Weight cap, Weight cost) {
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto& av = adj_[static_cast<std::size_t>(v)];
    au.push_back({v, static_cast<int>(av.size()), cap, cost, cap, true});
    av.push_back({u, static_cast<int>(au.size()) - 1, 0, -cost, 0, false});
  }

  // Shortest distances from the source over the acyclic initial network.
  void init_potentials() {
    constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
    potential_.assign(adj_.size(), kInf);
    potential_[kSource] = 0;
    auto relax = [&](int u) {
      const Weight pu = potential_[static_cast<std::size_t>(u)];
      if (pu >= kInf) return;
      for (const Edge& e : adj_[static_cast<std::size_t>(u)]) {
        if (e.cap <= 0) continue;
        auto& pv = potential_[static_cast<std::size_t>(e.to)];
        pv = std::min(pv, pu + e.cost);
      }
    };
    relax(kSource);
    for (int v : dag_.topological_order()) {
      relax(vin(v));
      relax(vout(v));
    }
    for (auto& p : potential_)
      if (p >= kInf) p = 0;
  }

  const WeightedDag& dag_;
  std::vector<std::vector<Edge>> adj_;
  std::vector<Weight> potential_;
};

}  // namespace

GkResult gk_prefix(const WeightedDag& dag, std::size_t max_paths,
                   bool with_witnesses) {
  GkResult result;
  result.prefix_maxima.push_back(0);
  if (max_paths == 0) return result;
  if (dag.vertex_count() == 0) {
    result.prefix_maxima.resize(max_paths + 1, 0);
    result.parts.resize(max_paths, 0);
    if (with_witnesses) result.witnesses.resize(max_paths);
    return result;
  }
  SplitFlowSolver solver(dag, static_cast<Weight>(max_paths));
  for (std::size_t l = 1; l <= max_paths; ++l) {
    const Weight gain = solver.augment();
    result.parts.push_back(gain);
    result.prefix_maxima.push_back(result.prefix_maxima.back() + gain);
    if (with_witnesses) result.witnesses.push_back(solver.decompose());
  }
  return result;
}

Weight max_weight_paths(const WeightedDag& dag, std::size_t paths) {
  return gk_prefix(dag, paths).prefix_maxima.back();
}

GkResult gk_invariant(const WeightedDag& dag, bool with_witnesses) {
  return gk_prefix(dag, antichain_width(dag), with_witnesses);
}

std::size_t antichain_width(const WeightedDag& dag) {
  const std::size_t n = dag.vertex_count();
  if (n == 0) return 0;
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> reach(n * words, 0);
  auto row = [&](std::size_t v) { return reach.data() + v * words; };
  const auto& topo = dag.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    std::uint64_t* rv = row(v);
    for (int s : dag.successors(*it)) {
      const auto su = static_cast<std::size_t>(s);
      const std::uint64_t* rs = row(su);
      for (std::size_t w = 0; w < words; ++w) rv[w] |= rs[w];
      rv[su / 64] |= std::uint64_t{1} << (su % 64);
    }
  }

  // Kuhn's augmenting paths; left copy u matched to right copy v means the
  // chain cover continues from u to v.
  std::vector<int> match_right(n, -1);
  std::vector<int> visited(n, -1);
  std::function<bool(std::size_t, int)> try_match = [&](std::size_t u, int stamp) {
    const std::uint64_t* ru = row(u);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = ru[w];
      while (bits) {
        const auto v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (visited[v] == stamp) continue;
        visited[v] = stamp;
        if (match_right[v] < 0 ||
            try_match(static_cast<std::size_t>(match_right[v]), stamp)) {
          match_right[v] = static_cast<int>(u);
          return true;
        }
      }
    }
    return false;
  };
  std::size_t matched = 0;
  for (std::size_t u = 0; u < n; ++u)
    if (try_match(u, static_cast<int>(u))) ++matched;
  return n - matched;
}

std::vector<Weight> gk_bruteforce(const WeightedDag& dag,
                                  std::size_t max_paths) {
  const std::size_t n = dag.vertex_count();
  if (n > 64) {
    throw CapacityError("brute force supports at most 64 vertices, got " +
                        std::to_string(n));
  }
  constexpr std::size_t kPathCap = 200;
  const bool small = n <= 14;

  // Maximal paths run from a source to a sink.
  std::vector<std::uint64_t> masks;
  std::function<void(int, std::uint64_t)> walk = [&](int v, std::uint64_t mask) {
    mask |= std::uint64_t{1} << v;
    const auto succ = dag.successors(v);
    if (succ.empty()) {
      masks.push_back(mask);
      if (!small && masks.size() > kPathCap) {
        throw CapacityError("brute force refused: more than " +
                            std::to_string(kPathCap) + " maximal paths on " +
                            std::to_string(n) + " vertices");
      }
      return;
    }
    for (int s : succ) walk(s, mask);
  };
  for (std::size_t v = 0; v < n; ++v)
    if (dag.predecessors(static_cast<int>(v)).empty()) walk(static_cast<int>(v), 0);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  // Repeating a path adds nothing, so l-multisets reduce to subsets of size
  // at most l.
  const std::size_t depth = std::min(max_paths, masks.size());
  double combos = 0;
  double binom = 1;
  for (std::size_t k = 0; k <= depth; ++k) {
    if (k > 0) binom = binom * static_cast<double>(masks.size() - k + 1) / static_cast<double>(k);
    combos += binom;
  }
  if (combos > static_cast<double>(kBruteforceBudget)) {
    throw CapacityError("brute force refused: " + std::to_string(masks.size()) +
                        " maximal paths would need more than " +
                        std::to_string(kBruteforceBudget) + " combinations");
  }

  auto mask_weight = [&](std::uint64_t m) {
    Weight w = 0;
    while (m) {
      w += dag.weight(std::countr_zero(m));
      m &= m - 1;
    }
    return w;
  };
  std::vector<Weight> best(depth + 1, 0);
  std::function<void(std::size_t, std::size_t, std::uint64_t, Weight)> choose =
      [&](std::size_t from, std::size_t used, std::uint64_t mask, Weight w) {
        best[used] = std::max(best[used], w);
        if (used == depth) return;
        for (std::size_t k = from; k < masks.size(); ++k)
          choose(k + 1, used + 1, mask | masks[k], w + mask_weight(masks[k] & ~mask));
      };
  choose(0, 0, 0, 0);

  std::vector<Weight> out(max_paths + 1, 0);
  for (std::size_t l = 1; l <= max_paths; ++l)
    out[l] = std::max(out[l - 1], best[std::min(l, depth)]);
  return out;
}

}  // namespace coxrsk
