#include "coxrsk/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace coxrsk {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void for_each_filling(const Partition& shape, Weight max_entry,
                      const std::function<void(const Filling&)>& visit) {
  const auto size = static_cast<std::size_t>(shape.size());
  std::vector<Weight> values(size, 0);
  while (true) {
    visit(Filling(shape, values));
    std::size_t k = size;
    while (k > 0 && values[k - 1] == max_entry) values[--k] = 0;
    if (k == 0) return;
    ++values[k - 1];
  }
}

Filling random_filling(const Partition& shape, Weight max_entry, std::mt19937_64& rng) {
  std::uniform_int_distribution<Weight> dist(0, max_entry);
  std::vector<Weight> values(static_cast<std::size_t>(shape.size()));
  for (auto& v : values) v = dist(rng);
  return Filling(shape, std::move(values));
}

Partition random_partition_with_hook(int hook, std::mt19937_64& rng) {
  // 1 in B, hook+1 in E, the rest split by fair coin flips.
  std::vector<int> b{1}, e;
  std::bernoulli_distribution coin(0.5);
  for (int x = 2; x <= hook; ++x) (coin(rng) ? b : e).push_back(x);
  e.push_back(hook + 1);
  return *partition_of_bipartition(IntervalBipartition(std::move(b), std::move(e)));
}

WeightedDag random_dag(int max_vertices, Weight max_weight, std::mt19937_64& rng) {
  const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  const double density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (keep(rng)) arcs.push_back({label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]});
  std::uniform_int_distribution<Weight> w(0, max_weight);
  std::vector<Weight> weights(static_cast<std::size_t>(n));
  for (auto& x : weights) x = w(rng);
  return WeightedDag(std::move(weights), std::move(arcs));
}

}  // namespace coxrsk
