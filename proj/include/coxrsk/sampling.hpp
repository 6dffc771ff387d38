#pragma once

// Enumeration and seeded random generation of test instances.

#include <cstdint>
#include <functional>
#include <random>

#include "coxrsk/gkcore.hpp"
#include "coxrsk/shapes.hpp"

namespace coxrsk {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Independent per-instance seed derived from a run seed (splitmix64).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// Calls `visit` on every filling of `shape` with entries in [0, max_entry],
// in lexicographic row-major order.
void for_each_filling(const Partition& shape, Weight max_entry,
                      const std::function<void(const Filling&)>& visit);

Filling random_filling(const Partition& shape, Weight max_entry, std::mt19937_64& rng);

// Uniform over partitions whose first-box hook length equals `hook`
// (equivalently, over elementary bipartitions of {1..hook+1}).
Partition random_partition_with_hook(int hook, std::mt19937_64& rng);

// Random DAG on [1, max_vertices] vertices: arcs i->j (i<j in a random
// relabelling) kept with a random density, weights in [0, max_weight].
WeightedDag random_dag(int max_vertices, Weight max_weight, std::mt19937_64& rng);

}  // namespace coxrsk
