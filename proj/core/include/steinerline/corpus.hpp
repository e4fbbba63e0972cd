#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "steinerline/graph.hpp"

namespace steinerline {

// Stream seed for trial `index` of a seeded experiment. Failures replay from
// (seed, index) alone.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

// Uniform edge-probability model conditioned on connectivity by rejection,
// with an optional cap on the edge count (also by rejection). Candidate pairs
// are scanned in lexicographic order, so a graph is fully determined by the
// seed. Throws if the rejection loop fails to produce a graph.
Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed,
                             std::optional<int> max_edges = std::nullopt);

// All connected labeled graphs on exactly n vertices with at most max_edges
// edges, in ascending order of the edge-pair bitmask (pairs in lexicographic
// order). Return false from the callback to stop.
void for_each_connected_graph(int n, int max_edges, const std::function<bool(const Graph&)>& fn);

} // namespace steinerline
