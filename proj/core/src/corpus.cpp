#include "steinerline/corpus.hpp"

#include <bit>
#include <string>
#include <vector>

namespace steinerline {

namespace {

// splitmix64; fixed algorithm keeps seeded corpora identical everywhere,
// independent of the standard library's distribution implementations.
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97f4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::vector<std::pair<VertexId, VertexId>> all_pairs(int n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

} // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix mix{seed + 0x9E3779B97f4A7C15ull * (index + 1)};
    return mix.next();
}

Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed,
                             std::optional<int> max_edges) {
    if (n < 1) throw Error(Errc::BadArgument, "random graph needs n >= 1");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw Error(Errc::BadArgument, "edge probability must lie in [0,1]");

    SplitMix rng{seed};
    const auto pairs = all_pairs(n);
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        std::vector<std::pair<VertexId, VertexId>> chosen;
        for (const auto& pr : pairs)
            if (rng.next_unit() < edge_probability) chosen.push_back(pr);
        if (max_edges && static_cast<int>(chosen.size()) > *max_edges) continue;
        Graph g = build_graph(n, chosen);
        if (subgraph_is_connected(whole_subgraph(g))) return g;
    }
    throw Error(Errc::BadArgument,
                "rejection sampling failed for n = " + std::to_string(n) +
                    ", p = " + std::to_string(edge_probability));
}

void for_each_connected_graph(int n, int max_edges, const std::function<bool(const Graph&)>& fn) {
    if (n < 1 || n > 8) throw Error(Errc::BadArgument, "exhaustive enumeration supports 1 <= n <= 8");
    const auto pairs = all_pairs(n);
    const int total = static_cast<int>(pairs.size());
    for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
        if (std::popcount(mask) > max_edges) continue;
        std::vector<std::pair<VertexId, VertexId>> chosen;
        for (int i = 0; i < total; ++i)
            if ((mask >> i) & 1) chosen.push_back(pairs[static_cast<size_t>(i)]);
        Graph g = build_graph(n, chosen);
        if (!subgraph_is_connected(whole_subgraph(g))) continue;
        if (!fn(g)) return;
    }
}

} // namespace steinerline
