#pragma once

// Test-only reference oracle. Everything here goes through plain edge-subset
// enumeration with no pruning, no minimal-tree restriction and no bounds, so
// it stays independent of the search paths in the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "steinerline/graph.hpp"
#include "steinerline/oracle.hpp"

namespace brute {

using steinerline::EdgeId;
using steinerline::Graph;
using steinerline::Subgraph;
using steinerline::VertexId;

struct TreeMask {
    std::uint64_t edges = 0;
    std::uint64_t vertices = 0;
};

inline std::uint64_t vertex_bits(const std::vector<VertexId>& vs) {
    std::uint64_t m = 0;
    for (VertexId v : vs) m |= 1ull << v;
    return m;
}

// Does the edge subset form a single tree whose vertices cover `terminals`?
inline bool subset_is_steiner_tree(const Graph& g, std::uint64_t edge_mask, std::uint64_t terminal_mask,
                                   std::uint64_t* vertex_mask_out) {
    if (edge_mask == 0) return false;
    std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
    std::uint64_t touched = 0;
    int edges = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!((edge_mask >> e) & 1)) continue;
        ++edges;
        auto [u, v] = g.endpoints(e);
        touched |= (1ull << u) | (1ull << v);
    }
    // count vertices and run a flood fill over chosen edges
    int vertices = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((touched >> v) & 1) ++vertices;
    if (edges != vertices - 1) return false;
    int start = 0;
    while (!((touched >> start) & 1)) ++start;
    std::vector<VertexId> stack{start};
    comp[static_cast<size_t>(start)] = 0;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (auto [w, e] : g.adjacency(v)) {
            if (!((edge_mask >> e) & 1) || comp[static_cast<size_t>(w)] == 0) continue;
            comp[static_cast<size_t>(w)] = 0;
            ++reached;
            stack.push_back(w);
        }
    }
    if (reached != vertices) return false;
    if ((terminal_mask & ~touched) != 0) return false;
    if (vertex_mask_out) *vertex_mask_out = touched;
    return true;
}

// Every S-Steiner tree of g, minimal or not, as edge/vertex masks.
inline std::vector<TreeMask> all_steiner_trees(const Graph& g, const std::vector<VertexId>& terminals) {
    std::vector<TreeMask> out;
    std::uint64_t tmask = vertex_bits(terminals);
    for (std::uint64_t mask = 1; mask < (1ull << g.edge_count()); ++mask) {
        std::uint64_t vmask = 0;
        if (subset_is_steiner_tree(g, mask, tmask, &vmask)) out.push_back({mask, vmask});
    }
    return out;
}

// Exact maximum disjoint family by unbounded recursion over the full tree list.
inline int max_packing(const Graph& g, const std::vector<VertexId>& terminals, bool internally_disjoint) {
    std::vector<TreeMask> trees = all_steiner_trees(g, terminals);
    std::uint64_t tmask = vertex_bits(terminals);
    int best = 0;
    std::vector<size_t> stack;
    auto rec = [&](auto&& self, size_t start, std::uint64_t used_e, std::uint64_t used_v) -> void {
        best = std::max(best, static_cast<int>(stack.size()));
        for (size_t i = start; i < trees.size(); ++i) {
            if (trees[i].edges & used_e) continue;
            if (internally_disjoint && (trees[i].vertices & ~tmask & used_v)) continue;
            stack.push_back(i);
            self(self, i + 1, used_e | trees[i].edges, used_v | (trees[i].vertices & ~tmask));
            stack.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

// min over k-subsets, same subsets the library sweeps.
inline int tree_connectivity(const Graph& g, int k, bool internally_disjoint) {
    int n = g.vertex_count();
    std::vector<VertexId> subset(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = i;
    int best = -1;
    while (true) {
        int count = max_packing(g, subset, internally_disjoint);
        if (best < 0 || count < best) best = count;
        int i = k - 1;
        while (i >= 0 && subset[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
    }
    return best;
}

// Smallest edge set separating u from v, by subset enumeration.
inline int edge_connectivity(const Graph& g, VertexId u, VertexId v) {
    int m = g.edge_count();
    auto separated = [&](std::uint64_t removed) {
        std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
        std::vector<VertexId> stack{u};
        seen[static_cast<size_t>(u)] = true;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            if (x == v) return false;
            for (auto [w, e] : g.adjacency(x)) {
                if (((removed >> e) & 1) || seen[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
        }
        return true;
    };
    int best = m;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        if (separated(mask)) best = size;
    }
    return best;
}

// Independent cycle count of a connected subgraph via spanning-forest
// back-edges.
inline int independent_cycles(const Subgraph& c) {
    const Graph& g = *c.parent;
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    int back_edges = 0;
    for (VertexId start : c.vertices) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<std::pair<VertexId, EdgeId>> stack{{start, -1}};
        seen[static_cast<size_t>(start)] = true;
        std::vector<bool> edge_used(static_cast<size_t>(g.edge_count()), false);
        while (!stack.empty()) {
            auto [x, via] = stack.back();
            stack.pop_back();
            for (auto [w, e] : g.adjacency(x)) {
                if (!c.contains_edge(e) || e == via || edge_used[static_cast<size_t>(e)]) continue;
                edge_used[static_cast<size_t>(e)] = true;
                if (seen[static_cast<size_t>(w)])
                    ++back_edges;
                else {
                    seen[static_cast<size_t>(w)] = true;
                    stack.push_back({w, e});
                }
            }
        }
    }
    return back_edges;
}

} // namespace brute
