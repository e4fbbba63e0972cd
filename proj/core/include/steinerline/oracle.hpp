#pragma once

#include <limits>
#include <vector>

#include "steinerline/graph.hpp"

namespace steinerline {

enum class DisjointMode { EdgeDisjoint, InternallyDisjoint };

const char* disjoint_mode_name(DisjointMode m);

// At least two valid vertex ids; kept sorted and unique.
struct TerminalSet {
    std::vector<VertexId> vertices;

    bool contains(VertexId v) const;
};

TerminalSet make_terminal_set(std::vector<VertexId> vertices);

// A family of pairwise disjoint S-Steiner trees together with the mode that
// defines "disjoint". count == trees.size() by construction.
struct PackingWitness {
    TerminalSet terminals;
    DisjointMode mode = DisjointMode::EdgeDisjoint;
    std::vector<Subgraph> trees;

    int count() const noexcept { return static_cast<int>(trees.size()); }
};

struct ConnectivityResult {
    int k = 0;
    int value = 0;
    TerminalSet witness_min_set;   // lexicographically first minimizing subset
    PackingWitness witness_packing;
};

// The packing problem is NP-hard; these guards turn silent multi-hour runs
// into explicit errors. pack_* bounds each per-set search, sweep_vertices
// bounds the full kappa_k / lambda_k subset sweeps.
struct SizeLimits {
    int pack_vertices = 12;
    int pack_edges = 20;
    int sweep_vertices = 9;
};

inline constexpr int kUncapped = std::numeric_limits<int>::max();

// Repeatedly removes degree-1 vertices outside s. The result is the unique
// minimal S-Steiner core of t.
Subgraph prune_to_terminal_leaves(const Subgraph& t, const TerminalSet& s);

// Every subtree of g whose vertex set covers s and whose leaves all lie in s,
// each exactly once, ordered lexicographically by sorted edge-id sequence.
std::vector<Subgraph> enumerate_minimal_steiner_trees(const Graph& g, const TerminalSet& s);

// Exact maximum family of pairwise disjoint S-Steiner trees, found by
// exhaustive backtracking over the minimal-tree stream with branch-and-bound
// pruning. The witness is the first maximum family in canonical order.
//
// cap is a search contract used by subset sweeps: once a family of `cap`
// trees is found the search stops and reports it, so the returned count is
// min(true maximum, cap). Leave it at kUncapped for the exact maximum.
PackingWitness max_disjoint_packing(const Graph& g, const TerminalSet& s, DisjointMode mode,
                                    const SizeLimits& limits = {}, int cap = kUncapped);

// min over all k-subsets S of V(g) of the packing number, with the
// lexicographically first minimizing subset and its packing as witness.
ConnectivityResult tree_connectivity(const Graph& g, int k, DisjointMode mode,
                                     const SizeLimits& limits = {});

// Maximum number of edge-disjoint u-v paths via unit-capacity augmenting
// paths. Deliberately independent of the Steiner oracle machinery: this is
// the Menger cross-check for the |S| = 2 edge-disjoint case.
int edge_connectivity_flow(const Graph& g, VertexId u, VertexId v);

} // namespace steinerline
