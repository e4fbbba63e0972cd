#pragma once

#include <vector>

#include "steinerline/graph.hpp"

namespace steinerline {

// A tree subgraph with a chosen root, per-vertex levels (distance from the
// root) and, for every non-root vertex, the unique edge to the previous level.
class RootedTree {
public:
    RootedTree(Subgraph tree, VertexId root, std::vector<int> level, std::vector<EdgeId> parent_edge)
        : tree_(std::move(tree)), root_(root), level_(std::move(level)), parent_edge_(std::move(parent_edge)) {}

    const Subgraph& tree() const noexcept { return tree_; }
    VertexId root() const noexcept { return root_; }

    int level_of(VertexId v) const { return level_.at(static_cast<size_t>(v)); }
    // -1 for the root and for vertices outside the tree.
    EdgeId parent_edge_of(VertexId v) const { return parent_edge_.at(static_cast<size_t>(v)); }

private:
    Subgraph tree_;
    VertexId root_;
    std::vector<int> level_;       // indexed by parent-graph VertexId, -1 outside the tree
    std::vector<EdgeId> parent_edge_;
};

RootedTree root_tree(const Subgraph& t, VertexId root);

// Deterministic breadth-first spanning tree: neighbors explored in ascending
// vertex id order. Every degree-1 vertex of g stays degree-1 in the result.
RootedTree spanning_tree(const Subgraph& g, VertexId root);
RootedTree spanning_tree(const Graph& g, VertexId root);

} // namespace steinerline
