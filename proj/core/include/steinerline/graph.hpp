#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "steinerline/errors.hpp"

namespace steinerline {

using VertexId = int;
using EdgeId = int;

// Simple undirected graph. Edges keep their input order; the position in
// edges() is the stable EdgeId used by every other type in the library.
class Graph {
public:
    Graph() = default;

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }
    std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return edges_.at(static_cast<size_t>(e)); }

    // Neighbors of v as (neighbor, edge id), sorted by ascending neighbor id.
    const std::vector<std::pair<VertexId, EdgeId>>& adjacency(VertexId v) const {
        return adjacency_.at(static_cast<size_t>(v));
    }
    // Edge ids incident to v, ascending.
    const std::vector<EdgeId>& incident_edges(VertexId v) const {
        return incident_.at(static_cast<size_t>(v));
    }
    int degree(VertexId v) const { return static_cast<int>(adjacency_.at(static_cast<size_t>(v)).size()); }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    friend Graph build_graph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& pairs);

private:
    int vertex_count_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacency_;
    std::vector<std::vector<EdgeId>> incident_;
};

// Validates the pair list (no loops, no duplicate unordered pairs, endpoints
// in range) and assigns EdgeIds in input order.
Graph build_graph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& pairs);

// A vertex/edge subset of a parent graph. Ids are the parent's ids, so a
// subgraph can be tracked across trees and into the line graph without
// translation. Vertex and edge lists are kept sorted.
struct Subgraph {
    const Graph* parent = nullptr;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    bool contains_vertex(VertexId v) const;
    bool contains_edge(EdgeId e) const;
    int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges.size()); }
};

// Sorts, dedups and validates: endpoints of every edge must lie in the vertex set.
Subgraph make_subgraph(const Graph& g, std::vector<VertexId> vertices, std::vector<EdgeId> edges);

// The whole graph viewed as a subgraph of itself.
Subgraph whole_subgraph(const Graph& g);

// Subgraph with edge set s and vertex set = all endpoints of s.
Subgraph edge_induced_subgraph(const Graph& g, const std::vector<EdgeId>& s);

// Subgraph on the given vertices with every parent edge joining two of them.
Subgraph vertex_induced_subgraph(const Graph& g, const std::vector<VertexId>& vs);

bool subgraph_is_connected(const Subgraph& s);
bool subgraph_is_tree(const Subgraph& s);

// Degree of v counting only edges of s (v need not be listed in s).
int degree_in(const Subgraph& s, VertexId v);

struct SteinerCheck {
    enum class Reason { Ok, NotSubgraphOfHost, NotTree, MissingTerminal };
    bool ok = false;
    Reason reason = Reason::Ok;
    explicit operator bool() const noexcept { return ok; }
};

// True iff t lives in g, is a tree, and covers every terminal.
SteinerCheck is_steiner_tree(const Graph& g, const Subgraph& t, const std::vector<VertexId>& terminals);

} // namespace steinerline
