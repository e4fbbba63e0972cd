#pragma once

#include <vector>

#include "steinerline/graph.hpp"

namespace steinerline {

// The line graph together with the edge<->vertex correspondence. By
// construction the line vertex id equals the source edge id, which keeps the
// correspondence self-describing in reports; the explicit maps state that
// contract.
struct LineGraphMap {
    Graph line_graph;
    std::vector<VertexId> edge_to_vertex; // EdgeId in G -> VertexId in L(G)
    std::vector<EdgeId> vertex_to_edge;   // inverse

    VertexId vertex_for_edge(EdgeId e) const { return edge_to_vertex.at(static_cast<size_t>(e)); }
    EdgeId edge_for_vertex(VertexId v) const { return vertex_to_edge.at(static_cast<size_t>(v)); }
};

// Two line vertices are adjacent iff the source edges share an endpoint.
// Line edges are emitted per shared vertex in ascending vertex order, pairs
// ascending, which makes line EdgeIds deterministic as well.
LineGraphMap line_graph(const Graph& g);

} // namespace steinerline
