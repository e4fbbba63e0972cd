#include "steinerline/line_graph.hpp"

namespace steinerline {

LineGraphMap line_graph(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident_edges(v); // ascending edge ids
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                pairs.emplace_back(inc[i], inc[j]);
    }
    // In a simple graph two edges share at most one endpoint, so each pair of
    // adjacent edges is emitted exactly once.
    LineGraphMap map;
    map.line_graph = build_graph(g.edge_count(), pairs);
    map.edge_to_vertex.resize(static_cast<size_t>(g.edge_count()));
    map.vertex_to_edge.resize(static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        map.edge_to_vertex[static_cast<size_t>(e)] = e;
        map.vertex_to_edge[static_cast<size_t>(e)] = e;
    }
    return map;
}

} // namespace steinerline
