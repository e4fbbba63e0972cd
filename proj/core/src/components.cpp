#include "steinerline/components.hpp"

#include <algorithm>
#include <map>

namespace steinerline {

const char* component_class_name(ComponentClass c) {
    switch (c) {
        case ComponentClass::Tree: return "Tree";
        case ComponentClass::Unicyclic: return "Unicyclic";
        case ComponentClass::Heavy: return "Heavy";
    }
    return "?";
}

std::vector<Subgraph> connected_components(const Subgraph& s) {
    const Graph& g = *s.parent;
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    std::vector<Subgraph> out;

    // Vertices are sorted, so scanning in order yields components ordered by
    // smallest contained id.
    for (VertexId start : s.vertices) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<VertexId> verts;
        std::vector<EdgeId> edges;
        std::vector<VertexId> stack{start};
        seen[static_cast<size_t>(start)] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (auto [w, e] : g.adjacency(v)) {
                if (!s.contains_edge(e)) continue;
                auto [a, b] = g.endpoints(e);
                if (std::min(a, b) == v) edges.push_back(e); // record once, from the lower endpoint
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        out.push_back(make_subgraph(g, std::move(verts), std::move(edges)));
    }
    return out;
}

std::vector<Subgraph> connected_components(const Graph& g) {
    return connected_components(whole_subgraph(g));
}

ComponentClass classify_component(const Subgraph& c) {
    if (c.vertices.empty() || !subgraph_is_connected(c))
        throw Error(Errc::NotConnected, "component classification needs a nonempty connected subgraph");
    int n = c.vertex_count();
    int m = c.edge_count();
    if (m == n - 1) return ComponentClass::Tree;
    if (m == n) return ComponentClass::Unicyclic;
    return ComponentClass::Heavy;
}

std::vector<EdgeId> cycle_edge_set(const Subgraph& c) {
    if (classify_component(c) != ComponentClass::Unicyclic)
        throw Error(Errc::NotUnicyclic, "cycle_edge_set needs a unicyclic subgraph");

    const Graph& g = *c.parent;
    // Peel degree-1 vertices until only the cycle remains.
    std::map<VertexId, std::vector<EdgeId>> inc;
    for (EdgeId e : c.edges) {
        auto [u, v] = g.endpoints(e);
        inc[u].push_back(e);
        inc[v].push_back(e);
    }
    std::vector<bool> removed_edge(static_cast<size_t>(g.edge_count()), false);
    std::vector<VertexId> leaves;
    for (auto& [v, es] : inc)
        if (es.size() == 1) leaves.push_back(v);
    auto live_degree = [&](VertexId v) {
        int d = 0;
        for (EdgeId e : inc[v])
            if (!removed_edge[static_cast<size_t>(e)]) ++d;
        return d;
    };
    while (!leaves.empty()) {
        VertexId v = leaves.back();
        leaves.pop_back();
        if (live_degree(v) != 1) continue;
        for (EdgeId e : inc[v]) {
            if (removed_edge[static_cast<size_t>(e)]) continue;
            removed_edge[static_cast<size_t>(e)] = true;
            auto [a, b] = g.endpoints(e);
            VertexId other = (a == v) ? b : a;
            if (live_degree(other) == 1) leaves.push_back(other);
        }
    }
    std::vector<EdgeId> cycle;
    for (EdgeId e : c.edges)
        if (!removed_edge[static_cast<size_t>(e)]) cycle.push_back(e);
    return cycle;
}

} // namespace steinerline
