#include "steinerline/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace steinerline {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::LoopEdge: return "LoopEdge";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::NotConnected: return "NotConnected";
        case Errc::Disconnected: return "Disconnected";
        case Errc::UnknownEdgeId: return "UnknownEdgeId";
        case Errc::NotATree: return "NotATree";
        case Errc::RootNotInTree: return "RootNotInTree";
        case Errc::NotUnicyclic: return "NotUnicyclic";
        case Errc::NotSteinerTree: return "NotSteinerTree";
        case Errc::TerminalMissing: return "TerminalMissing";
        case Errc::KOutOfRange: return "KOutOfRange";
        case Errc::SameVertex: return "SameVertex";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
        case Errc::RootInTargets: return "RootInTargets";
        case Errc::TargetNotInTree: return "TargetNotInTree";
        case Errc::PrereqViolated: return "PrereqViolated";
        case Errc::NotAdjacentInLineGraph: return "NotAdjacentInLineGraph";
        case Errc::PackingMismatch: return "PackingMismatch";
        case Errc::NotEdgeDisjoint: return "NotEdgeDisjoint";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::ParseError: return "ParseError";
        case Errc::BadArgument: return "BadArgument";
    }
    return "UnknownError";
}

namespace {

std::string pair_text(VertexId u, VertexId v) {
    std::ostringstream os;
    os << "(" << u << "," << v << ")";
    return os.str();
}

} // namespace

Graph build_graph(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    if (vertex_count < 0)
        throw Error(Errc::BadArgument, "vertex_count must be non-negative");

    Graph g;
    g.vertex_count_ = vertex_count;
    g.adjacency_.resize(static_cast<size_t>(vertex_count));
    g.incident_.resize(static_cast<size_t>(vertex_count));

    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [u, v] : pairs) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw Error(Errc::VertexOutOfRange, "edge " + pair_text(u, v) + " leaves 0.." +
                                                    std::to_string(vertex_count - 1));
        if (u == v)
            throw Error(Errc::LoopEdge, "edge " + pair_text(u, v) + " is a loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw Error(Errc::DuplicateEdge, "edge " + pair_text(u, v) + " repeats an unordered pair");

        EdgeId id = static_cast<EdgeId>(g.edges_.size());
        g.edges_.emplace_back(u, v);
        g.adjacency_[static_cast<size_t>(u)].emplace_back(v, id);
        g.adjacency_[static_cast<size_t>(v)].emplace_back(u, id);
        g.incident_[static_cast<size_t>(u)].push_back(id);
        g.incident_[static_cast<size_t>(v)].push_back(id);
    }
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
    return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) return std::nullopt;
    const auto& adj = adjacency_[static_cast<size_t>(u)];
    auto it = std::lower_bound(adj.begin(), adj.end(), std::pair<VertexId, EdgeId>{v, -1});
    if (it != adj.end() && it->first == v) return it->second;
    return std::nullopt;
}

bool Subgraph::contains_vertex(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Subgraph::contains_edge(EdgeId e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Subgraph make_subgraph(const Graph& g, std::vector<VertexId> vertices, std::vector<EdgeId> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    for (VertexId v : vertices)
        if (v < 0 || v >= g.vertex_count())
            throw Error(Errc::VertexOutOfRange, "subgraph vertex " + std::to_string(v));
    Subgraph s{&g, std::move(vertices), std::move(edges)};
    for (EdgeId e : s.edges) {
        if (e < 0 || e >= g.edge_count())
            throw Error(Errc::UnknownEdgeId, "edge id " + std::to_string(e));
        auto [u, v] = g.endpoints(e);
        if (!s.contains_vertex(u) || !s.contains_vertex(v))
            throw Error(Errc::BadArgument,
                        "subgraph edge " + std::to_string(e) + " has an endpoint outside the vertex set");
    }
    return s;
}

Subgraph whole_subgraph(const Graph& g) {
    Subgraph s;
    s.parent = &g;
    s.vertices.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) s.vertices[static_cast<size_t>(v)] = v;
    s.edges.resize(static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) s.edges[static_cast<size_t>(e)] = e;
    return s;
}

Subgraph edge_induced_subgraph(const Graph& g, const std::vector<EdgeId>& s) {
    std::vector<VertexId> vs;
    std::vector<EdgeId> es = s;
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (EdgeId e : es) {
        if (e < 0 || e >= g.edge_count())
            throw Error(Errc::UnknownEdgeId, "edge id " + std::to_string(e));
        auto [u, v] = g.endpoints(e);
        vs.push_back(u);
        vs.push_back(v);
    }
    return make_subgraph(g, std::move(vs), std::move(es));
}

Subgraph vertex_induced_subgraph(const Graph& g, const std::vector<VertexId>& vs) {
    std::vector<VertexId> vertices = vs;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<EdgeId> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (std::binary_search(vertices.begin(), vertices.end(), u) &&
            std::binary_search(vertices.begin(), vertices.end(), v))
            edges.push_back(e);
    }
    return make_subgraph(g, std::move(vertices), std::move(edges));
}

bool subgraph_is_connected(const Subgraph& s) {
    if (s.vertices.empty()) return false;
    std::vector<VertexId> stack{s.vertices.front()};
    std::vector<bool> seen(static_cast<size_t>(s.parent->vertex_count()), false);
    seen[static_cast<size_t>(s.vertices.front())] = true;
    size_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (auto [w, e] : s.parent->adjacency(v)) {
            if (!s.contains_edge(e) || seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = true;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == s.vertices.size();
}

bool subgraph_is_tree(const Subgraph& s) {
    return !s.vertices.empty() && s.edge_count() == s.vertex_count() - 1 && subgraph_is_connected(s);
}

int degree_in(const Subgraph& s, VertexId v) {
    int d = 0;
    for (EdgeId e : s.parent->incident_edges(v))
        if (s.contains_edge(e)) ++d;
    return d;
}

SteinerCheck is_steiner_tree(const Graph& g, const Subgraph& t, const std::vector<VertexId>& terminals) {
    using Reason = SteinerCheck::Reason;
    if (t.parent != &g) return {false, Reason::NotSubgraphOfHost};
    for (VertexId v : t.vertices)
        if (v < 0 || v >= g.vertex_count()) return {false, Reason::NotSubgraphOfHost};
    for (EdgeId e : t.edges)
        if (e < 0 || e >= g.edge_count()) return {false, Reason::NotSubgraphOfHost};
    if (!subgraph_is_tree(t)) return {false, Reason::NotTree};
    for (VertexId v : terminals)
        if (!t.contains_vertex(v)) return {false, Reason::MissingTerminal};
    return {true, Reason::Ok};
}

} // namespace steinerline
