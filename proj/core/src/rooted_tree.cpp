#include "steinerline/rooted_tree.hpp"

#include <deque>

namespace steinerline {

namespace {

// BFS from root over the subgraph's edges; neighbor order is ascending vertex
// id because Graph adjacency is sorted.
RootedTree bfs_tree(const Subgraph& g, VertexId root, bool require_tree) {
    const Graph& parent = *g.parent;
    if (!g.contains_vertex(root))
        throw Error(require_tree ? Errc::RootNotInTree : Errc::BadArgument,
                    "root " + std::to_string(root) + " is not a vertex of the subgraph");
    if (require_tree && !subgraph_is_tree(g))
        throw Error(Errc::NotATree, "subgraph is not a tree");

    std::vector<int> level(static_cast<size_t>(parent.vertex_count()), -1);
    std::vector<EdgeId> parent_edge(static_cast<size_t>(parent.vertex_count()), -1);
    std::vector<EdgeId> tree_edges;
    std::deque<VertexId> queue{root};
    level[static_cast<size_t>(root)] = 0;
    size_t reached = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (auto [w, e] : parent.adjacency(v)) {
            if (!g.contains_edge(e) || level[static_cast<size_t>(w)] >= 0) continue;
            level[static_cast<size_t>(w)] = level[static_cast<size_t>(v)] + 1;
            parent_edge[static_cast<size_t>(w)] = e;
            tree_edges.push_back(e);
            ++reached;
            queue.push_back(w);
        }
    }
    if (reached != g.vertices.size())
        throw Error(Errc::NotConnected, "subgraph is not connected");

    Subgraph tree = require_tree ? g : make_subgraph(parent, g.vertices, std::move(tree_edges));
    return RootedTree(std::move(tree), root, std::move(level), std::move(parent_edge));
}

} // namespace

RootedTree root_tree(const Subgraph& t, VertexId root) {
    return bfs_tree(t, root, /*require_tree=*/true);
}

RootedTree spanning_tree(const Subgraph& g, VertexId root) {
    return bfs_tree(g, root, /*require_tree=*/false);
}

RootedTree spanning_tree(const Graph& g, VertexId root) {
    return spanning_tree(whole_subgraph(g), root);
}

} // namespace steinerline
