#include "doctest.h"

#include <algorithm>

#include "steinerline/components.hpp"
#include "steinerline/corpus.hpp"
#include "steinerline/graph.hpp"
#include "steinerline/line_graph.hpp"
#include "steinerline/rooted_tree.hpp"
#include "support/brute.hpp"
#include "support/builders.hpp"

using namespace steinerline;
using builders::complete_graph;
using builders::cycle_graph;
using builders::path_graph;
using builders::star_graph;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::BadArgument;
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("build_graph assigns edge ids in input order") {
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.endpoints(0) == std::pair<VertexId, VertexId>{0, 1});
    CHECK(p3.endpoints(1) == std::pair<VertexId, VertexId>{1, 2});

    Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
}

TEST_CASE("build_graph rejects bad input") {
    CHECK(code_of([] { build_graph(2, {{0, 0}}); }) == Errc::LoopEdge);
    CHECK(code_of([] { build_graph(3, {{0, 1}, {1, 0}}); }) == Errc::DuplicateEdge);
    CHECK(code_of([] { build_graph(2, {{0, 2}}); }) == Errc::VertexOutOfRange);
}

TEST_CASE("find_edge") {
    Graph c5 = cycle_graph(5);
    CHECK(c5.find_edge(0, 1) == 0);
    CHECK(c5.find_edge(4, 0) == 4);
    CHECK(!c5.find_edge(0, 2).has_value());
}

TEST_CASE("connected_components") {
    Graph two_edges = build_graph(4, {{0, 1}, {2, 3}});
    auto comps = connected_components(two_edges);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices == std::vector<VertexId>{0, 1});
    CHECK(comps[1].vertices == std::vector<VertexId>{2, 3});

    CHECK(connected_components(cycle_graph(5)).size() == 1);

    Graph empty3 = build_graph(3, {});
    auto singletons = connected_components(empty3);
    REQUIRE(singletons.size() == 3);
    for (int v = 0; v < 3; ++v) {
        CHECK(singletons[static_cast<size_t>(v)].vertices == std::vector<VertexId>{v});
        CHECK(singletons[static_cast<size_t>(v)].edges.empty());
    }
}

TEST_CASE("classify_component") {
    Graph edge = build_graph(2, {{0, 1}});
    CHECK(classify_component(whole_subgraph(edge)) == ComponentClass::Tree);
    CHECK(classify_component(whole_subgraph(cycle_graph(3))) == ComponentClass::Unicyclic);
    CHECK(classify_component(whole_subgraph(complete_graph(4))) == ComponentClass::Heavy);

    Graph disconnected = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(code_of([&] { classify_component(whole_subgraph(disconnected)); }) == Errc::NotConnected);
}

TEST_CASE("classify_component agrees with an independent cycle count") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_connected_graph(6, 0.5, trial_seed(7, seed));
        for (const Subgraph& c : connected_components(g)) {
            int cycles = brute::independent_cycles(c);
            switch (classify_component(c)) {
                case ComponentClass::Tree: CHECK(cycles == 0); break;
                case ComponentClass::Unicyclic: CHECK(cycles == 1); break;
                case ComponentClass::Heavy: CHECK(cycles >= 2); break;
            }
        }
    }
}

TEST_CASE("edge_induced_subgraph") {
    Graph c5 = cycle_graph(5);
    Subgraph path = edge_induced_subgraph(c5, {0, 1});
    CHECK(path.vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(path.edges == std::vector<EdgeId>{0, 1});

    Subgraph all = edge_induced_subgraph(c5, {0, 1, 2, 3, 4});
    CHECK(all.vertices.size() == 5);
    CHECK(all.edges.size() == 5);

    Graph k4 = complete_graph(4);
    // edges (0,1),(0,2),(1,2) form the triangle on {0,1,2}
    Subgraph tri = edge_induced_subgraph(k4, {0, 1, 3});
    CHECK(tri.vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(classify_component(tri) == ComponentClass::Unicyclic);

    CHECK(code_of([&] { edge_induced_subgraph(c5, {7}); }) == Errc::UnknownEdgeId);
}

TEST_CASE("line graph of C_5 is C_5 with the canonical id rule") {
    Graph c5 = cycle_graph(5);
    LineGraphMap lm = line_graph(c5);
    CHECK(lm.line_graph.vertex_count() == 5);
    CHECK(lm.line_graph.edge_count() == 5);
    for (int e = 0; e < 5; ++e) {
        CHECK(lm.vertex_for_edge(e) == e);
        CHECK(lm.edge_for_vertex(e) == e);
        // consecutive edges of the cycle share a vertex
        CHECK(lm.line_graph.find_edge(e, (e + 1) % 5).has_value());
    }
    for (int v = 0; v < 5; ++v) CHECK(lm.line_graph.degree(v) == 2);
}

TEST_CASE("line graph small cases") {
    LineGraphMap p3 = line_graph(path_graph(3));
    CHECK(p3.line_graph.vertex_count() == 2);
    CHECK(p3.line_graph.edge_count() == 1);

    LineGraphMap star = line_graph(star_graph(3));
    CHECK(star.line_graph.vertex_count() == 3);
    CHECK(star.line_graph.edge_count() == 3); // triangle

    Graph edgeless = build_graph(4, {});
    CHECK(line_graph(edgeless).line_graph.vertex_count() == 0);
}

TEST_CASE("line graph size invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_connected_graph(7, 0.4, trial_seed(11, seed));
        LineGraphMap lm = line_graph(g);
        CHECK(lm.line_graph.vertex_count() == g.edge_count());
        int expected_edges = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int d = g.degree(v);
            expected_edges += d * (d - 1) / 2;
        }
        CHECK(lm.line_graph.edge_count() == expected_edges);
    }
}

TEST_CASE("root_tree levels and parent edges") {
    Graph p3 = path_graph(3);
    RootedTree t = root_tree(whole_subgraph(p3), 0);
    CHECK(t.level_of(0) == 0);
    CHECK(t.level_of(1) == 1);
    CHECK(t.level_of(2) == 2);
    CHECK(t.parent_edge_of(1) == 0);
    CHECK(t.parent_edge_of(2) == 1);

    Graph single = build_graph(1, {});
    RootedTree lone = root_tree(whole_subgraph(single), 0);
    CHECK(lone.level_of(0) == 0);
    CHECK(lone.parent_edge_of(0) == -1);

    Graph star = star_graph(3);
    RootedTree rooted_star = root_tree(whole_subgraph(star), 0);
    std::vector<EdgeId> parents;
    for (int leaf = 1; leaf <= 3; ++leaf) {
        CHECK(rooted_star.level_of(leaf) == 1);
        parents.push_back(rooted_star.parent_edge_of(leaf));
    }
    std::sort(parents.begin(), parents.end());
    CHECK(parents == std::vector<EdgeId>{0, 1, 2});

    CHECK(code_of([&] { root_tree(whole_subgraph(cycle_graph(3)), 0); }) == Errc::NotATree);
    CHECK(code_of([&] { root_tree(whole_subgraph(p3), 5); }) == Errc::RootNotInTree);
}

TEST_CASE("rooted tree structural properties on random trees") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_connected_graph(8, 0.35, trial_seed(13, seed));
        RootedTree t = spanning_tree(g, 0);
        const Graph& parent = *t.tree().parent;
        // every tree edge joins consecutive levels and is the parent edge of
        // exactly one endpoint
        std::vector<int> parent_edge_hits(static_cast<size_t>(parent.edge_count()), 0);
        for (EdgeId e : t.tree().edges) {
            auto [u, v] = parent.endpoints(e);
            CHECK(std::abs(t.level_of(u) - t.level_of(v)) == 1);
        }
        for (VertexId v : t.tree().vertices) {
            if (v == t.root()) continue;
            EdgeId pe = t.parent_edge_of(v);
            REQUIRE(pe >= 0);
            ++parent_edge_hits[static_cast<size_t>(pe)];
        }
        for (EdgeId e : t.tree().edges) CHECK(parent_edge_hits[static_cast<size_t>(e)] == 1);
    }
}

TEST_CASE("cycle_edge_set") {
    Graph tri = cycle_graph(3);
    CHECK(cycle_edge_set(whole_subgraph(tri)) == std::vector<EdgeId>{0, 1, 2});

    Graph tri_pendant = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    CHECK(cycle_edge_set(whole_subgraph(tri_pendant)) == std::vector<EdgeId>{0, 1, 2});

    CHECK(cycle_edge_set(whole_subgraph(cycle_graph(6))).size() == 6);

    CHECK(code_of([] { cycle_edge_set(whole_subgraph(path_graph(3))); }) == Errc::NotUnicyclic);
}

TEST_CASE("cycle_edge_set exhaustive on small unicyclic components") {
    int seen = 0;
    for_each_connected_graph(5, 8, [&](const Graph& g) {
        Subgraph whole = whole_subgraph(g);
        if (classify_component(whole) != ComponentClass::Unicyclic) return true;
        ++seen;
        std::vector<EdgeId> cycle = cycle_edge_set(whole);
        for (int e = 0; e < g.edge_count(); ++e) {
            std::vector<EdgeId> rest;
            for (int f = 0; f < g.edge_count(); ++f)
                if (f != e) rest.push_back(f);
            Subgraph cut = make_subgraph(g, whole.vertices, rest);
            auto comps = connected_components(cut);
            bool on_cycle = std::binary_search(cycle.begin(), cycle.end(), e);
            if (on_cycle) {
                // removing a cycle edge leaves one tree
                REQUIRE(comps.size() == 1);
                CHECK(classify_component(comps[0]) == ComponentClass::Tree);
            } else {
                // removing a pendant-side edge disconnects; the cycle stays in
                // one unicyclic piece, the rest are trees
                CHECK(comps.size() >= 2);
                int unicyclic = 0;
                for (const Subgraph& c : comps) {
                    if (c.edge_count() == c.vertex_count()) ++unicyclic;
                }
                CHECK(unicyclic == 1);
            }
        }
        return true;
    });
    CHECK(seen > 0);
}

TEST_CASE("spanning_tree deterministic BFS") {
    Graph p4 = path_graph(4);
    RootedTree self = spanning_tree(p4, 0);
    CHECK(self.tree().edges == std::vector<EdgeId>{0, 1, 2});

    RootedTree tri = spanning_tree(cycle_graph(3), 0);
    CHECK(tri.tree().edges == std::vector<EdgeId>{0, 2}); // (0,1) and (2,0)

    Graph c4 = cycle_graph(4);
    RootedTree t4 = spanning_tree(c4, 0);
    CHECK(t4.tree().edges.size() == 3);
    CHECK(t4.tree().contains_edge(0)); // (0,1)
    CHECK(t4.tree().contains_edge(3)); // (3,0)

    Graph disconnected = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(code_of([&] { spanning_tree(disconnected, 0); }) == Errc::NotConnected);
}

TEST_CASE("spanning_tree keeps degree-1 vertices and is reproducible") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_connected_graph(8, 0.35, trial_seed(17, seed));
        RootedTree a = spanning_tree(g, 0);
        RootedTree b = spanning_tree(g, 0);
        CHECK(a.tree().edges == b.tree().edges);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 1) CHECK(degree_in(a.tree(), v) == 1);
    }
}

TEST_CASE("is_steiner_tree") {
    Graph c5 = cycle_graph(5);
    Subgraph arc = make_subgraph(c5, {0, 1, 2}, {0, 1});
    CHECK(is_steiner_tree(c5, arc, {0, 2}).ok);

    Subgraph whole = whole_subgraph(c5);
    SteinerCheck cyc = is_steiner_tree(c5, whole, {0, 2});
    CHECK(!cyc.ok);
    CHECK(cyc.reason == SteinerCheck::Reason::NotTree);

    SteinerCheck missing = is_steiner_tree(c5, arc, {0, 3});
    CHECK(!missing.ok);
    CHECK(missing.reason == SteinerCheck::Reason::MissingTerminal);

    Graph other = cycle_graph(5);
    SteinerCheck foreign = is_steiner_tree(other, arc, {0, 2});
    CHECK(!foreign.ok);
    CHECK(foreign.reason == SteinerCheck::Reason::NotSubgraphOfHost);
}

} // TEST_SUITE("graph")
