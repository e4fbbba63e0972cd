#include "steinerline/transform.hpp"

#include <algorithm>
#include <sstream>

namespace steinerline {

const char* proof_case_name(ProofCase c) {
    return c == ProofCase::Case1 ? "case1" : "case2";
}

TerminalEdgeSet make_terminal_edge_set(const Graph& g, std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.size() < 2)
        throw Error(Errc::KOutOfRange, "a terminal edge set needs at least 2 distinct edges");
    for (EdgeId e : edges)
        if (e < 0 || e >= g.edge_count())
            throw Error(Errc::UnknownEdgeId, "edge id " + std::to_string(e));
    return TerminalEdgeSet{std::move(edges)};
}

std::vector<VertexId> line_terminals(const TerminalEdgeSet& s, const LineGraphMap& lmap) {
    std::vector<VertexId> out;
    out.reserve(s.edges.size());
    for (EdgeId e : s.edges) out.push_back(lmap.vertex_for_edge(e));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// The endpoint of tree edge e on the deeper level, i.e. the vertex whose
// parent edge is e.
VertexId child_endpoint(const RootedTree& t, EdgeId e) {
    auto [u, v] = t.tree().parent->endpoints(e);
    if (t.parent_edge_of(u) == e) return u;
    if (t.parent_edge_of(v) == e) return v;
    throw Error(Errc::PrereqViolated, "edge " + std::to_string(e) + " is not a parent edge in the rooted tree");
}

} // namespace

CasePartition partition_terminal_edges(const Graph& g, const TerminalEdgeSet& s_g) {
    int k = static_cast<int>(s_g.edges.size());
    if (g.vertex_count() < k || g.edge_count() < k)
        throw Error(Errc::HypothesisViolated, "the host graph needs at least k vertices and k edges (k = " +
                                                  std::to_string(k) + ")");
    if (!subgraph_is_connected(whole_subgraph(g)))
        throw Error(Errc::Disconnected, "the host graph must be connected");

    Subgraph induced = edge_induced_subgraph(g, s_g.edges);
    std::vector<Subgraph> comps = connected_components(induced);

    CasePartition p;
    p.component_classes.reserve(comps.size());
    for (const Subgraph& c : comps) p.component_classes.push_back(classify_component(c));

    bool all_heavy = std::all_of(p.component_classes.begin(), p.component_classes.end(),
                                 [](ComponentClass c) { return c == ComponentClass::Heavy; });

    if (all_heavy) {
        p.proof_case = ProofCase::Case1;
        p.q1 = induced.vertices;
        p.s1 = s_g.edges;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!induced.contains_vertex(v)) {
                p.extra_vertex = v;
                break;
            }
        }
        // |V(G[S_G])| <= k-1 < |V(G)| in Case 1, so a fresh vertex exists.
        if (!p.extra_vertex)
            throw Error(Errc::PrereqViolated, "internal: no vertex available outside the induced subgraph");
        return p;
    }

    p.proof_case = ProofCase::Case2;
    for (size_t idx = 0; idx < comps.size(); ++idx) {
        const Subgraph& comp = comps[idx];
        switch (p.component_classes[idx]) {
            case ComponentClass::Heavy:
                p.q1.insert(p.q1.end(), comp.vertices.begin(), comp.vertices.end());
                p.s1.insert(p.s1.end(), comp.edges.begin(), comp.edges.end());
                break;
            case ComponentClass::Tree: {
                VertexId root = comp.vertices.front();
                RootedTree rooted = root_tree(comp, root);
                p.component_roots[static_cast<int>(idx)] = root;
                for (EdgeId e : comp.edges) {
                    VertexId c = child_endpoint(rooted, e);
                    p.corr_vertex[e] = c;
                    p.q2.push_back(c);
                }
                p.s2.insert(p.s2.end(), comp.edges.begin(), comp.edges.end());
                break;
            }
            case ComponentClass::Unicyclic: {
                std::vector<EdgeId> cycle = cycle_edge_set(comp);
                EdgeId removed = cycle.front(); // smallest cycle edge id
                auto [a, b] = g.endpoints(removed);
                VertexId root = std::min(a, b);
                std::vector<EdgeId> tree_edges;
                for (EdgeId e : comp.edges)
                    if (e != removed) tree_edges.push_back(e);
                RootedTree rooted = root_tree(make_subgraph(g, comp.vertices, tree_edges), root);
                p.component_roots[static_cast<int>(idx)] = root;
                p.removed_cycle_edge[static_cast<int>(idx)] = removed;
                for (EdgeId e : comp.edges) {
                    VertexId c = (e == removed) ? root : child_endpoint(rooted, e);
                    p.corr_vertex[e] = c;
                    p.q2.push_back(c);
                }
                p.s2.insert(p.s2.end(), comp.edges.begin(), comp.edges.end());
                break;
            }
        }
    }
    std::sort(p.q1.begin(), p.q1.end());
    std::sort(p.q2.begin(), p.q2.end());
    std::sort(p.s1.begin(), p.s1.end());
    std::sort(p.s2.begin(), p.s2.end());
    return p;
}

TerminalSet terminal_vertex_set(const CasePartition& p) {
    std::vector<VertexId> q = p.q1;
    if (p.proof_case == ProofCase::Case1) {
        q.push_back(*p.extra_vertex);
    } else {
        q.insert(q.end(), p.q2.begin(), p.q2.end());
    }
    return make_terminal_set(std::move(q));
}

VertexId packing_root(const CasePartition& p) {
    if (p.proof_case == ProofCase::Case1) return *p.extra_vertex;
    if (p.q2.empty())
        throw Error(Errc::PrereqViolated, "internal: Case 2 partition with empty q2");
    return p.q2.front();
}

std::map<VertexId, EdgeId> corresponding_edges(const RootedTree& t, const std::vector<VertexId>& targets) {
    std::map<VertexId, EdgeId> out;
    for (VertexId v : targets) {
        if (v == t.root())
            throw Error(Errc::RootInTargets, "vertex " + std::to_string(v) + " is the root");
        if (!t.tree().contains_vertex(v))
            throw Error(Errc::TargetNotInTree, "vertex " + std::to_string(v) + " is not in the tree");
        out[v] = t.parent_edge_of(v);
    }
    return out;
}

namespace {

AugmentedLineTree attach_line_vertex(AugmentedLineTree aug, EdgeId source_edge, EdgeId anchor_tree_edge,
                                     const LineGraphMap& lmap) {
    VertexId v_e = lmap.vertex_for_edge(source_edge);
    VertexId v_anchor = lmap.vertex_for_edge(anchor_tree_edge);
    std::optional<EdgeId> line_edge = lmap.line_graph.find_edge(v_e, v_anchor);
    if (!line_edge)
        throw Error(Errc::NotAdjacentInLineGraph,
                    "internal: line vertices " + std::to_string(v_e) + " and " + std::to_string(v_anchor) +
                        " are not adjacent");

    std::vector<VertexId> vs = aug.base.vertices;
    std::vector<EdgeId> es = aug.base.edges;
    vs.push_back(v_e);
    es.push_back(*line_edge);
    aug.base = make_subgraph(*aug.base.parent, std::move(vs), std::move(es));
    aug.added_terminals.push_back(v_e);
    aug.attach_edge[v_e] = *line_edge;
    return aug;
}

} // namespace

AugmentedLineTree apply_operation_a(AugmentedLineTree aug, EdgeId e, int r,
                                    const std::vector<RootedTree>& packing,
                                    const std::vector<std::map<VertexId, EdgeId>>& corr_edges,
                                    const LineGraphMap& lmap) {
    const RootedTree& t_r = packing[static_cast<size_t>(r)];
    if (t_r.tree().contains_edge(e)) return aug; // v_e already in L(T_r)

    const Graph& g = *t_r.tree().parent;
    auto [vi, vj] = g.endpoints(e);
    const auto& corr_r = corr_edges[static_cast<size_t>(r)];
    auto corr_of = [&](VertexId v) {
        auto it = corr_r.find(v);
        if (it == corr_r.end())
            throw Error(Errc::PrereqViolated,
                        "endpoint " + std::to_string(v) + " of edge " + std::to_string(e) +
                            " has no corresponding edge");
        return it->second;
    };

    int owner = -1;
    for (size_t s = 0; s < packing.size(); ++s) {
        if (static_cast<int>(s) != r && packing[s].tree().contains_edge(e)) {
            owner = static_cast<int>(s);
            break;
        }
    }

    VertexId anchor_endpoint;
    if (owner >= 0) {
        // e is the corresponding edge of exactly one of its endpoints in the
        // owning tree; attach through the other endpoint's edge in T_r.
        const RootedTree& t_s = packing[static_cast<size_t>(owner)];
        bool vi_child = t_s.parent_edge_of(vi) == e;
        bool vj_child = t_s.parent_edge_of(vj) == e;
        if (vi_child == vj_child)
            throw Error(Errc::PrereqViolated,
                        "internal: edge " + std::to_string(e) + " is not the parent edge of exactly one endpoint");
        anchor_endpoint = vi_child ? vj : vi;
    } else {
        // e lies in no packing tree; both corresponding edges work, take the
        // one with the smaller id.
        anchor_endpoint = (corr_of(vi) < corr_of(vj)) ? vi : vj;
    }
    return attach_line_vertex(std::move(aug), e, corr_of(anchor_endpoint), lmap);
}

AugmentedLineTree apply_operation_b(AugmentedLineTree aug, EdgeId e, const RootedTree& t_r,
                                    const CasePartition& p, const LineGraphMap& lmap) {
    if (t_r.tree().contains_edge(e)) return aug;

    auto it = p.corr_vertex.find(e);
    if (it == p.corr_vertex.end())
        throw Error(Errc::PrereqViolated, "edge " + std::to_string(e) + " has no corresponding vertex");
    VertexId vi = it->second;
    if (!t_r.tree().contains_vertex(vi))
        throw Error(Errc::PrereqViolated,
                    "corresponding vertex " + std::to_string(vi) + " is missing from the packing tree");

    EdgeId anchor;
    if (vi != t_r.root()) {
        anchor = t_r.parent_edge_of(vi);
    } else {
        anchor = -1;
        for (EdgeId f : t_r.tree().parent->incident_edges(vi)) {
            if (t_r.tree().contains_edge(f)) {
                anchor = f;
                break; // incident_edges is ascending, first hit is smallest
            }
        }
        if (anchor < 0)
            throw Error(Errc::PrereqViolated,
                        "internal: no tree edge incident to vertex " + std::to_string(vi));
    }
    // e is not a tree edge here, so anchor != e automatically.
    return attach_line_vertex(std::move(aug), e, anchor, lmap);
}

DisjointnessReport verify_internally_disjoint(const Graph& lg, const std::vector<Subgraph>& trees,
                                              const std::vector<VertexId>& s_l) {
    DisjointnessReport report;
    std::vector<VertexId> terminals = s_l;
    std::sort(terminals.begin(), terminals.end());

    for (size_t r = 0; r < trees.size(); ++r) {
        SteinerCheck check = is_steiner_tree(lg, trees[r], terminals);
        if (!check) {
            report.failure = DisjointnessReport::Failure::NotSteinerTree;
            report.tree_a = static_cast<int>(r);
            std::ostringstream os;
            os << "tree " << r << " is not an S_L-Steiner tree of the line graph";
            report.detail = os.str();
            return report;
        }
    }
    for (size_t r = 0; r < trees.size(); ++r) {
        for (size_t s = r + 1; s < trees.size(); ++s) {
            std::vector<EdgeId> shared_edges;
            std::set_intersection(trees[r].edges.begin(), trees[r].edges.end(), trees[s].edges.begin(),
                                  trees[s].edges.end(), std::back_inserter(shared_edges));
            if (!shared_edges.empty()) {
                report.failure = DisjointnessReport::Failure::SharedEdge;
                report.tree_a = static_cast<int>(r);
                report.tree_b = static_cast<int>(s);
                report.shared_edge = shared_edges.front();
                std::ostringstream os;
                os << "trees " << r << " and " << s << " share line edge " << shared_edges.front();
                report.detail = os.str();
                return report;
            }
            std::vector<VertexId> shared_vertices;
            std::set_intersection(trees[r].vertices.begin(), trees[r].vertices.end(), trees[s].vertices.begin(),
                                  trees[s].vertices.end(), std::back_inserter(shared_vertices));
            for (VertexId v : shared_vertices) {
                if (!std::binary_search(terminals.begin(), terminals.end(), v)) {
                    report.failure = DisjointnessReport::Failure::SharedVertex;
                    report.tree_a = static_cast<int>(r);
                    report.tree_b = static_cast<int>(s);
                    report.shared_vertex = v;
                    std::ostringstream os;
                    os << "trees " << r << " and " << s << " share non-terminal line vertex " << v;
                    report.detail = os.str();
                    return report;
                }
            }
        }
    }
    report.pass = true;
    return report;
}

TransformResult transform_packing(const Graph& g, const TerminalEdgeSet& s_g, const PackingWitness& packing,
                                  const LineGraphMap& lmap) {
    if (packing.mode != DisjointMode::EdgeDisjoint)
        throw Error(Errc::PackingMismatch, "the construction consumes an edge-disjoint packing");
    if (packing.trees.empty())
        throw Error(Errc::PackingMismatch, "the packing is empty");

    CasePartition partition = partition_terminal_edges(g, s_g);
    TerminalSet q = terminal_vertex_set(partition);
    if (packing.terminals.vertices != q.vertices) {
        std::ostringstream os;
        os << "packing terminals differ from the required terminal set Q";
        throw Error(Errc::PackingMismatch, os.str());
    }
    for (size_t r = 0; r < packing.trees.size(); ++r) {
        if (!is_steiner_tree(g, packing.trees[r], q.vertices))
            throw Error(Errc::PackingMismatch, "packing tree " + std::to_string(r) + " is not a Q-Steiner tree");
        for (size_t s = r + 1; s < packing.trees.size(); ++s) {
            std::vector<EdgeId> shared;
            std::set_intersection(packing.trees[r].edges.begin(), packing.trees[r].edges.end(),
                                  packing.trees[s].edges.begin(), packing.trees[s].edges.end(),
                                  std::back_inserter(shared));
            if (!shared.empty())
                throw Error(Errc::NotEdgeDisjoint, "packing trees " + std::to_string(r) + " and " +
                                                       std::to_string(s) + " share edge " +
                                                       std::to_string(shared.front()));
        }
    }

    VertexId root = packing_root(partition);
    std::vector<RootedTree> rooted;
    rooted.reserve(packing.trees.size());
    for (const Subgraph& t : packing.trees) rooted.push_back(root_tree(t, root));

    std::vector<std::map<VertexId, EdgeId>> corr_edges;
    corr_edges.reserve(rooted.size());
    for (const RootedTree& t : rooted) corr_edges.push_back(corresponding_edges(t, partition.q1));

    int m = static_cast<int>(packing.trees.size());
    std::vector<AugmentedLineTree> aug(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) {
        std::vector<VertexId> line_vertices;
        for (EdgeId e : rooted[static_cast<size_t>(r)].tree().edges)
            line_vertices.push_back(lmap.vertex_for_edge(e));
        aug[static_cast<size_t>(r)].base = vertex_induced_subgraph(lmap.line_graph, line_vertices);
    }
    for (int r = 0; r < m; ++r) {
        for (EdgeId e : partition.s1)
            aug[static_cast<size_t>(r)] =
                apply_operation_a(std::move(aug[static_cast<size_t>(r)]), e, r, rooted, corr_edges, lmap);
        for (EdgeId e : partition.s2)
            aug[static_cast<size_t>(r)] =
                apply_operation_b(std::move(aug[static_cast<size_t>(r)]), e, rooted[static_cast<size_t>(r)],
                                  partition, lmap);
    }

    TransformResult result;
    result.partition = std::move(partition);
    result.trees.reserve(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) {
        // Root the spanning tree at the line vertex of the smallest tree edge;
        // pendant added terminals survive any spanning tree.
        EdgeId smallest = rooted[static_cast<size_t>(r)].tree().edges.front();
        RootedTree star = spanning_tree(aug[static_cast<size_t>(r)].base, lmap.vertex_for_edge(smallest));
        result.trees.push_back(star.tree());
    }

    result.verification = verify_internally_disjoint(lmap.line_graph, result.trees, line_terminals(s_g, lmap));
    if (!result.verification.pass)
        throw Error(Errc::VerificationFailed,
                    "construction postcondition violated (" + result.verification.detail +
                        "); this indicates a bug, the failing instance is the certificate");
    return result;
}

TheoremReport theorem_check(const Graph& g, int k, const SizeLimits& limits) {
    int n = g.vertex_count();
    int m_edges = g.edge_count();
    if (n < k || m_edges < k)
        throw Error(Errc::HypothesisViolated,
                    "theorem hypotheses need at least k vertices and k edges (k = " + std::to_string(k) + ")");
    if (!subgraph_is_connected(whole_subgraph(g)))
        throw Error(Errc::Disconnected, "the host graph must be connected");

    TheoremReport report;
    report.k = k;
    report.lambda_k = tree_connectivity(g, k, DisjointMode::EdgeDisjoint, limits).value;

    LineGraphMap lmap = line_graph(g);
    report.all_verified = true;

    std::vector<EdgeId> subset(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = i;
    while (true) {
        SubsetOutcome outcome;
        outcome.subset = subset;
        bool partitioned = false;
        try {
            TerminalEdgeSet tes = make_terminal_edge_set(g, subset);
            CasePartition partial = partition_terminal_edges(g, tes);
            outcome.proof_case = partial.proof_case;
            partitioned = true;
            for (ComponentClass c : partial.component_classes) {
                if (c == ComponentClass::Tree) outcome.has_tree_component = true;
                if (c == ComponentClass::Unicyclic) outcome.has_unicyclic_component = true;
                if (c == ComponentClass::Heavy) outcome.has_heavy_component = true;
            }

            TerminalSet q = terminal_vertex_set(partial);
            PackingWitness full = max_disjoint_packing(g, q, DisjointMode::EdgeDisjoint, limits);
            if (full.count() < report.lambda_k) {
                outcome.failure = "maximum Q-packing smaller than lambda_k, contradicting the monotonicity of "
                                  "the packing number";
            } else {
                PackingWitness truncated;
                truncated.terminals = full.terminals;
                truncated.mode = full.mode;
                truncated.trees.assign(full.trees.begin(), full.trees.begin() + report.lambda_k);
                TransformResult t = transform_packing(g, tes, truncated, lmap);
                outcome.trees_emitted = static_cast<int>(t.trees.size());
                if (outcome.trees_emitted != report.lambda_k)
                    outcome.failure = "transform emitted " + std::to_string(outcome.trees_emitted) +
                                      " trees instead of " + std::to_string(report.lambda_k);
                else
                    outcome.verified = t.verification.pass;
            }
        } catch (const Error& err) {
            outcome.failure = err.what();
        }
        if (!outcome.verified && outcome.failure.empty()) outcome.failure = "verification failed";
        if (!outcome.verified) report.all_verified = false;

        if (partitioned) {
            if (outcome.proof_case == ProofCase::Case1) {
                ++report.case1_subsets;
            } else {
                ++report.case2_subsets;
                if (outcome.has_tree_component) ++report.case2_with_tree;
                if (outcome.has_unicyclic_component) ++report.case2_with_unicyclic;
            }
        }
        report.subsets.push_back(std::move(outcome));

        int i = k - 1;
        while (i >= 0 && subset[static_cast<size_t>(i)] == m_edges - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
    }

    report.kappa_k_line = tree_connectivity(lmap.line_graph, k, DisjointMode::InternallyDisjoint, limits).value;
    report.kappa_ge_lambda = report.kappa_k_line >= report.lambda_k;
    if (!report.kappa_ge_lambda) report.all_verified = false;
    report.sharp = report.kappa_k_line == report.lambda_k;
    return report;
}

} // namespace steinerline
