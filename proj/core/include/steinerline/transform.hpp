#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinerline/components.hpp"
#include "steinerline/line_graph.hpp"
#include "steinerline/oracle.hpp"
#include "steinerline/rooted_tree.hpp"

namespace steinerline {

// k >= 2 edge ids of the host graph; the terminal set in the line graph is
// their image under the LineGraphMap.
struct TerminalEdgeSet {
    std::vector<EdgeId> edges; // sorted, unique
};

TerminalEdgeSet make_terminal_edge_set(const Graph& g, std::vector<EdgeId> edges);

std::vector<VertexId> line_terminals(const TerminalEdgeSet& s, const LineGraphMap& lmap);

enum class ProofCase { Case1, Case2 };

const char* proof_case_name(ProofCase c);

// Bookkeeping of the two-case split over the components of G[S_G].
// Case 1: every component is heavy; q1 holds all their vertices and a fresh
// vertex outside them is recorded. Case 2: heavy components feed q1/s1 while
// each tree/unicyclic component is rooted, its edges mapped to corresponding
// vertices (q2/s2).
struct CasePartition {
    ProofCase proof_case = ProofCase::Case2;
    std::vector<VertexId> q1;
    std::vector<VertexId> q2;
    std::vector<EdgeId> s1;
    std::vector<EdgeId> s2;
    std::map<EdgeId, VertexId> corr_vertex;     // domain = s2
    std::map<int, EdgeId> removed_cycle_edge;   // component index -> removed cycle edge
    std::map<int, VertexId> component_roots;    // component index -> root (tree/unicyclic only)
    std::optional<VertexId> extra_vertex;       // Case 1 only
    std::vector<ComponentClass> component_classes;
};

CasePartition partition_terminal_edges(const Graph& g, const TerminalEdgeSet& s_g);

// Q: the vertex terminal set the Steiner packing in G must connect.
TerminalSet terminal_vertex_set(const CasePartition& p);

// Root shared by every packing tree: the fresh vertex in Case 1, the smallest
// vertex of q2 in Case 2.
VertexId packing_root(const CasePartition& p);

// Restriction of the parent-edge map to the targets; the root must not be a
// target and every target must lie in the tree.
std::map<VertexId, EdgeId> corresponding_edges(const RootedTree& t, const std::vector<VertexId>& targets);

// L(T_r) plus the pendant line vertices attached by the two operations.
struct AugmentedLineTree {
    Subgraph base;
    std::vector<VertexId> added_terminals;
    std::map<VertexId, EdgeId> attach_edge; // added line vertex -> attaching line edge
};

// Attaches v_e to L(T_r) for an edge e whose endpoints both have
// corresponding edges (q1 targets). `r` indexes the tree being augmented.
AugmentedLineTree apply_operation_a(AugmentedLineTree aug, EdgeId e, int r,
                                    const std::vector<RootedTree>& packing,
                                    const std::vector<std::map<VertexId, EdgeId>>& corr_edges,
                                    const LineGraphMap& lmap);

// Attaches v_e to L(T_r) through the corresponding vertex of e (q2 side).
AugmentedLineTree apply_operation_b(AugmentedLineTree aug, EdgeId e, const RootedTree& t_r,
                                    const CasePartition& p, const LineGraphMap& lmap);

struct DisjointnessReport {
    enum class Failure { None, NotSteinerTree, SharedEdge, SharedVertex };
    bool pass = false;
    Failure failure = Failure::None;
    int tree_a = -1;
    int tree_b = -1;
    VertexId shared_vertex = -1;
    EdgeId shared_edge = -1;
    std::string detail;
};

// pass iff every tree is an s_l-Steiner tree of lg, pairwise edge
// intersections are empty, and pairwise vertex intersections equal s_l.
DisjointnessReport verify_internally_disjoint(const Graph& lg, const std::vector<Subgraph>& trees,
                                              const std::vector<VertexId>& s_l);

struct TransformResult {
    CasePartition partition;
    std::vector<Subgraph> trees; // m internally disjoint S_L-Steiner trees in lmap.line_graph
    DisjointnessReport verification;
};

// The full construction: root the packing trees, compute corresponding edges,
// augment each L(T_r) with Operations A and B, extract spanning trees and
// verify. Throws VerificationFailed if the verified postcondition does not
// hold (that indicates a bug, not bad input). The returned subgraphs live in
// lmap.line_graph, which the caller owns.
TransformResult transform_packing(const Graph& g, const TerminalEdgeSet& s_g, const PackingWitness& packing,
                                  const LineGraphMap& lmap);

struct SubsetOutcome {
    std::vector<EdgeId> subset;
    ProofCase proof_case = ProofCase::Case2;
    bool has_tree_component = false;
    bool has_unicyclic_component = false;
    bool has_heavy_component = false;
    int trees_emitted = 0;
    bool verified = false;
    std::string failure; // empty when verified
};

struct TheoremReport {
    int k = 0;
    int lambda_k = 0;
    int kappa_k_line = 0;
    bool kappa_ge_lambda = false;
    bool sharp = false; // kappa_k(L(G)) == lambda_k(G)
    bool all_verified = false;
    int case1_subsets = 0;
    int case2_subsets = 0;
    int case2_with_tree = 0;
    int case2_with_unicyclic = 0;
    std::vector<SubsetOutcome> subsets;
};

// Replays the construction for every k-subset of E(G): builds Q, takes the
// first lambda_k(G) trees of a maximum edge-disjoint Q-packing, transforms
// and verifies. Also compares kappa_k(L(G)) against lambda_k(G) at oracle
// level. Construction failures are recorded per subset, not thrown.
TheoremReport theorem_check(const Graph& g, int k, const SizeLimits& limits = {});

} // namespace steinerline
