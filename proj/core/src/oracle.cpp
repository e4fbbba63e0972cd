#include "steinerline/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>

namespace steinerline {

const char* disjoint_mode_name(DisjointMode m) {
    return m == DisjointMode::EdgeDisjoint ? "edge" : "internal";
}

bool TerminalSet::contains(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

TerminalSet make_terminal_set(std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.size() < 2)
        throw Error(Errc::KOutOfRange, "a terminal set needs at least 2 distinct vertices");
    return TerminalSet{std::move(vertices)};
}

Subgraph prune_to_terminal_leaves(const Subgraph& t, const TerminalSet& s) {
    const Graph& g = *t.parent;
    if (!is_steiner_tree(g, t, s.vertices))
        throw Error(Errc::NotSteinerTree, "prune_to_terminal_leaves needs an S-Steiner tree");

    std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<bool> edge_live(static_cast<size_t>(g.edge_count()), false);
    std::vector<bool> vertex_live(static_cast<size_t>(g.vertex_count()), false);
    for (EdgeId e : t.edges) {
        edge_live[static_cast<size_t>(e)] = true;
        auto [u, v] = g.endpoints(e);
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    for (VertexId v : t.vertices) vertex_live[static_cast<size_t>(v)] = true;

    std::vector<VertexId> queue;
    for (VertexId v : t.vertices)
        if (deg[static_cast<size_t>(v)] == 1 && !s.contains(v)) queue.push_back(v);
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        if (!vertex_live[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] != 1 || s.contains(v))
            continue;
        vertex_live[static_cast<size_t>(v)] = false;
        for (EdgeId e : g.incident_edges(v)) {
            if (!edge_live[static_cast<size_t>(e)]) continue;
            edge_live[static_cast<size_t>(e)] = false;
            auto [a, b] = g.endpoints(e);
            VertexId other = (a == v) ? b : a;
            --deg[static_cast<size_t>(v)];
            --deg[static_cast<size_t>(other)];
            if (deg[static_cast<size_t>(other)] == 1 && !s.contains(other)) queue.push_back(other);
        }
    }

    std::vector<VertexId> vs;
    std::vector<EdgeId> es;
    for (VertexId v : t.vertices)
        if (vertex_live[static_cast<size_t>(v)]) vs.push_back(v);
    for (EdgeId e : t.edges)
        if (edge_live[static_cast<size_t>(e)]) es.push_back(e);
    return make_subgraph(g, std::move(vs), std::move(es));
}

namespace {

constexpr int kMaskWidth = 64;

struct TreeRec {
    uint64_t edge_mask = 0;
    uint64_t vertex_mask = 0;
    int edge_count = 0;
};

// Union-find without path compression so unions can be undone in O(1).
struct UndoDsu {
    std::array<int8_t, kMaskWidth> parent{};
    std::array<int8_t, kMaskWidth> size{};

    void init(int n) {
        for (int i = 0; i < n; ++i) {
            parent[static_cast<size_t>(i)] = static_cast<int8_t>(i);
            size[static_cast<size_t>(i)] = 1;
        }
    }
    int find(int x) const {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    }
    // Both arguments must be roots; returns the root that got attached.
    int unite_roots(int a, int b) {
        if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
        parent[static_cast<size_t>(b)] = static_cast<int8_t>(a);
        size[static_cast<size_t>(a)] = static_cast<int8_t>(size[static_cast<size_t>(a)] + size[static_cast<size_t>(b)]);
        return b;
    }
    void undo(int attached) {
        int root = parent[static_cast<size_t>(attached)];
        size[static_cast<size_t>(root)] =
            static_cast<int8_t>(size[static_cast<size_t>(root)] - size[static_cast<size_t>(attached)]);
        parent[static_cast<size_t>(attached)] = static_cast<int8_t>(attached);
    }
};

// Enumerates every subtree with terminal cover and leaves inside the terminal
// set, in lexicographic order of the sorted edge-id sequence. Edges are
// decided in id order with the include branch explored first; a valid tree is
// emitted and not extended (no minimal Steiner tree contains another).
// allowed_edges restricts the enumeration to a subgraph; the emit callback
// may return false to stop the stream.
template <typename Emit>
class TreeEnumerator {
public:
    TreeEnumerator(const Graph& g, uint64_t terminal_vmask, uint64_t allowed_edges, Emit emit)
        : g_(g), n_(g.vertex_count()), m_(g.edge_count()), terminal_vmask_(terminal_vmask),
          allowed_edges_(allowed_edges), emit_(emit) {
        vertex_incident_.assign(static_cast<size_t>(n_), 0);
        for (int e = 0; e < m_; ++e) {
            auto [u, v] = g.endpoints(e);
            vertex_incident_[static_cast<size_t>(u)] |= 1ull << e;
            vertex_incident_[static_cast<size_t>(v)] |= 1ull << e;
        }
        dsu_.init(n_);
        deg_.fill(0);
    }

    void run() { rec(0); }

private:
    bool current_is_valid_tree() const {
        if (chosen_count_ == 0) return false;
        if (touched_count_ - chosen_count_ != 1) return false; // one component
        if ((terminal_vmask_ & ~touched_vmask_) != 0) return false;
        uint64_t rest = touched_vmask_;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (deg_[static_cast<size_t>(v)] == 1 && !((terminal_vmask_ >> v) & 1)) return false;
        }
        return true;
    }

    // Future edges usable from this node on: allowed, id >= idx, not closing
    // a cycle among the current components. Sets completion_ok_ = false when
    // no completion can reach a valid tree (dead non-terminal leaf, an
    // unreachable terminal, or terminals/touched vertices that cannot merge).
    uint64_t feasible_future(int idx) {
        completion_ok_ = true;
        uint64_t future = 0;
        uint64_t undecided = allowed_edges_ & ((idx >= kMaskWidth) ? 0ull : ~((1ull << idx) - 1));
        UndoDsu closure = dsu_;
        while (undecided) {
            int e = std::countr_zero(undecided);
            undecided &= undecided - 1;
            auto [u, v] = g_.endpoints(e);
            if (dsu_.find(u) == dsu_.find(v)) continue;
            future |= 1ull << e;
            int ru = closure.find(u), rv = closure.find(v);
            if (ru != rv) closure.unite_roots(ru, rv);
        }
        // A leaf outside the terminal set must still be able to grow; an
        // untouched terminal must still be reachable by some edge.
        uint64_t rest = touched_vmask_;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (deg_[static_cast<size_t>(v)] == 1 && !((terminal_vmask_ >> v) & 1) &&
                (vertex_incident_[static_cast<size_t>(v)] & future) == 0) {
                completion_ok_ = false;
                return future;
            }
        }
        // All terminals and all touched vertices must be able to end up in
        // one component.
        uint64_t must_connect = terminal_vmask_ | touched_vmask_;
        int root = closure.find(std::countr_zero(must_connect));
        rest = must_connect;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (closure.find(v) != root) {
                completion_ok_ = false;
                return future;
            }
        }
        return future;
    }

    // Branches over the id of the next edge to include; ids in between are
    // implicitly excluded, which keeps the lexicographic emit order without
    // spending a recursion level per excluded edge.
    void rec(int idx) {
        if (stop_) return;
        if (current_is_valid_tree()) {
            if (!emit_(TreeRec{chosen_mask_, touched_vmask_, chosen_count_})) stop_ = true;
            return;
        }
        if (idx >= m_) return;
        uint64_t future = feasible_future(idx);
        if (!completion_ok_) return;

        uint64_t rest = future;
        while (rest && !stop_) {
            int e = std::countr_zero(rest);
            rest &= rest - 1;
            auto [u, v] = g_.endpoints(e);
            int ru = dsu_.find(u), rv = dsu_.find(v);
            if (ru == rv) continue;
            int attached = dsu_.unite_roots(ru, rv);
            uint64_t prev_touched = touched_vmask_;
            int prev_touched_count = touched_count_;
            chosen_mask_ |= 1ull << e;
            ++chosen_count_;
            for (VertexId w : {u, v}) {
                if (!((touched_vmask_ >> w) & 1)) {
                    touched_vmask_ |= 1ull << w;
                    ++touched_count_;
                }
                ++deg_[static_cast<size_t>(w)];
            }
            rec(e + 1);
            --deg_[static_cast<size_t>(u)];
            --deg_[static_cast<size_t>(v)];
            --chosen_count_;
            chosen_mask_ &= ~(1ull << e);
            touched_vmask_ = prev_touched;
            touched_count_ = prev_touched_count;
            dsu_.undo(attached);
        }
    }

    const Graph& g_;
    int n_, m_;
    uint64_t terminal_vmask_;
    uint64_t allowed_edges_;
    Emit emit_;
    std::vector<uint64_t> vertex_incident_;
    UndoDsu dsu_;
    std::array<int8_t, kMaskWidth> deg_{};
    uint64_t chosen_mask_ = 0;
    uint64_t touched_vmask_ = 0;
    int chosen_count_ = 0;
    int touched_count_ = 0;
    bool stop_ = false;
    bool completion_ok_ = true;
};

// Minimum-edge Steiner tree for the terminals over the allowed edges, by the
// Dreyfus-Wagner subset DP on unit weights. Used as a greedy building block:
// a minimum tree never has a non-terminal leaf. Returns nothing when the
// terminals are not connected by the allowed edges.
std::optional<TreeRec> min_steiner_tree(const Graph& g, const std::vector<VertexId>& terminals,
                                        uint64_t allowed_edges) {
    const int n = g.vertex_count();
    const int k = static_cast<int>(terminals.size());
    constexpr int kInf = 1 << 20;

    // All-pairs BFS distances and predecessor edges over allowed edges.
    std::vector<std::vector<int>> dist(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), kInf));
    std::vector<std::vector<EdgeId>> via(static_cast<size_t>(n), std::vector<EdgeId>(static_cast<size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        auto& d = dist[static_cast<size_t>(s)];
        auto& p = via[static_cast<size_t>(s)];
        d[static_cast<size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (auto [y, e] : g.adjacency(x)) {
                if (!((allowed_edges >> e) & 1) || d[static_cast<size_t>(y)] != kInf) continue;
                d[static_cast<size_t>(y)] = d[static_cast<size_t>(x)] + 1;
                p[static_cast<size_t>(y)] = e;
                queue.push_back(y);
            }
        }
    }

    const int full = (1 << k) - 1;
    // dp[mask][v]: cheapest tree covering terminals in mask plus vertex v.
    std::vector<std::vector<int>> dp(static_cast<size_t>(full + 1), std::vector<int>(static_cast<size_t>(n), kInf));
    struct Choice {
        int split = 0;   // nonzero: merge of (split, mask^split) at v
        int extend = -1; // >= 0: extend from vertex `extend` along a shortest path
    };
    std::vector<std::vector<Choice>> choice(static_cast<size_t>(full + 1),
                                            std::vector<Choice>(static_cast<size_t>(n)));
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n; ++v)
            dp[static_cast<size_t>(1 << i)][static_cast<size_t>(v)] =
                dist[static_cast<size_t>(terminals[static_cast<size_t>(i)])][static_cast<size_t>(v)];

    for (int mask = 1; mask <= full; ++mask) {
        if ((mask & (mask - 1)) == 0) continue;
        auto& row = dp[static_cast<size_t>(mask)];
        for (int v = 0; v < n; ++v) {
            for (int sub = (mask - 1) & mask; sub > (mask ^ sub); sub = (sub - 1) & mask) {
                int other = mask ^ sub;
                int cost = dp[static_cast<size_t>(sub)][static_cast<size_t>(v)] +
                           dp[static_cast<size_t>(other)][static_cast<size_t>(v)];
                if (cost < row[static_cast<size_t>(v)]) {
                    row[static_cast<size_t>(v)] = cost;
                    choice[static_cast<size_t>(mask)][static_cast<size_t>(v)] = Choice{sub, -1};
                }
            }
        }
        // Relax through shortest paths (Dijkstra pass is overkill at unit
        // weights and this size; a double loop suffices).
        for (int v = 0; v < n; ++v) {
            for (int u = 0; u < n; ++u) {
                if (u == v) continue;
                int cost = dp[static_cast<size_t>(mask)][static_cast<size_t>(u)] +
                           dist[static_cast<size_t>(u)][static_cast<size_t>(v)];
                if (cost < row[static_cast<size_t>(v)]) {
                    row[static_cast<size_t>(v)] = cost;
                    choice[static_cast<size_t>(mask)][static_cast<size_t>(v)] = Choice{0, u};
                }
            }
        }
    }

    VertexId anchor = terminals.front();
    if (dp[static_cast<size_t>(full)][static_cast<size_t>(anchor)] >= kInf) return std::nullopt;

    // Reconstruct the edge set.
    uint64_t edges = 0;
    auto add_path = [&](int from, int to) {
        int x = to;
        while (x != from) {
            EdgeId e = via[static_cast<size_t>(from)][static_cast<size_t>(x)];
            edges |= 1ull << e;
            auto [a, b] = g.endpoints(e);
            x = (x == a) ? b : a;
        }
    };
    std::vector<std::pair<int, int>> work{{full, anchor}};
    while (!work.empty()) {
        auto [mask, v] = work.back();
        work.pop_back();
        if ((mask & (mask - 1)) == 0) {
            int t = terminals[static_cast<size_t>(std::countr_zero(static_cast<unsigned>(mask)))];
            add_path(t, v);
            continue;
        }
        Choice c = choice[static_cast<size_t>(mask)][static_cast<size_t>(v)];
        if (c.extend >= 0) {
            add_path(c.extend, v);
            work.push_back({mask, c.extend});
        } else {
            work.push_back({c.split, v});
            work.push_back({mask ^ c.split, v});
        }
    }

    TreeRec rec;
    rec.edge_mask = edges;
    rec.edge_count = std::popcount(edges);
    uint64_t em = edges;
    while (em) {
        int e = std::countr_zero(em);
        em &= em - 1;
        auto [a, b] = g.endpoints(e);
        rec.vertex_mask |= (1ull << a) | (1ull << b);
    }
    return rec;
}

// Maximum number of internally disjoint u-v paths (vertex Menger) by
// node-splitting unit flow. Exact upper bound for the |S| = 2 internal mode.
int internal_pair_flow(const Graph& g, VertexId u, VertexId v) {
    int n = g.vertex_count();
    int nodes = 2 * n;
    auto in_node = [](int x) { return 2 * x; };
    auto out_node = [](int x) { return 2 * x + 1; };
    std::vector<std::vector<int>> cap(static_cast<size_t>(nodes), std::vector<int>(static_cast<size_t>(nodes), 0));
    for (int x = 0; x < n; ++x)
        cap[static_cast<size_t>(in_node(x))][static_cast<size_t>(out_node(x))] = (x == u || x == v) ? nodes : 1;
    for (const auto& [a, b] : g.edges()) {
        cap[static_cast<size_t>(out_node(a))][static_cast<size_t>(in_node(b))] = 1;
        cap[static_cast<size_t>(out_node(b))][static_cast<size_t>(in_node(a))] = 1;
    }
    int source = out_node(u), sink = in_node(v);
    int flow = 0;
    while (true) {
        std::vector<int> prev(static_cast<size_t>(nodes), -1);
        std::vector<int> queue{source};
        prev[static_cast<size_t>(source)] = source;
        for (size_t head = 0; head < queue.size() && prev[static_cast<size_t>(sink)] == -1; ++head) {
            int x = queue[head];
            for (int y = 0; y < nodes; ++y)
                if (prev[static_cast<size_t>(y)] == -1 && cap[static_cast<size_t>(x)][static_cast<size_t>(y)] > 0) {
                    prev[static_cast<size_t>(y)] = x;
                    queue.push_back(y);
                }
        }
        if (prev[static_cast<size_t>(sink)] == -1) break;
        for (int x = sink; x != source; x = prev[static_cast<size_t>(x)]) {
            int p = prev[static_cast<size_t>(x)];
            cap[static_cast<size_t>(p)][static_cast<size_t>(x)] -= 1;
            cap[static_cast<size_t>(x)][static_cast<size_t>(p)] += 1;
        }
        ++flow;
    }
    return flow;
}

uint64_t vertex_mask_of(const std::vector<VertexId>& vs) {
    uint64_t m = 0;
    for (VertexId v : vs) m |= 1ull << v;
    return m;
}

Subgraph subgraph_from_masks(const Graph& g, const TreeRec& rec) {
    std::vector<VertexId> vs;
    std::vector<EdgeId> es;
    uint64_t vm = rec.vertex_mask, em = rec.edge_mask;
    while (vm) {
        vs.push_back(std::countr_zero(vm));
        vm &= vm - 1;
    }
    while (em) {
        es.push_back(std::countr_zero(em));
        em &= em - 1;
    }
    return make_subgraph(g, std::move(vs), std::move(es));
}

void check_oracle_input(const Graph& g, const TerminalSet& s, const SizeLimits& limits) {
    for (VertexId v : s.vertices)
        if (v < 0 || v >= g.vertex_count())
            throw Error(Errc::TerminalMissing, "terminal " + std::to_string(v) + " is not a vertex of the graph");
    if (!subgraph_is_connected(whole_subgraph(g)))
        throw Error(Errc::Disconnected, "the host graph must be connected");
    if (g.vertex_count() > kMaskWidth || g.edge_count() > kMaskWidth)
        throw Error(Errc::SizeLimitExceeded, "oracle representation is limited to 64 vertices and 64 edges");
    if (g.vertex_count() > limits.pack_vertices || g.edge_count() > limits.pack_edges)
        throw Error(Errc::SizeLimitExceeded,
                    "graph exceeds per-set packing limits (" + std::to_string(limits.pack_vertices) + " vertices, " +
                        std::to_string(limits.pack_edges) + " edges); raise the limits to force the search");
}

uint64_t full_edge_mask(const Graph& g) {
    return (g.edge_count() >= kMaskWidth) ? ~0ull : ((1ull << g.edge_count()) - 1);
}

std::vector<TreeRec> collect_candidate_trees(const Graph& g, const TerminalSet& s) {
    std::vector<TreeRec> out;
    uint64_t tmask = vertex_mask_of(s.vertices);
    TreeEnumerator enumerator(g, tmask, full_edge_mask(g), [&](const TreeRec& rec) {
        out.push_back(rec);
        return true;
    });
    enumerator.run();
    return out;
}

// First tree of the stream restricted to the allowed edges, if any.
std::optional<TreeRec> first_candidate_tree(const Graph& g, uint64_t terminal_vmask, uint64_t allowed_edges) {
    std::optional<TreeRec> found;
    TreeEnumerator enumerator(g, terminal_vmask, allowed_edges, [&](const TreeRec& rec) {
        found = rec;
        return false;
    });
    enumerator.run();
    return found;
}

struct GreedyResult {
    std::vector<TreeRec> family;
    uint64_t used_edges = 0;
    uint64_t used_internal = 0;
};

// First-fit family over the lex stream: exactly the first descent of the
// exhaustive search, obtained without materializing the candidate list.
GreedyResult greedy_family(const Graph& g, uint64_t terminal_vmask, DisjointMode mode,
                           const std::vector<uint64_t>& vertex_incident, int enough) {
    GreedyResult out;
    uint64_t allowed = full_edge_mask(g);
    while (static_cast<int>(out.family.size()) < enough) {
        std::optional<TreeRec> next = first_candidate_tree(g, terminal_vmask, allowed);
        if (!next) break;
        out.family.push_back(*next);
        out.used_edges |= next->edge_mask;
        allowed &= ~next->edge_mask;
        if (mode == DisjointMode::InternallyDisjoint) {
            uint64_t internal_vs = next->vertex_mask & ~terminal_vmask;
            out.used_internal |= internal_vs;
            while (internal_vs) {
                int v = std::countr_zero(internal_vs);
                internal_vs &= internal_vs - 1;
                allowed &= ~vertex_incident[static_cast<size_t>(v)];
            }
        }
    }
    return out;
}

// Branch-and-bound packing over the lex-ordered candidate list. Families are
// explored as ascending index sequences, which is exactly the canonical
// (sorted edge-id sequence) order because disjoint trees have distinct
// minimum edge ids.
class PackSearch {
public:
    PackSearch(const Graph& g, std::vector<TreeRec> candidates, uint64_t terminal_vmask, DisjointMode mode,
               int cap)
        : g_(g), cand_(std::move(candidates)), terminal_vmask_(terminal_vmask),
          internal_(mode == DisjointMode::InternallyDisjoint), cap_(cap) {
        vertex_incident_.assign(static_cast<size_t>(g.vertex_count()), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            vertex_incident_[static_cast<size_t>(u)] |= 1ull << e;
            vertex_incident_[static_cast<size_t>(v)] |= 1ull << e;
        }
        all_edges_mask_ = (g.edge_count() == kMaskWidth) ? ~0ull : ((1ull << g.edge_count()) - 1);
    }

    std::vector<int> run() {
        std::vector<int> all(cand_.size());
        int min_edges = kUncapped;
        for (size_t i = 0; i < cand_.size(); ++i) {
            all[i] = static_cast<int>(i);
            min_edges = std::min(min_edges, cand_[i].edge_count);
        }
        // A family can never exceed the edge count, so depth is bounded.
        scratch_.resize(static_cast<size_t>(g_.edge_count()) + 2);
        dfs(all, min_edges, 0, 0, 0, 0);
        return best_family_;
    }

private:
    int bound(const std::vector<int>& avail, int min_tree_edges, uint64_t blocked_e) const {
        int b = static_cast<int>(avail.size());
        if (b == 0) return 0;
        // Every further tree uses at least one free edge at each terminal.
        uint64_t tm = terminal_vmask_;
        while (tm) {
            int v = std::countr_zero(tm);
            tm &= tm - 1;
            b = std::min(b, std::popcount(vertex_incident_[static_cast<size_t>(v)] & ~blocked_e));
        }
        // Edge budget against the smallest still-available tree.
        if (min_tree_edges > 0)
            b = std::min(b, std::popcount(all_edges_mask_ & ~blocked_e) / min_tree_edges);
        return b;
    }

    void dfs(const std::vector<int>& avail, int min_tree_edges, uint64_t used_e, uint64_t used_int_v,
             uint64_t blocked_e, size_t depth) {
        if (static_cast<int>(cur_.size()) > best_) {
            best_ = static_cast<int>(cur_.size());
            best_family_ = cur_;
            if (best_ >= cap_) {
                stop_ = true;
                return;
            }
        }
        if (static_cast<int>(cur_.size()) + bound(avail, min_tree_edges, blocked_e) <= best_) return;

        for (size_t i = 0; i < avail.size() && !stop_; ++i) {
            const TreeRec& t = cand_[static_cast<size_t>(avail[i])];
            uint64_t nu_e = used_e | t.edge_mask;
            uint64_t nu_iv = used_int_v;
            uint64_t nblocked = blocked_e | t.edge_mask;
            if (internal_) {
                uint64_t internal_vs = t.vertex_mask & ~terminal_vmask_;
                nu_iv |= internal_vs;
                while (internal_vs) {
                    int v = std::countr_zero(internal_vs);
                    internal_vs &= internal_vs - 1;
                    nblocked |= vertex_incident_[static_cast<size_t>(v)];
                }
            }
            std::vector<int>& navail = scratch_[depth + 1];
            navail.clear();
            int nmin = kUncapped;
            for (size_t j = i + 1; j < avail.size(); ++j) {
                const TreeRec& u = cand_[static_cast<size_t>(avail[j])];
                if (u.edge_mask & nu_e) continue;
                if (internal_ && (u.vertex_mask & nu_iv)) continue;
                navail.push_back(avail[j]);
                nmin = std::min(nmin, u.edge_count);
            }
            cur_.push_back(avail[i]);
            dfs(navail, nmin == kUncapped ? 0 : nmin, nu_e, nu_iv, nblocked, depth + 1);
            cur_.pop_back();
        }
    }

    const Graph& g_;
    std::vector<TreeRec> cand_;
    uint64_t terminal_vmask_;
    bool internal_;
    int cap_;
    std::vector<uint64_t> vertex_incident_;
    uint64_t all_edges_mask_ = 0;
    int best_ = 0;
    bool stop_ = false;
    std::vector<int> cur_, best_family_;
    std::vector<std::vector<int>> scratch_;

public:
    const std::vector<TreeRec>& candidates() const { return cand_; }
};

} // namespace

std::vector<Subgraph> enumerate_minimal_steiner_trees(const Graph& g, const TerminalSet& s) {
    for (VertexId v : s.vertices)
        if (v < 0 || v >= g.vertex_count())
            throw Error(Errc::TerminalMissing, "terminal " + std::to_string(v) + " is not a vertex of the graph");
    if (!subgraph_is_connected(whole_subgraph(g)))
        throw Error(Errc::Disconnected, "the host graph must be connected");
    if (g.vertex_count() > kMaskWidth || g.edge_count() > kMaskWidth)
        throw Error(Errc::SizeLimitExceeded, "enumeration is limited to 64 vertices and 64 edges");

    std::vector<Subgraph> out;
    uint64_t tmask = vertex_mask_of(s.vertices);
    TreeEnumerator enumerator(g, tmask, full_edge_mask(g), [&](const TreeRec& rec) {
        out.push_back(subgraph_from_masks(g, rec));
        return true;
    });
    enumerator.run();
    return out;
}

namespace {

// First-fit over minimum Steiner trees. Unlike the lex-first family this is
// not the search's first descent, so it serves only as a lower-bound
// certificate: its size proves that the true maximum is at least as large.
std::vector<TreeRec> min_tree_greedy(const Graph& g, const TerminalSet& s, uint64_t terminal_vmask,
                                     DisjointMode mode, const std::vector<uint64_t>& vertex_incident,
                                     int enough) {
    std::vector<TreeRec> family;
    uint64_t allowed = full_edge_mask(g);
    while (static_cast<int>(family.size()) < enough) {
        std::optional<TreeRec> next = min_steiner_tree(g, s.vertices, allowed);
        if (!next) break;
        family.push_back(*next);
        allowed &= ~next->edge_mask;
        if (mode == DisjointMode::InternallyDisjoint) {
            uint64_t internal_vs = next->vertex_mask & ~terminal_vmask;
            while (internal_vs) {
                int v = std::countr_zero(internal_vs);
                internal_vs &= internal_vs - 1;
                allowed &= ~vertex_incident[static_cast<size_t>(v)];
            }
        }
    }
    return family;
}

} // namespace

PackingWitness max_disjoint_packing(const Graph& g, const TerminalSet& s, DisjointMode mode,
                                    const SizeLimits& limits, int cap) {
    check_oracle_input(g, s, limits);

    uint64_t terminal_vmask = vertex_mask_of(s.vertices);
    std::vector<uint64_t> vertex_incident(static_cast<size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        vertex_incident[static_cast<size_t>(u)] |= 1ull << e;
        vertex_incident[static_cast<size_t>(v)] |= 1ull << e;
    }
    // Any family consumes at least one edge per tree at every terminal; for
    // two terminals in internal mode, Menger gives the exact ceiling.
    int upper = kUncapped;
    for (VertexId t : s.vertices) upper = std::min(upper, g.degree(t));
    if (mode == DisjointMode::InternallyDisjoint && s.vertices.size() == 2)
        upper = std::min(upper, internal_pair_flow(g, s.vertices[0], s.vertices[1]));
    int enough = std::min(cap, upper);

    PackingWitness witness;
    witness.terminals = s;
    witness.mode = mode;
    auto to_trees = [&](const std::vector<TreeRec>& family) {
        witness.trees.reserve(family.size());
        for (const TreeRec& rec : family) witness.trees.push_back(subgraph_from_masks(g, rec));
    };

    // The lex-first-fit family is the first descent of the exhaustive search.
    // Reaching `upper` makes it the canonical maximum witness; reaching the
    // cap satisfies the capped contract. No candidate list is materialized.
    GreedyResult greedy = greedy_family(g, terminal_vmask, mode, vertex_incident, enough);
    if (static_cast<int>(greedy.family.size()) >= enough) {
        to_trees(greedy.family);
        return witness;
    }

    // A capped caller only asks whether the packing reaches the cap; a
    // min-tree first-fit family of that size settles it without the search.
    // The subset DP behind it is sized 2^|S|, hence the terminal bound.
    if (cap < kUncapped && cap <= upper && s.vertices.size() <= 16) {
        std::vector<TreeRec> lower = min_tree_greedy(g, s, terminal_vmask, mode, vertex_incident, cap);
        if (static_cast<int>(lower.size()) >= cap) {
            lower.resize(static_cast<size_t>(cap));
            to_trees(lower);
            return witness;
        }
    }

    PackSearch search(g, collect_candidate_trees(g, s), terminal_vmask, mode, std::min(cap, upper));
    std::vector<int> family = search.run();
    witness.trees.reserve(family.size());
    for (int idx : family) witness.trees.push_back(subgraph_from_masks(g, search.candidates()[static_cast<size_t>(idx)]));
    return witness;
}

ConnectivityResult tree_connectivity(const Graph& g, int k, DisjointMode mode, const SizeLimits& limits) {
    int n = g.vertex_count();
    if (k < 2 || k > n)
        throw Error(Errc::KOutOfRange, "k = " + std::to_string(k) + " must satisfy 2 <= k <= " + std::to_string(n));
    if (!subgraph_is_connected(whole_subgraph(g)))
        throw Error(Errc::Disconnected, "tree connectivity is defined for connected graphs");
    if (n > limits.sweep_vertices)
        throw Error(Errc::SizeLimitExceeded,
                    "graph exceeds the sweep limit of " + std::to_string(limits.sweep_vertices) +
                        " vertices; raise the limits to force the sweep");
    check_oracle_input(g, make_terminal_set({0, 1}), limits);

    ConnectivityResult result;
    result.k = k;
    bool have = false;

    // For pairs in internal mode the packing number is the number of
    // internally disjoint paths (the classical two-vertex connectivity), so
    // the Menger flow value decides whether a pair can improve the minimum
    // before any search runs.
    bool pair_flow_mode = (mode == DisjointMode::InternallyDisjoint && k == 2);

    // k-subsets of vertex ids in lexicographic order. Later subsets are
    // searched with cap = current minimum: a search that reaches the cap
    // cannot improve the minimum and is abandoned early.
    std::vector<VertexId> subset(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = i;
    while (true) {
        TerminalSet s = make_terminal_set(subset);
        int cap = have ? result.value : kUncapped;
        bool evaluate = true;
        if (pair_flow_mode) {
            int flow = internal_pair_flow(g, subset[0], subset[1]);
            if (have && flow >= result.value) {
                evaluate = false;
            } else {
                cap = flow; // exact by Menger; the search stops at the first maximum family
            }
        }
        if (evaluate) {
            PackingWitness w = max_disjoint_packing(g, s, mode, limits, cap);
            if (pair_flow_mode && w.count() != cap)
                throw Error(Errc::VerificationFailed,
                            "internal: pair packing disagrees with the vertex flow value");
            if (!have || w.count() < result.value) {
                have = true;
                result.value = w.count();
                result.witness_min_set = s;
                result.witness_packing = std::move(w);
            }
        }
        // next combination
        int i = k - 1;
        while (i >= 0 && subset[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
    }
    return result;
}

int edge_connectivity_flow(const Graph& g, VertexId u, VertexId v) {
    if (u == v) throw Error(Errc::SameVertex, "edge connectivity needs two distinct vertices");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw Error(Errc::VertexOutOfRange, "flow endpoint out of range");

    int n = g.vertex_count();
    std::vector<std::vector<int>> cap(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (const auto& [a, b] : g.edges()) {
        cap[static_cast<size_t>(a)][static_cast<size_t>(b)] += 1;
        cap[static_cast<size_t>(b)][static_cast<size_t>(a)] += 1;
    }

    int flow = 0;
    while (true) {
        std::vector<int> prev(static_cast<size_t>(n), -1);
        std::deque<int> queue{u};
        prev[static_cast<size_t>(u)] = u;
        while (!queue.empty() && prev[static_cast<size_t>(v)] == -1) {
            int x = queue.front();
            queue.pop_front();
            for (int y = 0; y < n; ++y) {
                if (prev[static_cast<size_t>(y)] == -1 && cap[static_cast<size_t>(x)][static_cast<size_t>(y)] > 0) {
                    prev[static_cast<size_t>(y)] = x;
                    queue.push_back(y);
                }
            }
        }
        if (prev[static_cast<size_t>(v)] == -1) break;
        for (int x = v; x != u; x = prev[static_cast<size_t>(x)]) {
            int p = prev[static_cast<size_t>(x)];
            cap[static_cast<size_t>(p)][static_cast<size_t>(x)] -= 1;
            cap[static_cast<size_t>(x)][static_cast<size_t>(p)] += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace steinerline
