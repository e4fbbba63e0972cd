// steinerline command line tool: line graphs, Steiner tree packings, k-tree
// connectivities, the packing-to-line-graph construction, and corpus sweeps
// with machine-readable reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "steinerline/components.hpp"
#include "steinerline/corpus.hpp"
#include "steinerline/io.hpp"
#include "steinerline/line_graph.hpp"
#include "steinerline/oracle.hpp"
#include "steinerline/rooted_tree.hpp"
#include "steinerline/transform.hpp"

namespace sl = steinerline;
using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerification = 2;
constexpr int kExitInput = 3;
constexpr int kExitSizeLimit = 4;

int exit_code_for(sl::Errc code) {
    switch (code) {
        case sl::Errc::SizeLimitExceeded:
            return kExitSizeLimit;
        case sl::Errc::VerificationFailed:
        case sl::Errc::PrereqViolated:
        case sl::Errc::NotAdjacentInLineGraph:
        case sl::Errc::PackingMismatch:
        case sl::Errc::NotEdgeDisjoint:
            return kExitVerification;
        default:
            return kExitInput;
    }
}

struct Options {
    std::string format = "human";
    sl::SizeLimits limits;
    std::string output_path; // empty = stdout
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.output_path.empty()) return std::cout;
    file.open(opt.output_path);
    if (!file) throw sl::Error(sl::Errc::BadArgument, "cannot open output file " + opt.output_path);
    return file;
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

sl::SizeLimits parse_limits(const std::string& text) {
    sl::SizeLimits limits;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw sl::Error(sl::Errc::BadArgument, "limits expect nv=<int>,ne=<int>");
        std::string key = item.substr(0, eq);
        int value = std::stoi(item.substr(eq + 1));
        if (key == "nv") {
            limits.pack_vertices = value;
            limits.sweep_vertices = value;
        } else if (key == "ne") {
            limits.pack_edges = value;
        } else {
            throw sl::Error(sl::Errc::BadArgument, "unknown limit key `" + key + "`");
        }
    }
    return limits;
}

std::vector<int> parse_id_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw sl::Error(sl::Errc::BadArgument, what + " list expects comma-separated integers");
        }
    }
    if (out.empty()) throw sl::Error(sl::Errc::BadArgument, what + " list is empty");
    return out;
}

struct RandomSpec {
    int n = 0;
    double p = 0.0;
    int trials = 0;
    std::optional<int> max_edges;
};

RandomSpec parse_random_spec(const std::string& text) {
    RandomSpec spec;
    std::stringstream ss(text);
    std::string item;
    bool have_n = false, have_p = false, have_trials = false;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw sl::Error(sl::Errc::BadArgument, "random spec expects n=<int>,p=<float>,trials=<int>[,maxm=<int>]");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        if (key == "n") {
            spec.n = std::stoi(value);
            have_n = true;
        } else if (key == "p") {
            spec.p = std::stod(value);
            have_p = true;
        } else if (key == "trials") {
            spec.trials = std::stoi(value);
            have_trials = true;
        } else if (key == "maxm") {
            spec.max_edges = std::stoi(value);
        } else {
            throw sl::Error(sl::Errc::BadArgument, "unknown random spec key `" + key + "`");
        }
    }
    if (!have_n || !have_p || !have_trials)
        throw sl::Error(sl::Errc::BadArgument, "random spec needs n=, p= and trials=");
    return spec;
}

ordered_json tree_json(const sl::Subgraph& t) {
    return ordered_json{{"vertices", t.vertices}, {"edges", t.edges}};
}

ordered_json limits_json(const sl::SizeLimits& limits) {
    return ordered_json{{"pack_vertices", limits.pack_vertices},
                        {"pack_edges", limits.pack_edges},
                        {"sweep_vertices", limits.sweep_vertices}};
}

void emit_report(const Options& opt, const ordered_json& report, const std::string& human) {
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "json")
        out << report.dump(2) << "\n";
    else
        out << human;
}

// ---------------------------------------------------------------- linegraph

int cmd_linegraph(const Options& opt, const std::string& input) {
    sl::Graph g = sl::read_edge_list_file(input);
    sl::LineGraphMap lm = sl::line_graph(g);

    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    out << "# line graph of " << input << " (" << g.vertex_count() << " vertices, " << g.edge_count()
        << " edges)\n";
    out << "n " << lm.line_graph.vertex_count() << "\n";
    for (int e = 0; e < g.edge_count(); ++e)
        out << "# e " << e << " -> v " << lm.vertex_for_edge(e) << "\n";
    for (const auto& [u, v] : lm.line_graph.edges()) out << u << " " << v << "\n";
    return kExitPass;
}

// ------------------------------------------------------------- connectivity

int cmd_connectivity(const Options& opt, const std::string& input, int k, const std::string& mode_name) {
    auto start = Clock::now();
    sl::Graph g = sl::read_edge_list_file(input);
    sl::DisjointMode mode =
        mode_name == "internal" ? sl::DisjointMode::InternallyDisjoint : sl::DisjointMode::EdgeDisjoint;
    sl::ConnectivityResult result = sl::tree_connectivity(g, k, mode, opt.limits);

    const char* value_name = mode == sl::DisjointMode::EdgeDisjoint ? "lambda_k" : "kappa_k";
    ordered_json record{{"id", 0},
                        {"n", g.vertex_count()},
                        {"m", g.edge_count()},
                        {"k", k},
                        {"mode", mode_name},
                        {value_name, result.value},
                        {"witness_min_set", result.witness_min_set.vertices}};
    ordered_json trees = ordered_json::array();
    for (const sl::Subgraph& t : result.witness_packing.trees) trees.push_back(tree_json(t));
    record["witness_packing"] = ordered_json{{"mode", mode_name}, {"count", result.witness_packing.count()},
                                             {"trees", trees}};
    ordered_json report{{"command", "connectivity"},
                        {"config", ordered_json{{"input", input}, {"k", k}, {"mode", mode_name},
                                                {"limits", limits_json(opt.limits)}, {"format", opt.format}}},
                        {"instances", ordered_json::array({record})},
                        {"summary", ordered_json{{"instances", 1}, {"failures", ordered_json::array()},
                                                 {"pass", true}}}};

    std::ostringstream human;
    human << (mode == sl::DisjointMode::EdgeDisjoint ? "lambda" : "kappa") << "_" << k << " = " << result.value
          << "  (n=" << g.vertex_count() << ", m=" << g.edge_count() << ")\n";
    human << "minimizing set:";
    for (sl::VertexId v : result.witness_min_set.vertices) human << " " << v;
    human << "\npacking (" << result.witness_packing.count() << " trees):\n";
    for (size_t i = 0; i < result.witness_packing.trees.size(); ++i) {
        human << "  tree " << i << " edges:";
        for (sl::EdgeId e : result.witness_packing.trees[i].edges) {
            auto [u, v] = g.endpoints(e);
            human << " " << e << "=(" << u << "," << v << ")";
        }
        human << "\n";
    }
    human << "elapsed: " << elapsed_ms(start) << " ms\n";
    emit_report(opt, report, human.str());
    return kExitPass;
}

// --------------------------------------------------------------------- pack

int cmd_pack(const Options& opt, const std::string& input, const std::string& terminals_text,
             const std::string& mode_name) {
    auto start = Clock::now();
    sl::Graph g = sl::read_edge_list_file(input);
    sl::TerminalSet s = sl::make_terminal_set(parse_id_list(terminals_text, "terminal"));
    sl::DisjointMode mode =
        mode_name == "internal" ? sl::DisjointMode::InternallyDisjoint : sl::DisjointMode::EdgeDisjoint;
    sl::PackingWitness w = sl::max_disjoint_packing(g, s, mode, opt.limits);

    ordered_json trees = ordered_json::array();
    for (const sl::Subgraph& t : w.trees) trees.push_back(tree_json(t));
    ordered_json record{{"id", 0},           {"n", g.vertex_count()}, {"m", g.edge_count()},
                        {"mode", mode_name}, {"terminals", s.vertices}, {"count", w.count()},
                        {"trees", trees}};
    ordered_json report{{"command", "pack"},
                        {"config", ordered_json{{"input", input}, {"terminals", s.vertices}, {"mode", mode_name},
                                                {"limits", limits_json(opt.limits)}, {"format", opt.format}}},
                        {"instances", ordered_json::array({record})},
                        {"summary", ordered_json{{"instances", 1}, {"failures", ordered_json::array()},
                                                 {"pass", true}}}};

    std::ostringstream human;
    human << "maximum " << (mode == sl::DisjointMode::EdgeDisjoint ? "edge-disjoint" : "internally disjoint")
          << " packing: " << w.count() << " trees\n";
    for (size_t i = 0; i < w.trees.size(); ++i) {
        human << "  tree " << i << " edges:";
        for (sl::EdgeId e : w.trees[i].edges) {
            auto [u, v] = g.endpoints(e);
            human << " " << e << "=(" << u << "," << v << ")";
        }
        human << "\n";
    }
    human << "elapsed: " << elapsed_ms(start) << " ms\n";
    emit_report(opt, report, human.str());
    return kExitPass;
}

// ---------------------------------------------------------------- transform

ordered_json partition_json(const sl::CasePartition& p) {
    ordered_json corr = ordered_json::array();
    for (const auto& [e, v] : p.corr_vertex) corr.push_back(ordered_json::array({e, v}));
    ordered_json removed = ordered_json::array();
    for (const auto& [c, e] : p.removed_cycle_edge) removed.push_back(ordered_json::array({c, e}));
    ordered_json roots = ordered_json::array();
    for (const auto& [c, r] : p.component_roots) roots.push_back(ordered_json::array({c, r}));
    ordered_json classes = ordered_json::array();
    for (sl::ComponentClass c : p.component_classes) classes.push_back(sl::component_class_name(c));
    return ordered_json{{"case", sl::proof_case_name(p.proof_case)},
                        {"q1", p.q1},
                        {"q2", p.q2},
                        {"s1", p.s1},
                        {"s2", p.s2},
                        {"corr_vertex", corr},
                        {"removed_cycle_edges", removed},
                        {"component_roots", roots},
                        {"component_classes", classes},
                        {"extra_vertex", p.extra_vertex ? ordered_json(*p.extra_vertex) : ordered_json(nullptr)}};
}

int cmd_transform(const Options& opt, const std::string& input, const std::string& edge_set_text) {
    auto start = Clock::now();
    sl::Graph g = sl::read_edge_list_file(input);
    sl::TerminalEdgeSet tes = sl::make_terminal_edge_set(g, parse_id_list(edge_set_text, "edge"));
    int k = static_cast<int>(tes.edges.size());

    sl::CasePartition partition = sl::partition_terminal_edges(g, tes);
    sl::TerminalSet q = sl::terminal_vertex_set(partition);
    int m = sl::tree_connectivity(g, k, sl::DisjointMode::EdgeDisjoint, opt.limits).value;
    sl::PackingWitness full = sl::max_disjoint_packing(g, q, sl::DisjointMode::EdgeDisjoint, opt.limits);
    if (full.count() < m)
        throw sl::Error(sl::Errc::VerificationFailed,
                        "maximum Q-packing smaller than lambda_k, contradicting packing monotonicity");
    sl::PackingWitness packing;
    packing.terminals = full.terminals;
    packing.mode = full.mode;
    packing.trees.assign(full.trees.begin(), full.trees.begin() + m);

    sl::LineGraphMap lmap = sl::line_graph(g);
    sl::TransformResult result = sl::transform_packing(g, tes, packing, lmap);

    ordered_json packing_trees = ordered_json::array();
    for (const sl::Subgraph& t : packing.trees) packing_trees.push_back(tree_json(t));
    ordered_json line_trees = ordered_json::array();
    for (const sl::Subgraph& t : result.trees) line_trees.push_back(tree_json(t));
    ordered_json record{{"id", 0},
                        {"n", g.vertex_count()},
                        {"m", g.edge_count()},
                        {"k", k},
                        {"lambda_k", m},
                        {"edge_set", tes.edges},
                        {"q", q.vertices},
                        {"packing_root", sl::packing_root(partition)},
                        {"partition", partition_json(partition)},
                        {"packing", packing_trees},
                        {"line_terminals", sl::line_terminals(tes, lmap)},
                        {"line_trees", line_trees},
                        {"verified", result.verification.pass}};
    bool pass = result.verification.pass;
    ordered_json failures = ordered_json::array();
    if (!pass) failures.push_back(0);
    ordered_json report{{"command", "transform"},
                        {"config", ordered_json{{"input", input}, {"edge_set", tes.edges},
                                                {"limits", limits_json(opt.limits)}, {"format", opt.format}}},
                        {"instances", ordered_json::array({record})},
                        {"summary", ordered_json{{"instances", 1}, {"failures", failures}, {"pass", pass}}}};

    std::ostringstream human;
    human << "edge set {";
    for (size_t i = 0; i < tes.edges.size(); ++i) human << (i ? "," : "") << tes.edges[i];
    human << "}  case " << (partition.proof_case == sl::ProofCase::Case1 ? "1" : "2") << ", |Q| = "
          << q.vertices.size() << ", lambda_" << k << " = " << m << "\n";
    human << "packing in G (" << packing.trees.size() << " trees):\n";
    for (size_t i = 0; i < packing.trees.size(); ++i) {
        human << "  tree " << i << " edges:";
        for (sl::EdgeId e : packing.trees[i].edges) human << " " << e;
        human << "\n";
    }
    human << "trees in L(G) (" << result.trees.size() << "):\n";
    for (size_t i = 0; i < result.trees.size(); ++i) {
        human << "  tree " << i << " line vertices:";
        for (sl::VertexId v : result.trees[i].vertices) human << " " << v;
        human << "\n";
    }
    human << "verification: " << (pass ? "pass" : "FAIL (" + result.verification.detail + ")") << "\n";
    human << "elapsed: " << elapsed_ms(start) << " ms\n";
    emit_report(opt, report, human.str());
    return pass ? kExitPass : kExitVerification;
}

// -------------------------------------------------------------------- sweep

struct SweepInstance {
    int id;
    sl::Graph graph;
};

ordered_json theorem_record(int id, const sl::Graph& g, int k, const sl::TheoremReport& rep) {
    return ordered_json{{"id", id},
                        {"n", g.vertex_count()},
                        {"m", g.edge_count()},
                        {"k", k},
                        {"lambda_k", rep.lambda_k},
                        {"kappa_k_line", rep.kappa_k_line},
                        {"kappa_ge_lambda", rep.kappa_ge_lambda},
                        {"sharp", rep.sharp},
                        {"edge_subsets", static_cast<int>(rep.subsets.size())},
                        {"case1_subsets", rep.case1_subsets},
                        {"case2_subsets", rep.case2_subsets},
                        {"case2_with_tree", rep.case2_with_tree},
                        {"case2_with_unicyclic", rep.case2_with_unicyclic},
                        {"verified", rep.all_verified}};
}

int cmd_sweep(const Options& opt, int exhaustive_n, int max_edges, const std::string& random_text,
              const std::string& file_input, int k, std::uint64_t seed) {
    auto start = Clock::now();
    std::vector<SweepInstance> instances;
    ordered_json source;
    if (exhaustive_n > 0) {
        source = ordered_json{{"kind", "exhaustive"}, {"n", exhaustive_n}, {"max_edges", max_edges}};
        int id = 0;
        for (int n = 2; n <= exhaustive_n; ++n) {
            if (n < k) continue;
            sl::for_each_connected_graph(n, std::min(max_edges, n * (n - 1) / 2), [&](const sl::Graph& g) {
                if (g.edge_count() >= k) instances.push_back({id++, g});
                return true;
            });
        }
    } else if (!random_text.empty()) {
        RandomSpec spec = parse_random_spec(random_text);
        source = ordered_json{{"kind", "random"},
                              {"n", spec.n},
                              {"p", spec.p},
                              {"trials", spec.trials},
                              {"maxm", spec.max_edges ? ordered_json(*spec.max_edges) : ordered_json(nullptr)},
                              {"seed", seed}};
        for (int i = 0; i < spec.trials; ++i) {
            sl::Graph g = sl::random_connected_graph(spec.n, spec.p,
                                                     sl::trial_seed(seed, static_cast<std::uint64_t>(i)),
                                                     spec.max_edges);
            if (g.vertex_count() >= k && g.edge_count() >= k) instances.push_back({i, std::move(g)});
        }
    } else {
        source = ordered_json{{"kind", "file"}, {"input", file_input}};
        instances.push_back({0, sl::read_edge_list_file(file_input)});
    }

    ordered_json records = ordered_json::array();
    ordered_json failures = ordered_json::array();
    std::ostringstream human;
    int sharp = 0, case1_total = 0, case2_total = 0, with_tree_total = 0, with_unicyclic_total = 0;
    for (const SweepInstance& inst : instances) {
        auto inst_start = Clock::now();
        sl::TheoremReport rep = sl::theorem_check(inst.graph, k, opt.limits);
        records.push_back(theorem_record(inst.id, inst.graph, k, rep));
        if (!rep.all_verified) failures.push_back(inst.id);
        if (rep.sharp) ++sharp;
        case1_total += rep.case1_subsets;
        case2_total += rep.case2_subsets;
        with_tree_total += rep.case2_with_tree;
        with_unicyclic_total += rep.case2_with_unicyclic;
        human << "instance " << inst.id << ": n=" << inst.graph.vertex_count() << " m=" << inst.graph.edge_count()
              << " lambda_" << k << "=" << rep.lambda_k << " kappa_" << k << "(L)=" << rep.kappa_k_line
              << (rep.sharp ? " sharp" : "") << (rep.all_verified ? " ok" : " FAIL") << "  ["
              << elapsed_ms(inst_start) << " ms]\n";
    }

    bool pass = failures.empty();
    ordered_json summary{{"instances", static_cast<int>(instances.size())},
                         {"failures", failures},
                         {"pass", pass},
                         {"sharp_instances", sharp},
                         {"case1_subsets", case1_total},
                         {"case2_subsets", case2_total},
                         {"case2_with_tree", with_tree_total},
                         {"case2_with_unicyclic", with_unicyclic_total}};
    ordered_json report{{"command", "sweep"},
                        {"config", ordered_json{{"source", source}, {"k", k},
                                                {"limits", limits_json(opt.limits)}, {"format", opt.format}}},
                        {"instances", records},
                        {"summary", summary}};

    human << "instances: " << instances.size() << ", failures: " << failures.size() << ", sharp: " << sharp
          << "\ncase tallies: case1=" << case1_total << " case2=" << case2_total << " (tree=" << with_tree_total
          << ", unicyclic=" << with_unicyclic_total << ")\n";
    human << "elapsed: " << elapsed_ms(start) << " ms\n";
    emit_report(opt, report, human.str());
    return pass ? kExitPass : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner tree packing numbers, k-tree connectivities and the line-graph packing transform"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    Options opt;
    std::string limits_text;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "json"}));
    app.add_option("--limits", limits_text, "Size guards, e.g. nv=12,ne=20");
    app.add_option("-o,--output", opt.output_path, "Write the report to a file instead of stdout");

    std::string input, terminals_text, edge_set_text, mode_name = "edge", random_text, file_input;
    int k = 2, exhaustive_n = 0, max_edges = 64;
    std::uint64_t seed = 0;

    CLI::App* linegraph = app.add_subcommand("linegraph", "Write the line graph and the edge->vertex map");
    linegraph->add_option("file", input, "Edge-list input")->required();

    CLI::App* connectivity = app.add_subcommand("connectivity", "Exact k-tree (edge-)connectivity");
    connectivity->add_option("file", input)->required();
    connectivity->add_option("--k", k, "Terminal set size")->required();
    connectivity->add_option("--mode", mode_name, "edge | internal")->check(CLI::IsMember({"edge", "internal"}));

    CLI::App* pack = app.add_subcommand("pack", "Maximum disjoint Steiner tree packing for a terminal set");
    pack->add_option("file", input)->required();
    pack->add_option("--terminals", terminals_text, "Comma-separated vertex ids")->required();
    pack->add_option("--mode", mode_name, "edge | internal")->check(CLI::IsMember({"edge", "internal"}));

    CLI::App* transform = app.add_subcommand("transform", "Replay the packing-to-line-graph construction");
    transform->add_option("file", input)->required();
    transform->add_option("--edge-set", edge_set_text, "Comma-separated edge ids")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "Run the construction over a corpus and aggregate a report");
    sweep->add_option("--exhaustive-n", exhaustive_n, "All connected labeled graphs with up to n vertices");
    sweep->add_option("--max-edges", max_edges, "Edge cap for the exhaustive corpus");
    sweep->add_option("--random", random_text, "n=<int>,p=<float>,trials=<int>[,maxm=<int>]");
    sweep->add_option("--file", file_input, "Single-graph corpus from an edge-list file");
    sweep->add_option("--k", k, "Terminal edge set size")->required();
    sweep->add_option("--seed", seed, "Seed for the random corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    }

    try {
        if (!limits_text.empty()) opt.limits = parse_limits(limits_text);
        if (linegraph->parsed()) return cmd_linegraph(opt, input);
        if (connectivity->parsed()) return cmd_connectivity(opt, input, k, mode_name);
        if (pack->parsed()) return cmd_pack(opt, input, terminals_text, mode_name);
        if (transform->parsed()) return cmd_transform(opt, input, edge_set_text);
        if (sweep->parsed()) {
            int sources = (exhaustive_n > 0 ? 1 : 0) + (random_text.empty() ? 0 : 1) + (file_input.empty() ? 0 : 1);
            if (sources != 1)
                throw sl::Error(sl::Errc::BadArgument,
                                "sweep needs exactly one of --exhaustive-n, --random, --file");
            return cmd_sweep(opt, exhaustive_n, max_edges, random_text, file_input, k, seed);
        }
    } catch (const sl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
