#include "steinerline/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace steinerline {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& message) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + message);
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int vertex_count = 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;

    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (!have_header) {
            std::string tag;
            if (!(fields >> tag)) continue; // blank or comment line
            if (tag != "n") parse_fail(line_no, "expected header `n <vertex_count>`");
            if (!(fields >> vertex_count) || vertex_count < 0)
                parse_fail(line_no, "expected a non-negative vertex count");
            std::string rest;
            if (fields >> rest) parse_fail(line_no, "trailing tokens after the header");
            have_header = true;
        } else {
            VertexId u, v;
            if (!(fields >> u)) continue;
            if (!(fields >> v)) parse_fail(line_no, "expected `u v`");
            std::string rest;
            if (fields >> rest) parse_fail(line_no, "trailing tokens after the edge");
            if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
                parse_fail(line_no, "endpoint out of range 0.." + std::to_string(vertex_count - 1));
            pairs.emplace_back(u, v);
        }
    }
    if (!have_header) throw Error(Errc::ParseError, "missing header `n <vertex_count>`");
    try {
        return build_graph(vertex_count, pairs);
    } catch (const Error& err) {
        throw Error(Errc::ParseError, std::string(err.what()));
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

} // namespace steinerline
