#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace indset {

// Edge-list text format:
//
//   # optional comment lines
//   n m
//   u v        (m lines, 0 <= u < v < n)

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

inline std::uint64_t parse_field(std::istringstream& fields, std::size_t line_no, const char* what) {
    std::string tok;
    if (!(fields >> tok)) throw FormatError("line " + std::to_string(line_no) + ": missing " + what);
    std::uint64_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') throw FormatError("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > (std::uint64_t{1} << 40)) throw FormatError("line " + std::to_string(line_no) + ": " + what + " too large");
    }
    return v;
}

} // namespace detail

[[nodiscard]] inline Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!detail::next_content_line(in, line, line_no)) throw FormatError("line 1: missing header 'n m'");
    std::istringstream header(line);
    const auto n = detail::parse_field(header, line_no, "vertex count");
    const auto m = detail::parse_field(header, line_no, "edge count");
    std::string extra;
    if (header >> extra) throw FormatError("line " + std::to_string(line_no) + ": trailing data in header");

    Graph g(n);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!detail::next_content_line(in, line, line_no))
            throw FormatError("line " + std::to_string(line_no + 1) + ": expected " + std::to_string(m) + " edges, found " +
                              std::to_string(i));
        std::istringstream fields(line);
        const auto u = detail::parse_field(fields, line_no, "endpoint");
        const auto v = detail::parse_field(fields, line_no, "endpoint");
        if (fields >> extra) throw FormatError("line " + std::to_string(line_no) + ": trailing data");
        if (!(u < v && v < n))
            throw FormatError("line " + std::to_string(line_no) + ": edge must satisfy 0 <= u < v < n");
        try {
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } catch (const DomainError& e) {
            throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (detail::next_content_line(in, line, line_no))
        throw FormatError("line " + std::to_string(line_no) + ": unexpected data after the last edge");
    return g;
}

/// Writes `comment` lines (each prefixed with "# ") then the edge list.
inline void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

/// Graphviz output; marked vertices are drawn red.
inline void write_dot(std::ostream& out, const Graph& g, const std::vector<Vertex>& marks = {},
                      const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const bool marked = std::find(marks.begin(), marks.end(), v) != marks.end();
        out << "  " << v << (marked ? " [color=red];\n" : ";\n");
    }
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

} // namespace indset
