#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace indset {

namespace detail {

inline std::string rooted_code(const Graph& g, Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : g.neighbors(v))
        if (w != parent) kids.push_back(rooted_code(g, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
}

/// One or two centers, found by repeatedly stripping leaves.
inline std::vector<Vertex> tree_centers(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n <= 2) {
        std::vector<Vertex> all;
        for (Vertex v = 0; v < n; ++v) all.push_back(v);
        return all;
    }
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex leaf : layer)
            for (Vertex w : g.neighbors(leaf))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

} // namespace detail

/// AHU canonical string of a free tree: the smaller rooted code over its centers.
/// Two trees are isomorphic iff their codes are equal.
[[nodiscard]] inline std::string tree_canonical_form(const Graph& tree) {
    if (!is_tree(tree)) throw DomainError("tree_canonical_form: not a tree");
    std::string best;
    for (Vertex c : detail::tree_centers(tree)) {
        std::string code = detail::rooted_code(tree, c, c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

/// Every unlabeled free tree on n vertices exactly once, 1 <= n <= 12.
///
/// Grows trees one leaf at a time from the trees on n-1 vertices and
/// deduplicates by canonical form; output is ordered by canonical form.
[[nodiscard]] inline std::vector<Graph> enumerate_trees(std::size_t n) {
    if (n < 1 || n > 12) throw DomainError("enumerate_trees: n must be in [1, 12], got " + std::to_string(n));
    std::vector<Graph> level{Graph(1)};
    for (std::size_t size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& t : level) {
            for (Vertex v = 0; v < t.vertex_count(); ++v) {
                Graph grown = t;
                const Vertex leaf = grown.add_vertex();
                grown.add_edge(v, leaf);
                next.try_emplace(tree_canonical_form(grown), std::move(grown));
            }
        }
        level.clear();
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    return level;
}

} // namespace indset
