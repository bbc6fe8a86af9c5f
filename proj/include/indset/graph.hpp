#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"

namespace indset {

using Vertex = std::uint32_t;

/// Undirected edge stored with first < second.
struct Edge {
    Vertex u;
    Vertex v;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on the dense vertex set {0, ..., n-1}.
///
/// Edges are kept both as an insertion-ordered list (for output) and as
/// adjacency lists (for traversal). add_edge rejects loops, duplicates and
/// out-of-range endpoints, so a Graph value always satisfies the simple-graph
/// invariants.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count) : adj_(vertex_count) {}

    [[nodiscard]] std::size_t vertex_count() const noexcept { return adj_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] bool empty() const noexcept { return adj_.empty(); }

    Vertex add_vertex() {
        adj_.emplace_back();
        return static_cast<Vertex>(adj_.size() - 1);
    }

    void add_edge(Vertex u, Vertex v) {
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        if (u >= vertex_count() || v >= vertex_count())
            throw DomainError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (has_edge(u, v))
            throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edges_.push_back(u < v ? Edge{u, v} : Edge{v, u});
    }

    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const {
        if (u >= vertex_count() || v >= vertex_count()) return false;
        const auto& shorter = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        const Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::find(shorter.begin(), shorter.end(), other) != shorter.end();
    }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    [[nodiscard]] std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Edge sets equal (as sets) and vertex counts equal; labels matter.
    friend bool operator==(const Graph& x, const Graph& y) {
        if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count()) return false;
        auto ex = x.edges_;
        auto ey = y.edges_;
        std::sort(ex.begin(), ex.end());
        std::sort(ey.begin(), ey.end());
        return ex == ey;
    }

    static Graph complete(std::size_t n) {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph path(std::size_t n) {
        Graph g(n);
        for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
        return g;
    }

    static Graph edgeless(std::size_t n) { return Graph(n); }

    /// Star K_{1,leaves}; the center is vertex 0.
    static Graph star(std::size_t leaves) {
        Graph g(leaves + 1);
        for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
        return g;
    }

    static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

/// A graph with a distinguished vertex and optionally a second one.
struct MarkedGraph {
    Graph graph;
    Vertex mark = 0;
    std::optional<Vertex> second_mark;

    MarkedGraph() : graph(1) {}

    MarkedGraph(Graph g, Vertex m, std::optional<Vertex> m2 = std::nullopt)
        : graph(std::move(g)), mark(m), second_mark(m2) {
        if (mark >= graph.vertex_count())
            throw DomainError("mark " + std::to_string(mark) + " outside a graph of " +
                              std::to_string(graph.vertex_count()) + " vertices");
        if (second_mark) {
            if (*second_mark >= graph.vertex_count()) throw DomainError("second mark out of range");
            if (*second_mark == mark) throw DomainError("second mark must differ from the mark");
        }
    }

    /// The single-vertex graph marked at its only vertex.
    static MarkedGraph single_vertex() { return MarkedGraph(Graph(1), 0); }
};

/// Exact nonnegative rational, always reduced.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    constexpr Ratio() = default;
    constexpr Ratio(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (d == 0) throw DomainError("zero denominator");
        const std::uint64_t g = gcd_of(n, d);
        num = n / g;
        den = d / g;
    }

    friend constexpr bool operator==(const Ratio&, const Ratio&) = default;
    friend constexpr std::strong_ordering operator<=>(const Ratio& x, const Ratio& y) {
        const Count l = Count(x.num) * y.den;
        const Count r = Count(y.num) * x.den;
        return l <=> r;
    }

    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    [[nodiscard]] std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// 2|E|/|V|, with the empty graph assigned 0.
[[nodiscard]] inline Ratio average_degree(const Graph& g) {
    if (g.empty()) return Ratio{};
    return Ratio(2 * static_cast<std::uint64_t>(g.edge_count()), g.vertex_count());
}

/// Necessary condition for planarity: |E| <= 3|V| - 6 once |V| >= 3.
/// Graphs on at most two vertices always pass.
[[nodiscard]] inline bool check_euler_bound(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n <= 2) return true;
    return g.edge_count() <= 3 * n - 6;
}

/// Vertices of g2 are shifted by |V(g1)|.
[[nodiscard]] inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph out(g1.vertex_count() + g2.vertex_count());
    const auto shift = static_cast<Vertex>(g1.vertex_count());
    for (const Edge& e : g1.edges()) out.add_edge(e.u, e.v);
    for (const Edge& e : g2.edges()) out.add_edge(e.u + shift, e.v + shift);
    return out;
}

/// Subgraph induced by the vertices with keep[v] true, relabeled densely in
/// increasing order of the old labels. `relabel`, if given, receives the map
/// old -> new (or -1 for dropped vertices).
[[nodiscard]] inline Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep,
                                            std::vector<std::int64_t>* relabel = nullptr) {
    std::vector<std::int64_t> map(g.vertex_count(), -1);
    std::size_t next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (keep.at(v)) map[v] = static_cast<std::int64_t>(next++);
    Graph out(next);
    for (const Edge& e : g.edges())
        if (map[e.u] >= 0 && map[e.v] >= 0) out.add_edge(static_cast<Vertex>(map[e.u]), static_cast<Vertex>(map[e.v]));
    if (relabel) *relabel = std::move(map);
    return out;
}

[[nodiscard]] inline Graph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
    std::vector<bool> keep(g.vertex_count(), true);
    for (Vertex v : drop) keep.at(v) = false;
    return induced_subgraph(g, keep);
}

[[nodiscard]] inline Graph remove_vertex(const Graph& g, Vertex v) {
    const Vertex drop[] = {v};
    return remove_vertices(g, drop);
}

/// G - N[v].
[[nodiscard]] inline Graph remove_closed_neighborhood(const Graph& g, Vertex v) {
    std::vector<Vertex> drop(g.neighbors(v).begin(), g.neighbors(v).end());
    drop.push_back(v);
    return remove_vertices(g, drop);
}

/// Connected components as vertex lists, ordered by smallest member.
[[nodiscard]] inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        auto& comp = out.emplace_back();
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

[[nodiscard]] inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

[[nodiscard]] inline bool is_forest(const Graph& g) {
    return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

/// A tree is connected and has |V| - 1 edges. The empty graph is not a tree.
[[nodiscard]] inline bool is_tree(const Graph& g) {
    return !g.empty() && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

/// Disjoint union of the two marked graphs with their marks identified
/// (the rooted-tree product). The result's mark is the merged vertex; the
/// first operand keeps its labels.
[[nodiscard]] inline MarkedGraph identify_marks(const MarkedGraph& x, const MarkedGraph& y) {
    const std::size_t n1 = x.graph.vertex_count();
    Graph out(n1 + y.graph.vertex_count() - 1);
    for (const Edge& e : x.graph.edges()) out.add_edge(e.u, e.v);
    auto map = [&](Vertex v) -> Vertex {
        if (v == y.mark) return x.mark;
        return static_cast<Vertex>(n1 + (v < y.mark ? v : v - 1));
    };
    for (const Edge& e : y.graph.edges()) out.add_edge(map(e.u), map(e.v));
    return MarkedGraph(std::move(out), x.mark);
}

/// Adds a new vertex adjacent to the mark and moves the mark onto it.
[[nodiscard]] inline MarkedGraph extend_mark(const MarkedGraph& x) {
    Graph g = x.graph;
    const Vertex fresh = g.add_vertex();
    g.add_edge(x.mark, fresh);
    return MarkedGraph(std::move(g), fresh);
}

} // namespace indset
