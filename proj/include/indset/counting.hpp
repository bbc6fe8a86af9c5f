#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace indset {

/// Independent sets containing the mark (with_mark) and avoiding it (without_mark).
struct CountSplit {
    Count with_mark = 0;
    Count without_mark = 0;

    [[nodiscard]] Count total() const { return checked_add(with_mark, without_mark); }
    friend constexpr bool operator==(const CountSplit&, const CountSplit&) = default;
};

enum class CountMethod {
    automatic,  ///< components, linear DP on tree components, branching elsewhere
    branching,  ///< components + branching on every component, tree shortcut disabled
    tree_dp,    ///< forests only; product of the rooted two-state DP
};

namespace detail {

/// Rooted two-state DP over the tree component containing `root`.
/// Assumes that component is acyclic.
[[nodiscard]] inline CountSplit tree_split(const Graph& g, Vertex root) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> order;
    std::vector<std::int64_t> parent(n, -2);
    order.push_back(root);
    parent[root] = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex v = order[i];
        for (Vertex w : g.neighbors(v)) {
            if (parent[w] != -2) continue;
            parent[w] = v;
            order.push_back(w);
        }
    }
    std::vector<Count> with(n, 1), without(n, 1);
    for (std::size_t i = order.size(); i-- > 0;) {
        const Vertex v = order[i];
        if (parent[v] < 0) continue;
        const auto p = static_cast<Vertex>(parent[v]);
        with[p] = checked_mul(with[p], without[v]);
        without[p] = checked_mul(without[p], checked_add(with[v], without[v]));
    }
    return {with[root], without[root]};
}

/// Branch-and-reduce counter over vertex subsets of a graph with at most
/// 64*W vertices. Subsets are fixed-width bitsets; results for connected
/// subsets are memoized.
template <std::size_t W>
class BranchCounter {
public:
    using Set = std::array<std::uint64_t, W>;

    BranchCounter(const Graph& g, bool tree_shortcut) : n_(g.vertex_count()), tree_shortcut_(tree_shortcut) {
        adj_.assign(n_, Set{});
        for (const Edge& e : g.edges()) {
            insert(adj_[e.u], e.v);
            insert(adj_[e.v], e.u);
        }
    }

    [[nodiscard]] Count count_all() {
        Set all{};
        for (Vertex v = 0; v < n_; ++v) insert(all, v);
        return count(all);
    }

private:
    struct SetHash {
        std::size_t operator()(const Set& s) const noexcept {
            std::uint64_t h = 0x9e3779b97f4a7c15ULL;
            for (std::uint64_t w : s) {
                h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                h *= 0xbf58476d1ce4e5b9ULL;
            }
            return static_cast<std::size_t>(h ^ (h >> 31));
        }
    };

    static void insert(Set& s, Vertex v) { s[v >> 6] |= std::uint64_t{1} << (v & 63); }
    static void erase(Set& s, Vertex v) { s[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    static bool any(const Set& s) {
        for (auto w : s)
            if (w) return true;
        return false;
    }
    static int size(const Set& s) {
        int c = 0;
        for (auto w : s) c += std::popcount(w);
        return c;
    }
    static Vertex lowest(const Set& s) {
        for (std::size_t i = 0; i < W; ++i)
            if (s[i]) return static_cast<Vertex>(64 * i + std::countr_zero(s[i]));
        return 0;
    }
    static Set intersect(const Set& x, const Set& y) {
        Set r;
        for (std::size_t i = 0; i < W; ++i) r[i] = x[i] & y[i];
        return r;
    }
    static Set minus(const Set& x, const Set& y) {
        Set r;
        for (std::size_t i = 0; i < W; ++i) r[i] = x[i] & ~y[i];
        return r;
    }

    template <typename F>
    static void for_each(const Set& s, F&& f) {
        for (std::size_t i = 0; i < W; ++i)
            for (std::uint64_t w = s[i]; w; w &= w - 1) f(static_cast<Vertex>(64 * i + std::countr_zero(w)));
    }

    Set component_of(Vertex start, const Set& within) const {
        Set comp{}, frontier{};
        insert(comp, start);
        insert(frontier, start);
        while (any(frontier)) {
            Set reach{};
            for_each(frontier, [&](Vertex v) {
                for (std::size_t i = 0; i < W; ++i) reach[i] |= adj_[v][i];
            });
            frontier = minus(intersect(reach, within), comp);
            for (std::size_t i = 0; i < W; ++i) comp[i] |= frontier[i];
        }
        return comp;
    }

    Count count(const Set& s) {
        Count result = 1;
        Set rest = s;
        while (any(rest)) {
            const Set comp = component_of(lowest(rest), rest);
            result = checked_mul(result, count_connected(comp));
            rest = minus(rest, comp);
        }
        return result;
    }

    Count tree_count(const Set& c) {
        // Rooted DP restricted to c, processed in reverse BFS order.
        std::vector<Vertex> order{lowest(c)};
        Set seen{};
        insert(seen, order[0]);
        std::vector<Vertex> parent(n_, 0);
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Vertex v = order[i];
            for_each(minus(intersect(adj_[v], c), seen), [&](Vertex w) {
                insert(seen, w);
                parent[w] = v;
                order.push_back(w);
            });
        }
        std::vector<Count> with(n_, 1), without(n_, 1);
        for (std::size_t i = order.size(); i-- > 1;) {
            const Vertex v = order[i], p = parent[v];
            with[p] = checked_mul(with[p], without[v]);
            without[p] = checked_mul(without[p], checked_add(with[v], without[v]));
        }
        return checked_add(with[order[0]], without[order[0]]);
    }

    Count count_connected(const Set& c) {
        const int k = size(c);
        if (k == 1) return 2;
        if (k == 2) return 3;
        if (auto it = memo_.find(c); it != memo_.end()) return it->second;

        int twice_edges = 0;
        Vertex pivot = 0;
        int pivot_degree = -1;
        for_each(c, [&](Vertex v) {
            const int d = size(intersect(adj_[v], c));
            twice_edges += d;
            if (d > pivot_degree) {
                pivot_degree = d;
                pivot = v;
            }
        });

        Count result;
        if (tree_shortcut_ && twice_edges == 2 * (k - 1)) {
            result = tree_count(c);
        } else {
            Set without_pivot = c;
            erase(without_pivot, pivot);
            const Set without_closed = minus(without_pivot, adj_[pivot]);
            result = checked_add(count(without_pivot), count(without_closed));
        }
        memo_.emplace(c, result);
        return result;
    }

    std::size_t n_;
    bool tree_shortcut_;
    std::vector<Set> adj_;
    std::unordered_map<Set, Count, SetHash> memo_;
};

/// Largest connected component the branching engine accepts.
inline constexpr std::size_t max_branching_vertices = 64 * 64;

[[nodiscard]] inline Count count_by_branching(const Graph& g, bool tree_shortcut) {
    const std::size_t n = g.vertex_count();
    if (n <= 64) return BranchCounter<1>(g, tree_shortcut).count_all();
    if (n <= 128) return BranchCounter<2>(g, tree_shortcut).count_all();
    if (n <= 256) return BranchCounter<4>(g, tree_shortcut).count_all();
    if (n <= 512) return BranchCounter<8>(g, tree_shortcut).count_all();
    if (n <= 1024) return BranchCounter<16>(g, tree_shortcut).count_all();
    if (n <= 2048) return BranchCounter<32>(g, tree_shortcut).count_all();
    if (n <= max_branching_vertices) return BranchCounter<64>(g, tree_shortcut).count_all();
    throw ResourceError("non-tree component with " + std::to_string(n) + " vertices exceeds the branching limit of " +
                        std::to_string(max_branching_vertices));
}

} // namespace detail

/// i(g): the number of independent vertex sets of g, the empty set included.
///
/// Factorizes over connected components, runs the linear two-state DP on
/// tree components and branches on a maximum-degree vertex elsewhere,
/// i(G) = i(G - v) + i(G - N[v]). Throws OverflowError rather than wrap.
[[nodiscard]] inline Count count_independent_sets(const Graph& g, CountMethod method = CountMethod::automatic) {
    if (method == CountMethod::tree_dp && !is_forest(g)) throw DomainError("tree_dp requires a forest");
    Count result = 1;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) {
            result = checked_mul(result, Count{2});
            continue;
        }
        std::size_t twice_edges = 0;
        for (Vertex v : comp) twice_edges += g.degree(v);
        const bool tree = twice_edges == 2 * (comp.size() - 1);
        if (tree && method != CountMethod::branching) {
            result = checked_mul(result, detail::tree_split(g, comp.front()).total());
            continue;
        }
        std::vector<bool> keep(g.vertex_count(), false);
        for (Vertex v : comp) keep[v] = true;
        const Graph sub = induced_subgraph(g, keep);
        result = checked_mul(result, detail::count_by_branching(sub, method != CountMethod::branching));
    }
    return result;
}

/// (a, b) = (#independent sets containing the mark, #avoiding it).
[[nodiscard]] inline CountSplit count_marked(const MarkedGraph& mg) {
    const Graph& g = mg.graph;
    if (g.empty()) throw DomainError("count_marked: empty graph");
    if (is_forest(g)) {
        // The mark's component carries the split; other components multiply both parts.
        CountSplit s = detail::tree_split(g, mg.mark);
        std::vector<bool> keep(g.vertex_count(), true);
        for (const auto& comp : connected_components(g))
            if (std::binary_search(comp.begin(), comp.end(), mg.mark))
                for (Vertex v : comp) keep[v] = false;
        const Count rest = count_independent_sets(induced_subgraph(g, keep));
        return {checked_mul(s.with_mark, rest), checked_mul(s.without_mark, rest)};
    }
    return {count_independent_sets(remove_closed_neighborhood(g, mg.mark)),
            count_independent_sets(remove_vertex(g, mg.mark))};
}

/// i(G - v - w) for a doubly marked graph.
[[nodiscard]] inline Count count_deleting_marks(const MarkedGraph& mg) {
    if (!mg.second_mark) throw DomainError("count_deleting_marks: second mark absent");
    const Vertex drop[] = {mg.mark, *mg.second_mark};
    return count_independent_sets(remove_vertices(mg.graph, drop));
}

} // namespace indset
