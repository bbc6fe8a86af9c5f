#pragma once

// Slow, obviously-correct reference implementations used to check the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "indset/graph.hpp"

namespace oracle {

using indset::Graph;
using indset::Vertex;

/// i(G) by checking all 2^n subsets.
inline std::uint64_t subsets(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& e : g.edges())
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
                ok = false;
                break;
            }
        count += ok;
    }
    return count;
}

/// (with v, without v) by subsets.
inline std::pair<std::uint64_t, std::uint64_t> subsets_split(const Graph& g, Vertex v) {
    const std::size_t n = g.vertex_count();
    std::uint64_t with = 0, without = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& e : g.edges())
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        ((mask >> v & 1) ? with : without)++;
    }
    return {with, without};
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
    return g;
}

/// Tree from a Prufer sequence over {0..n-1}, n = seq.size() + 2.
inline Graph prufer_tree(const std::vector<Vertex>& seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<int> deg(n, 1);
    for (auto x : seq) ++deg[x];
    Graph g(n);
    for (auto x : seq) {
        Vertex leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        g.add_edge(std::min(leaf, x), std::max(leaf, x));
        --deg[leaf];
        --deg[x];
    }
    Vertex u = 0;
    while (deg[u] != 1) ++u;
    Vertex w = u + 1;
    while (deg[w] != 1) ++w;
    g.add_edge(u, w);
    return g;
}

/// Distinct i-values of all labeled trees on n vertices (Prufer enumeration).
inline std::set<std::uint64_t> labeled_tree_values(std::size_t n) {
    if (n == 1) return {2};
    if (n == 2) return {3};
    std::set<std::uint64_t> out;
    std::vector<Vertex> seq(n - 2, 0);
    while (true) {
        out.insert(subsets(prufer_tree(seq)));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

/// Isomorphism by trying every relabeling; small n only.
inline bool isomorphic(const Graph& x, const Graph& y) {
    if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count()) return false;
    std::vector<Vertex> perm(x.vertex_count());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        bool ok = true;
        for (const auto& e : x.edges())
            if (!y.has_edge(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Continued-fraction expansion of p/q by repeated division, and the value
/// of a quotient list by exact fraction arithmetic from the inside out.
inline std::vector<std::uint64_t> euclid(std::uint64_t p, std::uint64_t q) {
    std::vector<std::uint64_t> out;
    while (p) {
        out.push_back(q / p);
        const auto r = q % p;
        q = p;
        p = r;
    }
    return out;
}

inline std::pair<std::uint64_t, std::uint64_t> evaluate(const std::vector<std::uint64_t>& qs) {
    // x = 0/1 innermost; x <- 1 / (a + x)
    std::uint64_t num = 0, den = 1;
    for (auto it = qs.rbegin(); it != qs.rend(); ++it) {
        const std::uint64_t nn = den, nd = *it * den + num;
        num = nn;
        den = nd;
    }
    const auto g = std::gcd(num, den);
    return {num / g, den / g};
}

/// q in Q_A: some coprime p has an expansion (either form) with quotients <= A.
inline bool in_QA(std::uint64_t q, std::uint64_t A) {
    if (q == 1) return true;
    for (std::uint64_t p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        auto qs = euclid(p, q);
        if (*std::max_element(qs.begin(), qs.end()) <= A) return true;
        qs.back() -= 1;
        qs.push_back(1);
        bool ok = true;
        for (auto a : qs) ok = ok && a >= 1 && a <= A;
        if (ok) return true;
    }
    return false;
}

inline std::uint64_t big_omega(std::uint64_t x) {
    std::uint64_t k = 0;
    for (std::uint64_t p = 2; p * p <= x; ++p)
        while (x % p == 0) {
            x /= p;
            ++k;
        }
    return k + (x > 1);
}

/// Full pair closure by brute force: every pair with sum <= N reachable from
/// (1,1) by extension and product, in a std::set.
inline std::set<std::uint64_t> closure_values(std::uint64_t N) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen{{1, 1}};
    std::vector<std::pair<std::uint64_t, std::uint64_t>> work{{1, 1}};
    while (!work.empty()) {
        const auto [a, b] = work.back();
        work.pop_back();
        std::vector<std::pair<std::uint64_t, std::uint64_t>> next{{b, a + b}};
        for (auto [c, d] : seen) next.push_back({a * c, b * d});
        for (auto pr : next)
            if (pr.first + pr.second <= N && seen.insert(pr).second) work.push_back(pr);
    }
    std::set<std::uint64_t> out{1};
    for (auto [a, b] : seen) out.insert(a + b);
    return out;
}

inline std::vector<std::uint64_t> fibonacci_upto(std::uint64_t N) {
    std::vector<std::uint64_t> out;
    std::uint64_t a = 1, b = 2;
    while (a <= N) {
        out.push_back(a);
        const auto c = a + b;
        a = b;
        b = c;
    }
    return out;
}

} // namespace oracle
