#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "contfrac.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace indset {

/// A graph with two adjacent marks v', w', each adjacent to every other
/// vertex, certified to have i(G' - v' - w') = k. Gluing it onto a marked
/// graph maps the split (a, b) to (b, a + k b).
struct Gadget {
    Graph graph;
    Vertex v_prime = 0;
    Vertex w_prime = 1;
    Count k = 0;
    bool planar_certified = false;
};

/// Adds two universal, mutually adjacent marks to `core`; k = i(core).
/// `planar_family` asserts the caller knows the result is planar; the Euler
/// bound is still checked before the gadget is marked planar.
[[nodiscard]] inline Gadget gadget_from_core(const Graph& core, bool planar_family) {
    Gadget gd;
    gd.graph = core;
    gd.v_prime = gd.graph.add_vertex();
    gd.w_prime = gd.graph.add_vertex();
    gd.graph.add_edge(gd.v_prime, gd.w_prime);
    for (Vertex u = 0; u < core.vertex_count(); ++u) {
        gd.graph.add_edge(u, gd.v_prime);
        gd.graph.add_edge(u, gd.w_prime);
    }
    gd.k = count_deleting_marks(MarkedGraph(gd.graph, gd.v_prime, gd.w_prime));
    gd.planar_certified = planar_family && check_euler_bound(gd.graph);
    return gd;
}

/// Gadget with i(G' - v' - w') = k.
///
///   k in {1,2,3}          K_{k+1}
///   k = 4, planar_only    K_4 minus an edge, marks on the degree-3 vertices
///   k = 5, planar_only    K_5 minus an edge (remainder P_3), marks on two degree-4 vertices
///   k >= 4 otherwise      K_{k+1}
[[nodiscard]] inline Gadget gadget(std::uint64_t k, bool planar_only) {
    if (k == 0) throw DomainError("gadget: k must be positive");
    if (planar_only && k > 5) throw DomainError("gadget: planar gadgets exist only for k <= 5, got " + std::to_string(k));
    Gadget gd;
    if (k <= 3)
        gd = gadget_from_core(Graph::complete(k - 1), true);
    else if (planar_only && k == 4)
        gd = gadget_from_core(Graph::edgeless(2), true);
    else if (planar_only && k == 5)
        gd = gadget_from_core(Graph::path(3), true);
    else
        gd = gadget_from_core(Graph::complete(k - 1), false);
    if (gd.k != k) throw ConstructionError("gadget certified k=" + to_string(gd.k) + ", expected " + std::to_string(k));
    if (planar_only && !gd.planar_certified) throw ConstructionError("planar gadget fails the Euler bound");
    return gd;
}

/// Identifies mg's mark with v' and moves the mark to w'.
[[nodiscard]] inline MarkedGraph glue(const MarkedGraph& mg, const Gadget& gd) {
    if (mg.graph.empty()) throw DomainError("glue: empty marked graph");
    const MarkedGraph joined = identify_marks(mg, MarkedGraph(gd.graph, gd.v_prime));
    const auto n1 = static_cast<Vertex>(mg.graph.vertex_count());
    const Vertex w = n1 + (gd.w_prime < gd.v_prime ? gd.w_prime : gd.w_prime - 1);
    return MarkedGraph(joined.graph, w);
}

struct RealizationResult {
    Graph graph;
    Count target = 0;
    Quotients quotient_certificate;  ///< canonical expansion used (planar realizer)
    std::vector<std::pair<std::uint64_t, Quotients>> factor_certificates;  ///< per prime (bounded-degree realizer)
    std::vector<std::uint64_t> gadget_sequence;
    bool vertex_bound_ok = false;
};

/// Gluing sequence for the canonical certificate [c_1..c_l] (c_l >= 2):
/// (c_l - 1, c_{l-1}, ..., c_1). Starting from (1, 1) this drives the
/// without-mark count to exactly q.
[[nodiscard]] inline std::vector<std::uint64_t> gluing_sequence(const Quotients& canonical) {
    if (canonical.empty() || !is_canonical(canonical) || canonical.back() < 2)
        throw DomainError("gluing_sequence: need a canonical certificate ending in a quotient >= 2");
    std::vector<std::uint64_t> ks{canonical.back() - 1};
    for (std::size_t i = canonical.size() - 1; i-- > 0;) ks.push_back(canonical[i]);
    return ks;
}

namespace detail {

/// Chain of gadgets glued onto a single vertex, with the final mark deleted.
inline Graph glue_chain(const std::vector<std::uint64_t>& ks, bool planar_only) {
    MarkedGraph mg = MarkedGraph::single_vertex();
    for (auto k : ks) mg = glue(mg, gadget(k, planar_only));
    return remove_vertex(mg.graph, mg.mark);
}

inline double log_phi(double x) { return std::log(x) / std::log((1.0 + std::sqrt(5.0)) / 2.0); }

} // namespace detail

/// |V| <= 5 log_phi q (with 1e-9 slack for the floating logarithm).
[[nodiscard]] inline bool planar_vertex_bound_holds(std::size_t vertices, Count q) {
    if (q <= 1) return vertices == 0;
    return static_cast<double>(vertices) <= 5.0 * detail::log_phi(static_cast<double>(q)) + 1e-9;
}

/// Connected planar graph with exactly q independent sets, built from the
/// smallest p whose expansion of p/q has quotients <= A (A <= 5). Returns
/// nullopt iff q is not in Q_A. q = 1 gives the empty graph.
[[nodiscard]] inline std::optional<RealizationResult> realize_planar(std::uint64_t q, std::uint64_t A = 5) {
    if (q == 0) throw DomainError("realize_planar: q must be positive");
    if (A == 0 || A > 5) throw DomainError("realize_planar: planar gadgets cover quotient bounds 1..5");
    RealizationResult res;
    res.target = q;
    if (q == 1) {
        res.vertex_bound_ok = true;
        return res;
    }
    const auto cert = zaremba_member(q, A);
    if (!cert) return std::nullopt;
    res.quotient_certificate = canonicalize(cert->quotients);
    res.gadget_sequence = gluing_sequence(res.quotient_certificate);
    res.graph = detail::glue_chain(res.gadget_sequence, true);

    const Count got = count_independent_sets(res.graph);
    if (got != q) throw ConstructionError("realize_planar(" + std::to_string(q) + "): built graph has i=" + to_string(got));
    if (!is_connected(res.graph)) throw ConstructionError("realize_planar: result is disconnected");
    if (!check_euler_bound(res.graph)) throw ConstructionError("realize_planar: result fails the Euler bound");
    res.vertex_bound_ok = planar_vertex_bound_holds(res.graph.vertex_count(), q);
    if (!res.vertex_bound_ok) throw ConstructionError("realize_planar: vertex bound 5 log_phi q violated");
    return res;
}

/// Prime factors with multiplicity, ascending (trial division).
[[nodiscard]] inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    if (n == 0) throw DomainError("prime_factors: n must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

/// First prime factor of n outside Q_A, if any.
[[nodiscard]] inline std::optional<std::uint64_t> first_unrealizable_prime(std::uint64_t n, std::uint64_t A) {
    for (auto p : prime_factors(n))
        if (!zaremba_member(p, A)) return p;
    return std::nullopt;
}

/// Graph (not necessarily connected) with exactly n independent sets and
/// average degree <= A + 1: one gadget chain of K_{k+1}'s (k <= A) per prime
/// factor, combined by disjoint union. nullopt iff some prime factor lies
/// outside Q_A.
[[nodiscard]] inline std::optional<RealizationResult> realize_bounded_degree(std::uint64_t n, std::uint64_t A) {
    if (n == 0 || A == 0) throw DomainError("realize_bounded_degree: n and A must be positive");
    RealizationResult res;
    res.target = n;
    for (auto prime : prime_factors(n)) {
        const auto cert = zaremba_member(prime, A);
        if (!cert) return std::nullopt;
        Quotients canonical = canonicalize(cert->quotients);
        const auto ks = gluing_sequence(canonical);
        res.graph = disjoint_union(res.graph, detail::glue_chain(ks, false));
        res.gadget_sequence.insert(res.gadget_sequence.end(), ks.begin(), ks.end());
        res.factor_certificates.emplace_back(prime, std::move(canonical));
    }
    const Count got = count_independent_sets(res.graph);
    if (got != n) throw ConstructionError("realize_bounded_degree(" + std::to_string(n) + "): built graph has i=" + to_string(got));
    if (average_degree(res.graph) > Ratio(A + 1, 1))
        throw ConstructionError("realize_bounded_degree: average degree exceeds A + 1");
    res.vertex_bound_ok = true;
    return res;
}

/// g plus t isolated vertices; i is multiplied by 2^t.
[[nodiscard]] inline Graph pad_isolated(const Graph& g, std::size_t t) {
    Graph out = g;
    for (std::size_t i = 0; i < t; ++i) out.add_vertex();
    return out;
}

/// floor(log2 N) for N >= 1.
[[nodiscard]] inline unsigned floor_log2(Count n) {
    if (n == 0) throw DomainError("floor_log2: zero");
    unsigned k = 0;
    while (n >>= 1) ++k;
    return k;
}

/// Sparse realization of 2^ceil(k/2) K with k = floor(log2 N): a connected
/// planar graph with K independent sets padded by ceil(k/2) isolated
/// vertices. Returns nullopt when K is not planar-realizable, when
/// |V| > ceil(k/2) d / (6 - d), or when the padded count exceeds N.
/// Otherwise the result has average degree strictly below d.
[[nodiscard]] inline std::optional<RealizationResult> realize_low_degree(std::uint64_t K, Ratio d, Count N) {
    if (K == 0 || N == 0) throw DomainError("realize_low_degree: K and N must be positive");
    if (d.num == 0 || d >= Ratio(2, 1)) throw DomainError("realize_low_degree: d must lie in (0, 2)");
    const unsigned k = floor_log2(N);
    const unsigned pad = (k + 1) / 2;
    auto base = realize_planar(K);
    if (!base) return std::nullopt;

    // |V| (6 - d) <= pad d, cleared of denominators.
    const Count vertices = base->graph.vertex_count();
    if (checked_mul(vertices, Count(6 * d.den - d.num)) > checked_mul(Count(pad), Count(d.num))) return std::nullopt;
    if (pad >= 127) return std::nullopt;
    const Count value = checked_mul(Count{1} << pad, Count(K));
    if (value > N) return std::nullopt;

    RealizationResult res = std::move(*base);
    res.graph = pad_isolated(res.graph, pad);
    res.target = value;
    if (count_independent_sets(res.graph) != value) throw ConstructionError("realize_low_degree: padded count mismatch");
    if (!(average_degree(res.graph) < d)) throw ConstructionError("realize_low_degree: average degree not below d");
    return res;
}

} // namespace indset
