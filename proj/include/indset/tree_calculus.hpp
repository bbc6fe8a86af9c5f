#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "contfrac.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace indset {

/// (a, b) split of a rooted tree: a sets contain the root, b avoid it.
/// Every rooted tree has 1 <= a <= b.
struct PairCount {
    Count a = 1;
    Count b = 1;

    [[nodiscard]] Count sum() const { return checked_add(a, b); }
    [[nodiscard]] Count g() const { return gcd_of(a, b); }
    /// a/b in lowest terms.
    [[nodiscard]] std::pair<Count, Count> r() const {
        const Count d = g();
        return {a / d, b / d};
    }

    friend constexpr bool operator==(const PairCount&, const PairCount&) = default;
    friend constexpr auto operator<=>(const PairCount&, const PairCount&) = default;
};

/// New root adjacent to the old one.
[[nodiscard]] inline PairCount extend(PairCount p) { return {p.b, checked_add(p.a, p.b)}; }

/// Roots identified.
[[nodiscard]] inline PairCount product(PairCount x, PairCount y) {
    return {checked_mul(x.a, y.a), checked_mul(x.b, y.b)};
}

[[nodiscard]] inline bool is_power_of_two(Count v) { return v != 0 && (v & (v - 1)) == 0; }

/// A pair together with an explicit rooted tree realizing it, and the
/// continued fraction [quotient_log] = a/b it has been driven to.
struct CalculusState {
    PairCount pair;
    MarkedGraph tree;
    Quotients quotient_log;

    /// Recounts the witness; throws ConstructionError if it disagrees with `pair`.
    void verify() const {
        if (!is_tree(tree.graph)) throw ConstructionError("calculus witness is not a tree");
        const CountSplit s = count_marked(tree);
        if (s.with_mark != pair.a || s.without_mark != pair.b)
            throw ConstructionError("calculus witness counts (" + to_string(s.with_mark) + "," +
                                    to_string(s.without_mark) + ") differ from pair (" + to_string(pair.a) + "," +
                                    to_string(pair.b) + ")");
    }
};

/// The two base elements: k = 1 is the single vertex, r = 1; k = 2 is P_2
/// rooted at an end, r = 1/2.
[[nodiscard]] inline CalculusState base_state(std::uint64_t k) {
    if (k == 1) return {{1, 1}, MarkedGraph::single_vertex(), {1}};
    if (k == 2) return {{1, 2}, MarkedGraph(Graph::path(2), 0), {2}};
    throw DomainError("base element exists only for k in {1, 2}");
}

/// Product with base(k), extension, product with base(k) again.
/// (a, b) -> (k b, k (a + k b)), so r -> 1/(k + r) and g -> k g.
[[nodiscard]] inline CalculusState lemma31_step(const CalculusState& s, std::uint64_t k) {
    const CalculusState base = base_state(k);
    MarkedGraph t = identify_marks(s.tree, base.tree);
    t = extend_mark(t);
    t = identify_marks(t, base.tree);
    CalculusState out{product(extend(product(s.pair, base.pair)), base.pair), std::move(t), {k}};
    out.quotient_log.insert(out.quotient_log.end(), s.quotient_log.begin(), s.quotient_log.end());
    return out;
}

/// Rooted tree with r = [a_1, ..., a_l], every a_i in {1, 2}: start from
/// base(a_l) and apply lemma31_step with a_{l-1}, ..., a_1.
[[nodiscard]] inline CalculusState build_from_quotients(const Quotients& qs) {
    if (qs.empty()) throw DomainError("build_from_quotients: empty quotient list");
    for (auto a : qs)
        if (a != 1 && a != 2) throw DomainError("build_from_quotients: quotients must be 1 or 2");
    CalculusState s = base_state(qs.back());
    for (std::size_t i = qs.size() - 1; i-- > 0;) s = lemma31_step(s, qs[i]);
    return s;
}

/// tau^n = x + y sqrt(2) with tau = 1 + sqrt(2).
[[nodiscard]] inline std::pair<Count, Count> tau_power(unsigned n) {
    Count x = 1, y = 0;
    for (unsigned i = 0; i < n; ++i) {
        const Count nx = checked_add(x, checked_mul(Count{2}, y));
        y = checked_add(x, y);
        x = nx;
    }
    return {x, y};
}

/// Exact test of v <= (1 + sqrt 2)^n.
[[nodiscard]] inline bool at_most_tau_power(Count v, unsigned n) {
    const auto [x, y] = tau_power(n);
    if (v <= x) return true;
    const Count d = v - x;
    return checked_mul(d, d) <= checked_mul(Count{2}, checked_mul(y, y));
}

/// Arithmetic content of the two-tree construction for one tuple over {1, 2}.
struct Theorem13Values {
    std::vector<std::uint8_t> tuple;
    Quotients root_quotients;  ///< r(T, v) = [root_quotients]
    bool prepended_one = false;
    Count P = 0, Q = 0, g = 0;
    PairCount pair;
    Count i_tree = 0;      ///< i(T) = a + b
    Count i_extended = 0;  ///< i(T') = a + 2b
};

struct Theorem13Witness {
    Theorem13Values values;
    Graph tree;
    Vertex root = 0;
    Graph extended_tree;
};

namespace detail {

inline void validate_tuple(const std::vector<std::uint8_t>& tuple) {
    if (tuple.empty()) throw DomainError("tuple must be nonempty");
    for (auto a : tuple)
        if (a != 1 && a != 2) throw DomainError("tuple entries must be 1 or 2");
}

inline Quotients with_prefix(std::initializer_list<std::uint64_t> prefix, const std::vector<std::uint8_t>& tuple) {
    Quotients qs(prefix);
    qs.insert(qs.end(), tuple.begin(), tuple.end());
    return qs;
}

} // namespace detail

/// (P, Q) from the parity rule and the pair of the root obtained by pure pair
/// arithmetic (no graph is built).
[[nodiscard]] inline Theorem13Values theorem13_values(const std::vector<std::uint8_t>& tuple) {
    detail::validate_tuple(tuple);
    Theorem13Values v;
    v.tuple = tuple;
    Fraction pq = cf_eval(detail::with_prefix({1}, tuple));
    if (pq.q % 2 == 1) {
        v.root_quotients.assign(tuple.begin(), tuple.end());
    } else {
        pq = cf_eval(detail::with_prefix({1, 1}, tuple));
        v.root_quotients = detail::with_prefix({1}, tuple);
        v.prepended_one = true;
    }
    v.P = pq.p;
    v.Q = pq.q;

    PairCount pair = base_state(v.root_quotients.back()).pair;
    for (std::size_t i = v.root_quotients.size() - 1; i-- > 0;) {
        const PairCount base = base_state(v.root_quotients[i]).pair;
        pair = product(extend(product(pair, base)), base);
    }
    v.pair = pair;
    v.g = pair.g();
    v.i_tree = pair.sum();
    v.i_extended = checked_add(pair.a, checked_mul(Count{2}, pair.b));
    return v;
}

/// Denominator of [1, 1, 2, ..., 2] (l twos). Both parity branches are
/// monotone in the a_i, so this bounds Q over all of {1,2}^l. The all-2 tuple
/// alone does not: 122 takes the even branch and beats 222.
[[nodiscard]] inline Count theorem13_max_Q(std::size_t ell) {
    Quotients qs{1, 1};
    qs.insert(qs.end(), ell, 2);
    return Count(cf_eval(qs).q);
}

/// Checks every identity the two-tree construction promises; throws
/// ConstructionError naming the first violation.
inline void check_theorem13_identities(const Theorem13Values& v) {
    auto fail = [&](const std::string& what) {
        std::string t;
        for (auto a : v.tuple) t += std::to_string(a);
        throw ConstructionError("tuple " + t + ": " + what);
    };
    const auto ell = static_cast<unsigned>(v.tuple.size());
    const auto [rp, rq] = v.pair.r();
    if (v.Q % 2 == 0) fail("Q is even");
    if (gcd_of(v.P, v.Q) != 1) fail("gcd(P, Q) != 1");
    if (!is_power_of_two(v.g)) fail("g is not a power of two");
    if (v.g > rq) fail("g exceeds the denominator of r");
    if (rp + rq != v.Q) fail("Q != numerator + denominator of r");
    if (v.i_tree != checked_mul(v.g, v.Q)) fail("i(T) != g Q");
    if (v.i_extended != checked_add(checked_mul(v.g, v.P), checked_mul(v.g, v.Q))) fail("i(T') != g P + g Q");
    if (v.i_tree > checked_mul(v.Q, v.Q)) fail("i(T) > Q^2");
    if (!at_most_tau_power(v.Q, ell + 2)) fail("Q > tau^(l+2)");
    if (v.Q > theorem13_max_Q(ell)) fail("Q exceeds the all-2 tuple's Q");
    const Fraction r = cf_eval(v.root_quotients);
    if (Count(r.p) != rp || Count(r.q) != rq) fail("r(T, v) differs from the continued fraction");
}

/// Builds T with r(T, v) per the parity rule and T' = T plus a leaf at v,
/// recounts both graphs and checks all identities.
[[nodiscard]] inline Theorem13Witness theorem13_build(const std::vector<std::uint8_t>& tuple) {
    Theorem13Witness w;
    w.values = theorem13_values(tuple);
    check_theorem13_identities(w.values);

    const CalculusState s = build_from_quotients(w.values.root_quotients);
    if (s.pair != w.values.pair) throw ConstructionError("witness pair differs from pair arithmetic");
    s.verify();
    w.tree = s.tree.graph;
    w.root = s.tree.mark;
    w.extended_tree = w.tree;
    const Vertex leaf = w.extended_tree.add_vertex();
    w.extended_tree.add_edge(w.root, leaf);

    if (count_independent_sets(w.tree) != w.values.i_tree) throw ConstructionError("i(T) recount mismatch");
    if (count_independent_sets(w.extended_tree) != w.values.i_extended) throw ConstructionError("i(T') recount mismatch");
    return w;
}

struct PQRecovery {
    Count P = 0, Q = 0, g = 0;
    friend constexpr bool operator==(const PQRecovery&, const PQRecovery&) = default;
};

/// Inverse of the construction on its image: Q is the odd part of i(T), g
/// the 2-part, P = (i(T') - i(T)) / g.
[[nodiscard]] inline PQRecovery recover_PQ(Count i_tree, Count i_extended) {
    if (i_tree == 0) throw DomainError("recover_PQ: i(T) must be positive");
    if (i_extended <= i_tree) throw DomainError("recover_PQ: need i(T') > i(T)");
    Count g = 1;
    while ((i_tree / g) % 2 == 0) g *= 2;
    const Count diff = i_extended - i_tree;
    if (diff % g != 0) throw DomainError("recover_PQ: i(T') - i(T) is not divisible by g");
    return {diff / g, i_tree / g, g};
}

struct CaterpillarResult {
    Graph graph;
    Count count = 0;
};

/// Spine v_1 .. v_k (vertices 0..k-1) with leaf_counts[i] pendant leaves on v_i.
/// The count comes from the spine transfer recurrence and is checked against
/// an exact recount.
[[nodiscard]] inline CaterpillarResult caterpillar(const std::vector<std::uint64_t>& leaf_counts) {
    if (leaf_counts.empty()) throw DomainError("caterpillar: empty spine");
    const std::size_t k = leaf_counts.size();
    Graph g = Graph::path(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint64_t j = 0; j < leaf_counts[i]; ++j) g.add_edge(static_cast<Vertex>(i), g.add_vertex());

    auto pow2 = [](std::uint64_t e) {
        if (e >= 128) throw OverflowError("caterpillar: 2^leaves does not fit");
        return Count{1} << e;
    };
    Count x = 1, y = pow2(leaf_counts[0]);  // spine vertex in / out of the set
    for (std::size_t i = 1; i < k; ++i) {
        const Count nx = y;
        y = checked_mul(checked_add(x, y), pow2(leaf_counts[i]));
        x = nx;
    }
    const Count total = checked_add(x, y);
    if (count_independent_sets(g) != total) throw ConstructionError("caterpillar recurrence disagrees with recount");
    return {std::move(g), total};
}

struct CensusRow {
    std::size_t ell = 0;
    std::uint64_t tuples = 0;
    std::uint64_t distinct_vectors = 0;
    std::uint64_t distinct_i_tree = 0;
    std::uint64_t distinct_i_extended = 0;
    double bound_sqrt_m = 0;
};

/// Runs the construction over all of {1,2}^l, keeps the lexicographically
/// smallest tuple per (P, Q), and checks: the identities for every tuple,
/// recover_PQ inverts every tuple, at least 2^l / 2 distinct (i(T), i(T'))
/// vectors, and max(#distinct i(T), #distinct i(T'))^2 >= 2^l / 2.
/// With `build_witnesses`, every tree is also built and recounted.
/// Throws ValidationError / ConstructionError on any failure.
[[nodiscard]] inline CensusRow run_census(std::size_t ell, bool build_witnesses) {
    if (ell == 0 || ell > 22) throw DomainError("census: l must be in [1, 22]");
    const std::uint64_t tuples = std::uint64_t{1} << ell;
    std::map<std::pair<Count, Count>, std::vector<std::uint8_t>> chosen;
    std::map<std::pair<Count, Count>, int> multiplicity;
    std::vector<std::uint8_t> tuple(ell);
    for (std::uint64_t bits = 0; bits < tuples; ++bits) {
        // bit i (from the top) selects a_{i+1} = 2; ascending bits is lexicographic order.
        for (std::size_t i = 0; i < ell; ++i) tuple[i] = ((bits >> (ell - 1 - i)) & 1U) ? 2 : 1;
        Theorem13Values v;
        if (build_witnesses) {
            v = theorem13_build(tuple).values;
        } else {
            v = theorem13_values(tuple);
            check_theorem13_identities(v);
        }
        const PQRecovery back = recover_PQ(v.i_tree, v.i_extended);
        if (back.P != v.P || back.Q != v.Q || back.g != v.g)
            throw ValidationError("census: recover_PQ does not invert the construction");
        const auto key = std::make_pair(v.P, v.Q);
        chosen.try_emplace(key, tuple);
        if (++multiplicity[key] > 2) throw ValidationError("census: more than two tuples share one (P, Q)");
    }

    std::set<std::pair<Count, Count>> vectors;
    std::set<Count> xs, ys;
    for (const auto& [pq, t] : chosen) {
        const Theorem13Values v = theorem13_values(t);
        vectors.emplace(v.i_tree, v.i_extended);
        xs.insert(v.i_tree);
        ys.insert(v.i_extended);
    }

    CensusRow row;
    row.ell = ell;
    row.tuples = tuples;
    row.distinct_vectors = vectors.size();
    row.distinct_i_tree = xs.size();
    row.distinct_i_extended = ys.size();
    const std::uint64_t m = tuples / 2;
    row.bound_sqrt_m = std::sqrt(static_cast<double>(m));
    if (2 * row.distinct_vectors < tuples) throw ValidationError("census: fewer than 2^l/2 distinct vectors");
    const std::uint64_t best = std::max(row.distinct_i_tree, row.distinct_i_extended);
    if (best * best < row.distinct_vectors || best * best < m)
        throw ValidationError("census: neither coordinate has sqrt(m) distinct values");
    return row;
}

} // namespace indset
