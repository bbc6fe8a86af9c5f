#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "checked.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "tree_enum.hpp"

namespace indset {

/// Rooted-tree pair kept by the sieve; a <= b always.
struct SievePair {
    std::uint32_t a = 1;
    std::uint32_t b = 1;

    [[nodiscard]] std::uint64_t sum() const { return std::uint64_t{a} + b; }
    friend constexpr bool operator==(const SievePair&, const SievePair&) = default;
};

/// Attainable tree values up to `limit`.
///
/// `pairs` is the complete set of reachable pairs with a + b <= pair_limit,
/// ordered by (sum, a); (1,1) comes first. `attainable[x]` is 1 iff some tree
/// (the empty tree for x = 1) has exactly x independent sets; index 0 unused.
struct SieveState {
    std::uint64_t limit = 0;
    std::uint64_t pair_limit = 0;
    std::vector<SievePair> pairs;
    std::vector<std::uint8_t> attainable;

    [[nodiscard]] bool is_attainable(std::uint64_t x) const { return x >= 1 && x <= limit && attainable[x]; }
    [[nodiscard]] std::uint64_t attainable_count() const {
        return static_cast<std::uint64_t>(std::count(attainable.begin(), attainable.end(), std::uint8_t{1}));
    }
};

struct SieveOptions {
    std::uint64_t pair_limit = 20000;     ///< sums closed exactly; raised to sqrt(2N) + 1 if smaller
    std::uint64_t max_pairs = 60'000'000; ///< resource budget on stored pairs
    unsigned workers = 1;                 ///< 0 = hardware concurrency
    std::function<void(const std::string&)> progress;
};

/// Budget exceeded; `partial` is a consistent state at a smaller limit.
class SieveResourceError : public ResourceError {
public:
    SieveResourceError(const std::string& what, SieveState partial)
        : ResourceError(what), partial(std::move(partial)) {}
    SieveState partial;
};

namespace detail {

inline std::uint64_t isqrt_ceil(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while (r * r < v) ++r;
    return r;
}

inline unsigned resolve_workers(unsigned w) {
    if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
    return w;
}

/// Exhaustive search over pairs with sum in (T, M]. Pairs above T only ever
/// combine with stored partners, since two of them multiply past M when
/// T^2 >= 2M. Stored roots are split across workers by index.
class EagerSearch {
public:
    EagerSearch(const std::vector<SievePair>& stored, std::uint64_t T, std::uint64_t M)
        : stored_(stored), T_(T), M_(M) {}

    void run(unsigned workers, std::vector<std::uint8_t>& att) {
        workers = std::max(1u, workers);
        std::vector<std::vector<std::uint8_t>> local(workers, std::vector<std::uint8_t>(M_ + 1, 0));
        auto job = [&](unsigned w) {
            std::vector<SievePair64> stack;
            for (std::size_t i = w; i < stored_.size(); i += workers) from_stored(i, stack, local[w]);
        };
        if (workers == 1) {
            job(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
            for (auto& t : pool) t.join();
        }
        for (const auto& l : local)
            for (std::uint64_t x = T_ + 1; x <= M_; ++x)
                if (l[x]) att[x] = 1;
    }

private:
    struct SievePair64 {
        std::uint64_t a, b;
    };

    void from_stored(std::size_t i, std::vector<SievePair64>& stack, std::vector<std::uint8_t>& att) const {
        const std::uint64_t a = stored_[i].a, b = stored_[i].b, s = a + b;
        if (3 * s > 2 * M_) return;
        push_if(b, a + b, stack);
        // Unordered products with partners of sum <= s (the partner (1,1) is the identity).
        for (std::size_t j = 1; j <= i; ++j) {
            const std::uint64_t s2 = stored_[j].sum();
            if (s2 * s > 2 * M_) break;
            push_if(a * stored_[j].a, b * stored_[j].b, stack);
        }
        drain(stack, att);
    }

    void push_if(std::uint64_t a, std::uint64_t b, std::vector<SievePair64>& stack) const {
        const std::uint64_t s = a + b;
        if (s > T_ && s <= M_) stack.push_back({a, b});
    }

    void drain(std::vector<SievePair64>& stack, std::vector<std::uint8_t>& att) const {
        while (!stack.empty()) {
            const auto [a, b] = stack.back();
            stack.pop_back();
            const std::uint64_t s = a + b;
            att[s] = 1;
            if (3 * s > 2 * M_) continue;
            if (a + 2 * b <= M_) stack.push_back({b, a + b});
            for (std::size_t j = 1; j < stored_.size(); ++j) {
                const std::uint64_t s2 = stored_[j].sum();
                if (s2 * s > 2 * M_) break;
                const std::uint64_t na = a * stored_[j].a, nb = b * stored_[j].b;
                if (na + nb <= M_) stack.push_back({na, nb});
            }
        }
    }

    const std::vector<SievePair>& stored_;
    std::uint64_t T_, M_;
};

} // namespace detail

/// Attainable tree values in [1, N].
///
/// 1. All pairs with sum <= T are closed exactly, in increasing sum order,
///    deduplicated per sum.
/// 2. Values in (T, N] are marked from explicit witnesses: P1 x P2 and
///    P1 x extend(P2) over stored pairs.
/// 3. Every value still unmarked is <= M; an exhaustive search over pairs
///    with sum in (T, M] settles them.
///
/// `resume` must come from a run with limit <= N; its values are reused.
[[nodiscard]] inline SieveState run_sieve(std::uint64_t N, const SieveOptions& opts = {},
                                          const SieveState* resume = nullptr) {
    if (N < 2) throw DomainError("run_sieve: N must be at least 2");
    if (N > (std::uint64_t{1} << 40)) throw DomainError("run_sieve: N too large");
    if (resume && resume->limit > N)
        throw DomainError("run_sieve: cannot resume from limit " + std::to_string(resume->limit) + " down to " +
                          std::to_string(N));
    auto progress = [&](const std::string& msg) {
        if (opts.progress) opts.progress(msg);
    };

    std::uint64_t T = std::max(opts.pair_limit, detail::isqrt_ceil(2 * N) + 1);
    if (resume) T = std::max(T, resume->pair_limit);
    T = std::min(T, N);
    if (T >= (std::uint64_t{1} << 31)) throw DomainError("run_sieve: pair limit too large");

    SieveState st;
    st.limit = N;
    st.pair_limit = T;
    st.attainable.assign(N + 1, 0);
    st.attainable[1] = 1;
    std::uint64_t exact_upto = T;
    if (resume) {
        for (std::uint64_t x = 1; x <= resume->limit; ++x) st.attainable[x] = resume->attainable[x];
        exact_upto = std::max(T, resume->limit);
    }

    // Phase 1: exact closure up to T.
    std::vector<std::vector<std::uint32_t>> buckets(T + 1);
    buckets[2].push_back(1);
    if (resume)
        for (const auto& p : resume->pairs)
            if (p.sum() <= T) buckets[p.sum()].push_back(p.a);
    auto& pairs = st.pairs;
    for (std::uint64_t s = 2; s <= T; ++s) {
        if (s % 10000 == 0) progress("sum " + std::to_string(s) + "/" + std::to_string(T) + " pairs=" + std::to_string(pairs.size()));
        auto& bucket = buckets[s];
        if (bucket.empty()) continue;
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
        std::vector<std::uint32_t> cur;
        cur.swap(bucket);
        st.attainable[s] = 1;
        const std::size_t base = pairs.size();
        for (auto a : cur) pairs.push_back({a, static_cast<std::uint32_t>(s - a)});
        if (pairs.size() > opts.max_pairs) {
            pairs.resize(base);
            SieveState partial;
            partial.limit = partial.pair_limit = s - 1;
            partial.pairs = std::move(pairs);
            partial.attainable.assign(st.attainable.begin(), st.attainable.begin() + static_cast<std::ptrdiff_t>(s));
            throw SieveResourceError("sieve: more than " + std::to_string(opts.max_pairs) + " pairs at sum " +
                                         std::to_string(s),
                                     std::move(partial));
        }
        for (std::size_t i = base; i < pairs.size(); ++i) {
            const std::uint64_t a = pairs[i].a, b = pairs[i].b;
            if (a + 2 * b <= T) buckets[a + 2 * b].push_back(static_cast<std::uint32_t>(b));
            for (std::size_t j = 1; j <= i; ++j) {
                const std::uint64_t s2 = pairs[j].sum();
                if (s2 * s > 2 * T) break;
                const std::uint64_t na = a * pairs[j].a, nb = b * pairs[j].b;
                if (na + nb <= T) buckets[na + nb].push_back(static_cast<std::uint32_t>(na));
            }
        }
    }
    buckets.clear();
    buckets.shrink_to_fit();
    progress("closure done: pairs=" + std::to_string(pairs.size()) + " up to sum " + std::to_string(T));

    // Phase 2: witness join for (exact_upto, N].
    auto& att = st.attainable;
    std::uint64_t uncovered = 0;
    for (std::uint64_t x = exact_upto + 1; x <= N; ++x) uncovered += att[x] ? 0 : 1;
    auto mark = [&](std::uint64_t x) {
        if (x > exact_upto && x <= N && !att[x]) {
            att[x] = 1;
            --uncovered;
        }
    };
    for (std::size_t j = 1; j < pairs.size() && uncovered; ++j) {
        const std::uint64_t a2 = pairs[j].a, b2 = pairs[j].b, s2 = a2 + b2;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const std::uint64_t s1 = pairs[i].sum();
            if (s1 * s2 > 2 * N) break;
            const std::uint64_t aa = pairs[i].a * a2;
            mark(aa + pairs[i].b * b2);
            mark(s1 * s2 - aa);
        }
    }

    // Phase 3: exhaustive search below the largest unsettled value.
    std::uint64_t M = 0;
    if (uncovered)
        for (std::uint64_t x = N; x > exact_upto; --x)
            if (!att[x]) {
                M = x;
                break;
            }
    if (M > T) {
        progress("exhaustive search up to " + std::to_string(M));
        std::vector<std::uint8_t> found(M + 1, 0);
        detail::EagerSearch(pairs, T, M).run(detail::resolve_workers(opts.workers), found);
        for (std::uint64_t x = exact_upto + 1; x <= M; ++x)
            if (found[x]) att[x] = 1;
    }
    return st;
}

/// {1..N} minus the attainable values, ascending.
[[nodiscard]] inline std::vector<std::uint64_t> forbidden_below(const SieveState& s) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1; x <= s.limit; ++x)
        if (!s.attainable[x]) out.push_back(x);
    return out;
}

// Checkpoint file, little-endian:
//   "ISVE" | u32 version | u64 limit | u64 pair_limit | u64 pair count
//   | pairs as u64 a, u64 b sorted by (a, b) | attainable bitmap, bit x = value x,
//   ceil((limit + 1) / 8) bytes | u64 FNV-1a of everything before it
inline constexpr std::uint32_t checkpoint_version = 1;

namespace detail {

struct Fnv {
    std::uint64_t h = 1469598103934665603ULL;
    void add(const void* data, std::size_t n) {
        auto p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ULL;
        }
    }
};

inline void put_u64(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline std::uint64_t get_u64(const std::string& buf, std::size_t& pos, const std::string& what) {
    if (pos + 8 > buf.size()) throw FormatError("checkpoint truncated while reading " + what);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{static_cast<unsigned char>(buf[pos + i])} << (8 * i);
    pos += 8;
    return v;
}

} // namespace detail

[[nodiscard]] inline std::string serialize_checkpoint(const SieveState& s) {
    std::string buf = "ISVE";
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((checkpoint_version >> (8 * i)) & 0xff));
    detail::put_u64(buf, s.limit);
    detail::put_u64(buf, s.pair_limit);
    detail::put_u64(buf, s.pairs.size());
    std::vector<SievePair> lex = s.pairs;
    std::sort(lex.begin(), lex.end(), [](auto x, auto y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
    for (const auto& p : lex) {
        detail::put_u64(buf, p.a);
        detail::put_u64(buf, p.b);
    }
    std::string bits((s.limit + 1 + 7) / 8, '\0');
    for (std::uint64_t x = 1; x <= s.limit; ++x)
        if (s.attainable[x]) bits[x / 8] = static_cast<char>(bits[x / 8] | (1 << (x % 8)));
    buf += bits;
    detail::Fnv f;
    f.add(buf.data(), buf.size());
    detail::put_u64(buf, f.h);
    return buf;
}

[[nodiscard]] inline SieveState deserialize_checkpoint(const std::string& buf) {
    if (buf.size() < 8 || buf.compare(0, 4, "ISVE") != 0) throw FormatError("checkpoint: bad magic (expected ISVE)");
    std::uint32_t version = 0;
    for (int i = 0; i < 4; ++i) version |= std::uint32_t{static_cast<unsigned char>(buf[4 + i])} << (8 * i);
    if (version != checkpoint_version)
        throw FormatError("checkpoint: version " + std::to_string(version) + " not supported (this build reads version " +
                          std::to_string(checkpoint_version) + ")");
    std::size_t pos = 8;
    SieveState s;
    s.limit = detail::get_u64(buf, pos, "limit");
    s.pair_limit = detail::get_u64(buf, pos, "pair limit");
    const std::uint64_t count = detail::get_u64(buf, pos, "pair count");
    if (s.limit < 1 || s.limit > (std::uint64_t{1} << 40) || s.pair_limit > s.limit)
        throw FormatError("checkpoint: inconsistent limits");
    if (count > (buf.size() - pos) / 16) throw FormatError("checkpoint truncated in pair table");
    s.pairs.reserve(count);
    SievePair prev{0, 0};
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto a = detail::get_u64(buf, pos, "pair"), b = detail::get_u64(buf, pos, "pair");
        if (a == 0 || a > b || a + b > s.pair_limit) throw FormatError("checkpoint: invalid pair #" + std::to_string(i));
        const SievePair p{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
        if (i && (p.a < prev.a || (p.a == prev.a && p.b <= prev.b))) throw FormatError("checkpoint: pairs not sorted");
        s.pairs.push_back(p);
        prev = p;
    }
    const std::size_t nbytes = (s.limit + 1 + 7) / 8;
    if (pos + nbytes + 8 > buf.size()) throw FormatError("checkpoint truncated in bitmap");
    s.attainable.assign(s.limit + 1, 0);
    for (std::uint64_t x = 1; x <= s.limit; ++x)
        s.attainable[x] = (static_cast<unsigned char>(buf[pos + x / 8]) >> (x % 8)) & 1;
    pos += nbytes;
    detail::Fnv f;
    f.add(buf.data(), pos);
    if (detail::get_u64(buf, pos, "checksum") != f.h) throw FormatError("checkpoint: checksum mismatch");
    if (pos != buf.size()) throw FormatError("checkpoint: trailing bytes");
    std::sort(s.pairs.begin(), s.pairs.end(),
              [](auto x, auto y) { return x.sum() != y.sum() ? x.sum() < y.sum() : x.a < y.a; });
    if (s.pair_limit >= 2 && (s.pairs.empty() || !(s.pairs.front() == SievePair{1, 1})))
        throw FormatError("checkpoint: (1,1) missing");
    if (!s.attainable[1]) throw FormatError("checkpoint: value 1 not marked");
    return s;
}

inline void save_checkpoint(const SieveState& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    const std::string buf = serialize_checkpoint(s);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("write failed: " + path);
}

[[nodiscard]] inline SieveState load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize_checkpoint(buf);
}

struct CrossValidationRow {
    std::size_t n = 0;
    std::size_t trees = 0;
    std::vector<std::uint64_t> values;  ///< distinct i-values of trees on n vertices
};

struct CrossValidationReport {
    std::size_t n_max = 0;
    std::size_t trees = 0;
    std::set<std::uint64_t> values;
    std::vector<CrossValidationRow> rows;
};

/// Pairs of rooted trees with exactly n vertices, built by the two operations:
/// R_1 = {(1,1)}, R_n = extend(R_{n-1}) u { x*y : x in R_i, y in R_j, i + j = n + 1, i, j >= 2 }.
[[nodiscard]] inline std::vector<std::set<std::pair<std::uint64_t, std::uint64_t>>> pairs_by_vertex_count(std::size_t n_max) {
    std::vector<std::set<std::pair<std::uint64_t, std::uint64_t>>> R(n_max + 1);
    if (n_max >= 1) R[1].insert({1, 1});
    for (std::size_t n = 2; n <= n_max; ++n) {
        for (auto [a, b] : R[n - 1]) R[n].insert({b, a + b});
        for (std::size_t i = 2; i + 2 <= n + 1; ++i) {
            const std::size_t j = n + 1 - i;
            if (j < i) break;
            for (auto [a1, b1] : R[i])
                for (auto [a2, b2] : R[j]) R[n].insert({a1 * a2, b1 * b2});
        }
    }
    return R;
}

/// Every free tree on <= n_max vertices has its i-value marked attainable,
/// and for each n the pair operations reach exactly the values of the
/// enumerated n-vertex trees. Throws ValidationError naming the first mismatch.
[[nodiscard]] inline CrossValidationReport cross_validate(const SieveState& s, std::size_t n_max) {
    if (n_max < 1 || n_max > 12) throw DomainError("cross_validate: n_max must be in 1..12");
    if (s.limit < (std::uint64_t{1} << n_max))
        throw DomainError("cross_validate: sieve limit must be at least 2^n_max");
    CrossValidationReport rep;
    rep.n_max = n_max;
    const auto R = pairs_by_vertex_count(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        CrossValidationRow row;
        row.n = n;
        std::set<std::uint64_t> vals;
        for (const Graph& t : enumerate_trees(n)) {
            const std::uint64_t v = to_u64(count_independent_sets(t));
            if (!s.is_attainable(v))
                throw ValidationError("cross_validate: tree on " + std::to_string(n) + " vertices has i=" +
                                      std::to_string(v) + " but the sieve marks it unattainable");
            vals.insert(v);
            ++row.trees;
        }
        std::set<std::uint64_t> from_pairs;
        for (auto [a, b] : R[n]) from_pairs.insert(a + b);
        if (from_pairs != vals) {
            std::uint64_t bad = 0;
            for (auto v : from_pairs)
                if (!vals.count(v)) bad = v;
            for (auto v : vals)
                if (!from_pairs.count(v)) bad = v;
            throw ValidationError("cross_validate: on " + std::to_string(n) + " vertices the pair operations and the tree "
                                  "enumeration disagree at i=" + std::to_string(bad));
        }
        row.values.assign(vals.begin(), vals.end());
        rep.trees += row.trees;
        rep.values.insert(vals.begin(), vals.end());
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

/// A tree with exactly `value` independent sets, found by searching the pair
/// operations; nullopt iff no tree has that many. value = 1 gives the empty tree.
[[nodiscard]] inline std::optional<Graph> find_tree_witness(std::uint64_t value) {
    if (value == 0) throw DomainError("find_tree_witness: value must be positive");
    if (value == 1) return Graph{};
    if (value > (std::uint64_t{1} << 36)) throw DomainError("find_tree_witness: value too large");

    // Closure up to T with the first derivation of each pair.
    struct Node {
        std::uint64_t a, b;
        std::int64_t x, y;  // x = -1: base; y = -1: extend(x); else product(x, y)
    };
    const std::uint64_t T = std::min(value, std::max<std::uint64_t>(2000, detail::isqrt_ceil(2 * value) + 1));
    std::vector<Node> nodes{{1, 1, -1, -1}};
    std::vector<std::vector<Node>> buckets(T + 1);
    {
        auto emit = [&](std::uint64_t a, std::uint64_t b, std::int64_t x, std::int64_t y) {
            if (a + b <= T) buckets[a + b].push_back({a, b, x, y});
        };
        emit(1, 2, 0, -1);
        for (std::uint64_t s = 3; s <= T; ++s) {
            auto& bk = buckets[s];
            std::stable_sort(bk.begin(), bk.end(), [](const Node& p, const Node& q) { return p.a < q.a; });
            bk.erase(std::unique(bk.begin(), bk.end(), [](const Node& p, const Node& q) { return p.a == q.a; }), bk.end());
            const std::size_t base = nodes.size();
            nodes.insert(nodes.end(), bk.begin(), bk.end());
            bk.clear();
            bk.shrink_to_fit();
            for (std::size_t i = base; i < nodes.size(); ++i) {
                const auto [a, b, x, y] = nodes[i];
                emit(b, a + b, static_cast<std::int64_t>(i), -1);
                for (std::size_t j = 1; j <= i; ++j) {
                    const std::uint64_t s2 = nodes[j].a + nodes[j].b;
                    if (s2 * s > 2 * T) break;
                    emit(a * nodes[j].a, b * nodes[j].b, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
                }
            }
        }
    }

    std::function<MarkedGraph(std::size_t)> build = [&](std::size_t i) -> MarkedGraph {
        const Node& nd = nodes[i];
        if (nd.x < 0) return MarkedGraph::single_vertex();
        if (nd.y < 0) return extend_mark(build(static_cast<std::size_t>(nd.x)));
        return identify_marks(build(static_cast<std::size_t>(nd.x)), build(static_cast<std::size_t>(nd.y)));
    };
    auto finish = [&](const MarkedGraph& mg) -> std::optional<Graph> {
        if (to_u64(count_independent_sets(mg.graph)) != value || !is_tree(mg.graph))
            throw ConstructionError("find_tree_witness: witness does not verify");
        return mg.graph;
    };

    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].a + nodes[i].b == value) return finish(build(i));
    if (value <= T) return std::nullopt;

    // One operation past the stored range.
    for (std::size_t j = 1; j < nodes.size(); ++j) {
        const std::uint64_t s2 = nodes[j].a + nodes[j].b;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const std::uint64_t s1 = nodes[i].a + nodes[i].b;
            if (s1 * s2 > 2 * value) break;
            const std::uint64_t aa = nodes[i].a * nodes[j].a;
            if (aa + nodes[i].b * nodes[j].b == value) return finish(identify_marks(build(i), build(j)));
            if (s1 * s2 - aa == value) return finish(identify_marks(build(i), extend_mark(build(j))));
        }
    }

    // Exhaustive search above T, keeping the derivation path.
    struct Frame {
        std::uint64_t a, b;
        std::size_t depth;
        std::int64_t partner;  // -1: extend of the previous level; else product with nodes[partner]
    };
    std::vector<Frame> stack;
    std::vector<std::int64_t> path;
    auto push = [&](std::uint64_t a, std::uint64_t b, std::size_t depth, std::int64_t partner) {
        if (a + b > T && a + b <= value) stack.push_back({a, b, depth, partner});
    };
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::uint64_t a = nodes[i].a, b = nodes[i].b, s = a + b;
        if (3 * s > 2 * value) continue;
        push(b, a + b, 1, -1);
        for (std::size_t j = 1; j <= i; ++j) {
            const std::uint64_t s2 = nodes[j].a + nodes[j].b;
            if (s2 * s > 2 * value) break;
            push(a * nodes[j].a, b * nodes[j].b, 1, static_cast<std::int64_t>(j));
        }
        path.assign(1, static_cast<std::int64_t>(i));
        while (!stack.empty()) {
            const Frame f = stack.back();
            stack.pop_back();
            path.resize(f.depth);
            path.push_back(f.partner);
            const std::uint64_t s1 = f.a + f.b;
            if (s1 == value) {
                MarkedGraph mg = build(static_cast<std::size_t>(path[0]));
                for (std::size_t k = 1; k < path.size(); ++k)
                    mg = path[k] < 0 ? extend_mark(mg) : identify_marks(mg, build(static_cast<std::size_t>(path[k])));
                stack.clear();
                return finish(mg);
            }
            if (3 * s1 > 2 * value) continue;
            push(f.b, f.a + f.b, f.depth + 1, -1);
            for (std::size_t j = 1; j < nodes.size(); ++j) {
                const std::uint64_t s2 = nodes[j].a + nodes[j].b;
                if (s2 * s1 > 2 * value) break;
                push(f.a * nodes[j].a, f.b * nodes[j].b, f.depth + 1, static_cast<std::int64_t>(j));
            }
        }
    }
    return std::nullopt;
}

} // namespace indset
