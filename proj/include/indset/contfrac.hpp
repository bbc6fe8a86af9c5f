#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "checked.hpp"
#include "errors.hpp"

namespace indset {

/// Partial quotients a_1..a_l of [a_1, ..., a_l] = 1/(a_1 + 1/(a_2 + ... + 1/a_l)).
using Quotients = std::vector<std::uint64_t>;

/// Reduced p/q. (0,1) is the value of the empty expansion and (1,1) that of [1].
struct Fraction {
    std::uint64_t p = 0;
    std::uint64_t q = 1;

    friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
};

/// 2x2 matrix [[m00, m01], [m10, m11]] with nonnegative entries.
struct StepMatrix {
    std::uint64_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;

    /// T_a = [[0, 1], [1, a]]: maps the column (a', b') to (b', a' + a b').
    static constexpr StepMatrix step(std::uint64_t a) { return {0, 1, 1, a}; }

    friend StepMatrix operator*(const StepMatrix& x, const StepMatrix& y) {
        auto dot = [](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
            return checked_add(checked_mul(a, b), checked_mul(c, d));
        };
        return {dot(x.m00, y.m00, x.m01, y.m10), dot(x.m00, y.m01, x.m01, y.m11),
                dot(x.m10, y.m00, x.m11, y.m10), dot(x.m10, y.m01, x.m11, y.m11)};
    }

    [[nodiscard]] __int128 determinant() const {
        return static_cast<__int128>(m00) * m11 - static_cast<__int128>(m01) * m10;
    }

    friend constexpr bool operator==(const StepMatrix&, const StepMatrix&) = default;
};

inline void require_positive(const Quotients& qs) {
    for (auto a : qs)
        if (a == 0) throw DomainError("partial quotients must be positive");
}

[[nodiscard]] inline std::string format_quotients(const Quotients& qs) {
    std::string s = "[";
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(qs[i]);
    }
    return s + "]";
}

/// Value of the continued fraction, applying (p, q) <- (q, p + a q) from the innermost quotient out.
[[nodiscard]] inline Fraction cf_eval(const Quotients& qs) {
    require_positive(qs);
    std::uint64_t p = 0, q = 1;
    for (auto it = qs.rbegin(); it != qs.rend(); ++it) {
        const std::uint64_t np = q;
        q = checked_add(p, checked_mul(*it, q));
        p = np;
    }
    return {p, q};
}

/// T_{a_l} ... T_{a_1}; its bottom row is (p, q) of [a_1, ..., a_l].
[[nodiscard]] inline StepMatrix step_product(const Quotients& qs) {
    require_positive(qs);
    StepMatrix m;
    for (auto a : qs) m = StepMatrix::step(a) * m;
    return m;
}

[[nodiscard]] inline bool is_canonical(const Quotients& qs) {
    for (auto a : qs)
        if (a == 0) return false;
    return qs.size() < 2 || qs.back() >= 2;
}

/// Folds a trailing 1 into its predecessor: [..., x, 1] -> [..., x + 1].
[[nodiscard]] inline Quotients canonicalize(Quotients qs) {
    require_positive(qs);
    if (qs.size() >= 2 && qs.back() == 1) {
        qs.pop_back();
        qs.back() = checked_add(qs.back(), std::uint64_t{1});
    }
    return qs;
}

/// Canonical expansion of p/q (Euclid), 0 < p < q, gcd(p, q) = 1.
[[nodiscard]] inline Quotients cf_expand(Fraction f) {
    if (f.p == 0 || f.p >= f.q) throw DomainError("cf_expand: need 0 < p < q");
    if (gcd_of(f.p, f.q) != 1) throw DomainError("cf_expand: p and q must be coprime");
    Quotients qs;
    std::uint64_t num = f.p, den = f.q;
    while (num != 0) {
        qs.push_back(den / num);
        const std::uint64_t r = den % num;
        den = num;
        num = r;
    }
    return qs;
}

/// The other expansion of the same rational: [..., a_l] -> [..., a_l - 1, 1].
[[nodiscard]] inline Quotients alternate_form(Quotients qs) {
    require_positive(qs);
    if (qs.empty() || qs.back() < 2) throw DomainError("alternate_form: last quotient must be at least 2");
    qs.back() -= 1;
    qs.push_back(1);
    return qs;
}

/// A witness that q lies in Q_A: p/q = [quotients] with every quotient <= A.
struct ZarembaCertificate {
    std::uint64_t p = 0;
    Quotients quotients;
};

namespace detail {

/// Largest quotient needed for p/q, taking the better of its two expansions.
[[nodiscard]] inline std::uint64_t expansion_bound(std::uint64_t p, std::uint64_t q) {
    std::uint64_t prefix_max = 0, last = 0;
    std::uint64_t num = p, den = q;
    while (num != 0) {
        if (last) prefix_max = std::max(prefix_max, last);
        last = den / num;
        const std::uint64_t r = den % num;
        den = num;
        num = r;
    }
    return std::max({prefix_max, last - 1, std::uint64_t{1}});
}

} // namespace detail

/// Smallest p whose expansion (canonical or alternate) has all quotients <= A.
/// q = 1 is a member with the empty certificate.
[[nodiscard]] inline std::optional<ZarembaCertificate> zaremba_member(std::uint64_t q, std::uint64_t A) {
    if (q == 0 || A == 0) throw DomainError("zaremba_member: q and A must be positive");
    if (q == 1) return ZarembaCertificate{};
    for (std::uint64_t p = 1; p < q; ++p) {
        if (gcd_of(p, q) != 1 || detail::expansion_bound(p, q) > A) continue;
        Quotients qs = cf_expand({p, q});
        const bool canonical_ok = std::all_of(qs.begin(), qs.end(), [A](auto a) { return a <= A; });
        return ZarembaCertificate{p, canonical_ok ? std::move(qs) : alternate_form(std::move(qs))};
    }
    return std::nullopt;
}

/// min { A : q in Q_A }.
[[nodiscard]] inline std::uint64_t minimal_quotient_bound(std::uint64_t q) {
    if (q == 0) throw DomainError("minimal_quotient_bound: q must be positive");
    if (q == 1) return 1;
    std::uint64_t best = q;
    for (std::uint64_t p = 1; p < q; ++p)
        if (gcd_of(p, q) == 1) best = std::min(best, detail::expansion_bound(p, q));
    return best;
}

/// Q_A intersected with [1, N], ascending.
///
/// Walks the tree of canonical words (last quotient in 2..A+1, which covers the
/// alternate forms ending in ...,A,1; all other quotients in 1..A) by prepending
/// quotients, (p, q) -> (q, p + a q), pruning once q exceeds N. Each reduced
/// fraction is visited once.
[[nodiscard]] inline std::vector<std::uint64_t> zaremba_sieve(std::uint64_t A, std::uint64_t N) {
    if (A == 0 || N == 0) throw DomainError("zaremba_sieve: A and N must be positive");
    std::vector<bool> hit(N + 1, false);
    hit[1] = true;
    std::vector<Fraction> stack;
    for (std::uint64_t c = 2; c <= A + 1 && c <= N; ++c) stack.push_back({1, c});
    while (!stack.empty()) {
        const Fraction f = stack.back();
        stack.pop_back();
        hit[f.q] = true;
        for (std::uint64_t a = 1; a <= A; ++a) {
            const std::uint64_t nq = f.p + a * f.q;
            if (nq > N) break;
            stack.push_back({f.q, nq});
        }
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 1; q <= N; ++q)
        if (hit[q]) out.push_back(q);
    return out;
}

struct DensityRow {
    std::uint64_t n;
    std::uint64_t count;
    double density;
};

/// |Q_A ∩ [1, n]| / n at n = 10, 100, ... up to `limit`, and at `limit` itself.
[[nodiscard]] inline std::vector<DensityRow> zaremba_density(std::uint64_t A, std::uint64_t limit) {
    const auto members = zaremba_sieve(A, limit);
    std::vector<std::uint64_t> checkpoints;
    for (std::uint64_t n = 10; n <= limit; n *= 10) checkpoints.push_back(n);
    if (checkpoints.empty() || checkpoints.back() != limit) checkpoints.push_back(limit);
    std::vector<DensityRow> rows;
    for (auto n : checkpoints) {
        const auto count = static_cast<std::uint64_t>(std::upper_bound(members.begin(), members.end(), n) - members.begin());
        rows.push_back({n, count, static_cast<double>(count) / static_cast<double>(n)});
    }
    return rows;
}

} // namespace indset
