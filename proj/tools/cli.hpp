#pragma once

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indset/indset.hpp"

namespace indset::cli {

enum Exit : int { ok = 0, usage = 1, io = 2, resource = 3, validation = 4, unrealizable = 5 };

namespace detail {

/// An unrealizable request; carries its own exit code.
struct Unrealizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Destination that is either a file or the given stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw IoError("cannot open " + path + " for writing");
            out_ = file_.get();
        }
    }
    std::ostream& operator*() { return *out_; }
    void close() {
        if (file_) {
            file_->close();
            if (!*file_) throw IoError("write failed");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* out_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline unsigned workers_from_env(unsigned flag) {
    if (const char* env = std::getenv("INDSET_WORKERS")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            throw DomainError(std::string("INDSET_WORKERS is not a number: ") + env);
        }
    }
    return flag;
}

inline std::vector<std::string> normalized_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

inline void write_graph(std::ostream& out, const Graph& g, const std::string& format,
                        const std::vector<std::string>& comments) {
    if (format == "dot")
        write_dot(out, g, {}, comments);
    else
        write_edge_list(out, g, comments);
}

} // namespace detail

struct SieveArgs {
    std::uint64_t limit = 832040;
    std::uint64_t pair_limit = 20000;
    std::uint64_t max_pairs = 60'000'000;
    std::string out_pairs, out_forbidden, resume;
    unsigned workers = 0;
    bool quiet = false;
};

inline int cmd_sieve(const SieveArgs& a, std::ostream& out, std::ostream& err) {
    SieveOptions opts;
    opts.pair_limit = a.pair_limit;
    opts.max_pairs = a.max_pairs;
    opts.workers = detail::workers_from_env(a.workers);
    if (!a.quiet) opts.progress = [&err](const std::string& m) { err << "sieve: " << m << '\n'; };
    std::optional<SieveState> prev;
    if (!a.resume.empty()) prev = load_checkpoint(a.resume);
    SieveState st;
    try {
        st = run_sieve(a.limit, opts, prev ? &*prev : nullptr);
    } catch (const SieveResourceError& e) {
        if (!a.out_pairs.empty()) {
            save_checkpoint(e.partial, a.out_pairs);
            err << "sieve: partial checkpoint at limit " << e.partial.limit << " written to " << a.out_pairs << '\n';
        }
        throw;
    }
    const auto forbidden = forbidden_below(st);
    if (!a.out_pairs.empty()) save_checkpoint(st, a.out_pairs);
    if (!a.out_forbidden.empty()) {
        detail::Sink sink(a.out_forbidden, out);
        for (auto x : forbidden) *sink << x << '\n';
        sink.close();
    }
    out << "limit=" << st.limit << '\n';
    out << "pairs=" << st.pairs.size() << '\n';
    out << "attainable=" << st.attainable_count() << '\n';
    out << "forbidden=" << forbidden.size() << '\n';
    out << "max_forbidden=" << (forbidden.empty() ? 0 : forbidden.back()) << '\n';
    return ok;
}

struct RealizeArgs {
    std::string kind;
    std::string value;
    std::uint64_t max_quotient = 5;
    std::string format = "edges";
    std::string out;
};

inline int cmd_realize(const RealizeArgs& a, std::ostream& out, std::ostream& err) {
    const Count value = parse_count(a.value);
    if (value == 0) throw DomainError("--value must be at least 1");
    const std::uint64_t v = to_u64(value);
    Graph g;
    std::vector<std::string> comments{"target=" + a.value};
    if (a.kind == "tree") {
        auto t = find_tree_witness(v);
        if (!t) throw detail::Unrealizable("no tree has exactly " + a.value + " independent sets");
        g = std::move(*t);
    } else if (a.kind == "planar") {
        auto r = realize_planar(v, a.max_quotient);
        if (!r)
            throw detail::Unrealizable("q=" + a.value + " has no fraction p/q with partial quotients <= " +
                                       std::to_string(a.max_quotient));
        comments[0] += " quotients=" + format_quotients(r->quotient_certificate);
        g = std::move(r->graph);
    } else {
        if (const auto bad = first_unrealizable_prime(v, a.max_quotient))
            throw detail::Unrealizable("prime factor " + std::to_string(*bad) + " of " + a.value +
                                       " has no fraction with partial quotients <= " + std::to_string(a.max_quotient));
        auto r = realize_bounded_degree(v, a.max_quotient);
        std::string certs;
        for (const auto& [p, qs] : r->factor_certificates) certs += (certs.empty() ? "" : ";") + std::to_string(p) + ":" + format_quotients(qs);
        comments[0] += " quotients=" + certs;
        g = std::move(r->graph);
    }
    const Count check = count_independent_sets(g);
    if (check != value) throw ConstructionError("realized graph recounts to " + to_string(check));
    comments.push_back("vertices=" + std::to_string(g.vertex_count()) + " edges=" + std::to_string(g.edge_count()) +
                       " d=" + average_degree(g).str());
    detail::Sink sink(a.out, out);
    detail::write_graph(*sink, g, a.format, comments);
    sink.close();
    if (!a.out.empty() && a.out != "-") out << "i=" << to_string(check) << " vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
    (void)err;
    return ok;
}

inline int cmd_zaremba(std::uint64_t A, std::uint64_t limit, const std::string& path, std::ostream& out) {
    const auto rows = zaremba_density(A, limit);
    detail::Sink sink(path, out);
    *sink << "N,count,density\n";
    for (const auto& r : rows) *sink << r.n << ',' << r.count << ',' << std::setprecision(6) << r.density << '\n';
    sink.close();
    return ok;
}

inline int cmd_census(std::size_t ell_max, const std::string& path, std::ostream& out) {
    if (ell_max == 0 || ell_max > 22) throw DomainError("--ell-max must be in 1..22");
    detail::Sink sink(path, out);
    *sink << "ell,tuples,distinct_vectors,distinct_iT,bound_sqrt_m\n";
    for (std::size_t ell = 1; ell <= ell_max; ++ell) {
        const CensusRow r = run_census(ell, false);
        *sink << r.ell << ',' << r.tuples << ',' << r.distinct_vectors << ',' << r.distinct_i_tree << ','
              << std::setprecision(6) << r.bound_sqrt_m << '\n';
    }
    sink.close();
    return ok;
}

inline int cmd_count(const std::string& path, std::ostream& out) {
    std::istringstream in(detail::read_file(path));
    const Graph g = read_edge_list(in);
    out << "i=" << to_string(count_independent_sets(g)) << " d=" << average_degree(g).str()
        << " components=" << connected_components(g).size() << " euler=" << (check_euler_bound(g) ? "ok" : "fail")
        << '\n';
    return ok;
}

inline int cmd_verify_fixture(const std::string& produced, const std::string& fixture, std::ostream& out,
                              std::ostream& err) {
    const auto a = detail::normalized_lines(detail::read_file(produced));
    const auto b = detail::normalized_lines(detail::read_file(fixture));
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::string x = i < a.size() ? a[i] : "<eof>";
        const std::string y = i < b.size() ? b[i] : "<eof>";
        if (x != y) {
            err << "verify-fixture: line " << i + 1 << " differs: '" << x << "' vs '" << y << "'\n";
            out << "match=no line=" << i + 1 << '\n';
            return validation;
        }
    }
    out << "match=yes lines=" << a.size() << '\n';
    return ok;
}

inline int cmd_report_growth(std::vector<std::uint64_t> limits, unsigned workers, const std::string& path,
                             std::ostream& out) {
    if (limits.empty()) throw DomainError("no limits given");
    std::sort(limits.begin(), limits.end());
    if (limits.front() < 2) throw DomainError("limits must be at least 2");
    SieveOptions opts;
    opts.workers = detail::workers_from_env(workers);
    const SieveState st = run_sieve(limits.back(), opts);
    detail::Sink sink(path, out);
    *sink << "N,count,exponent\n";
    std::uint64_t count = 0, upto = 0;
    for (auto n : limits) {
        for (; upto < n;) count += st.attainable[++upto];
        *sink << n << ',' << count << ',' << std::setprecision(6)
              << std::log(static_cast<double>(count)) / std::log(static_cast<double>(n)) << '\n';
    }
    sink.close();
    return ok;
}

inline int cmd_report_omega(std::uint64_t N, std::uint64_t k, std::ostream& out) {
    if (N < 2) throw DomainError("--limit must be at least 2");
    if (k == 0) k = static_cast<std::uint64_t>(std::ceil(0.5 * std::log2(static_cast<double>(N))));
    const std::uint64_t count = count_big_omega_at_least(N, k);
    const double bound = static_cast<double>(k) / std::ldexp(1.0, static_cast<int>(k)) * static_cast<double>(N) *
                         std::log(static_cast<double>(N));
    const bool holds = static_cast<double>(count) <= bound;
    out << "N=" << N << " k=" << k << " count=" << count << " bound=" << std::fixed << std::setprecision(1) << bound
        << " holds=" << (holds ? "yes" : "no") << '\n';
    return holds ? ok : validation;
}

/// Parses and dispatches; returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Independent-set counts: realizers, tree-value sieve, continued-fraction reports", "indset"};
    app.require_subcommand(1);

    SieveArgs sa;
    auto* sieve = app.add_subcommand("sieve", "attainable tree values up to a limit; writes the forbidden list");
    sieve->add_option("--limit", sa.limit, "largest value decided")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    sieve->add_option("--out-pairs", sa.out_pairs, "checkpoint file to write");
    sieve->add_option("--out-forbidden", sa.out_forbidden, "forbidden list, one integer per line ('-' = stdout)");
    sieve->add_option("--resume", sa.resume, "checkpoint from an earlier run with a smaller limit");
    sieve->add_option("--workers", sa.workers, "threads for the exhaustive phase (0 = all cores)");
    sieve->add_option("--pair-limit", sa.pair_limit, "sums closed exactly in the first phase");
    sieve->add_option("--max-pairs", sa.max_pairs, "memory budget in stored pairs");
    sieve->add_flag("--quiet", sa.quiet, "no progress log");

    RealizeArgs ra;
    auto* realize = app.add_subcommand("realize", "build a graph with a given number of independent sets");
    realize->add_option("kind", ra.kind, "tree | planar | avgdeg")->required()->check(CLI::IsMember({"tree", "planar", "avgdeg"}));
    realize->add_option("--value", ra.value, "target count")->required();
    realize->add_option("--max-quotient", ra.max_quotient, "bound A on partial quotients")->check(CLI::PositiveNumber);
    realize->add_option("--format", ra.format, "edges | dot")->check(CLI::IsMember({"edges", "dot"}));
    realize->add_option("--out", ra.out, "output file (default stdout)");

    std::uint64_t z_a = 5, z_limit = 100000;
    std::string z_out;
    auto* zaremba = app.add_subcommand("zaremba", "density of denominators with bounded partial quotients");
    zaremba->add_option("--max-quotient", z_a, "bound A")->check(CLI::PositiveNumber);
    zaremba->add_option("--limit", z_limit, "largest denominator N")->check(CLI::PositiveNumber);
    zaremba->add_option("--out", z_out, "CSV file (default stdout)");

    std::size_t c_ell = 12;
    std::string c_out;
    auto* census = app.add_subcommand("census", "distinct (i(T), i(T')) vectors over {1,2}^l");
    census->add_option("--ell-max", c_ell, "tuple lengths 1..l")->check(CLI::Range(1, 22));
    census->add_option("--out", c_out, "CSV file (default stdout)");

    std::string count_path;
    auto* count = app.add_subcommand("count", "i(G), average degree and components of an edge-list file");
    count->add_option("input", count_path, "edge-list file")->required();

    std::string vf_produced, vf_fixture;
    auto* verify = app.add_subcommand("verify-fixture", "compare two integer lists line by line");
    verify->add_option("forbidden", vf_produced)->required();
    verify->add_option("fixture", vf_fixture)->required();

    auto* report = app.add_subcommand("report", "experiment reports");
    report->require_subcommand(1);
    std::vector<std::uint64_t> g_limits{10000, 100000, 832040};
    unsigned g_workers = 0;
    std::string g_out;
    auto* growth = report->add_subcommand("growth", "log|attainable ∩ [1,N]| / log N");
    growth->add_option("--limits", g_limits, "comma-separated N values")->delimiter(',');
    growth->add_option("--workers", g_workers, "threads for the sieve");
    growth->add_option("--out", g_out, "CSV file (default stdout)");
    std::uint64_t o_limit = 1000000, o_k = 0;
    auto* omega = report->add_subcommand("omega", "integers up to N with at least k prime factors");
    omega->add_option("--limit", o_limit, "N");
    omega->add_option("--k", o_k, "default ceil(log2(N) / 2)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "indset: " << e.what() << '\n';
        return usage;
    }

    try {
        if (*sieve) return cmd_sieve(sa, out, err);
        if (*realize) return cmd_realize(ra, out, err);
        if (*zaremba) return cmd_zaremba(z_a, z_limit, z_out, out);
        if (*census) return cmd_census(c_ell, c_out, out);
        if (*count) return cmd_count(count_path, out);
        if (*verify) return cmd_verify_fixture(vf_produced, vf_fixture, out, err);
        if (*growth) return cmd_report_growth(g_limits, g_workers, g_out, out);
        if (*omega) return cmd_report_omega(o_limit, o_k, out);
    } catch (const detail::Unrealizable& e) {
        err << "indset: unrealizable: " << e.what() << '\n';
        return unrealizable;
    } catch (const DomainError& e) {
        err << "indset: " << e.what() << '\n';
        return usage;
    } catch (const IoError& e) {
        err << "indset: " << e.what() << '\n';
        return io;
    } catch (const FormatError& e) {
        err << "indset: " << e.what() << '\n';
        return io;
    } catch (const ResourceError& e) {
        err << "indset: " << e.what() << '\n';
        return resource;
    } catch (const OverflowError& e) {
        err << "indset: " << e.what() << '\n';
        return resource;
    } catch (const ValidationError& e) {
        err << "indset: " << e.what() << '\n';
        return validation;
    } catch (const ConstructionError& e) {
        err << "indset: " << e.what() << '\n';
        return validation;
    }
    return usage;
}

} // namespace indset::cli
