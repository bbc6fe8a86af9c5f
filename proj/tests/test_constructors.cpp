#include <catch_amalgamated.hpp>

#include <fstream>
#include <random>

#include "indset/constructors.hpp"
#include "oracles.hpp"

using namespace indset;

namespace {

bool universal_marks(const Gadget& gd) {
    if (!gd.graph.has_edge(gd.v_prime, gd.w_prime)) return false;
    for (Vertex u = 0; u < gd.graph.vertex_count(); ++u) {
        if (u == gd.v_prime || u == gd.w_prime) continue;
        if (!gd.graph.has_edge(u, gd.v_prime) || !gd.graph.has_edge(u, gd.w_prime)) return false;
    }
    return true;
}

std::vector<std::uint64_t> read_fixture() {
    std::ifstream in(INDSET_FIXTURE);
    std::vector<std::uint64_t> out;
    std::uint64_t x;
    while (in >> x) out.push_back(x);
    return out;
}

} // namespace

TEST_CASE("gadgets", "[gadget]") {
    SECTION("k = 2 is K_3") {
        const Gadget g = gadget(2, true);
        REQUIRE(g.graph == Graph::complete(3));
        REQUIRE(g.k == 2);
        REQUIRE(g.planar_certified);
    }
    SECTION("k = 4, planar: K_4 minus an edge") {
        const Gadget g = gadget(4, true);
        REQUIRE(g.graph.vertex_count() == 4);
        REQUIRE(g.graph.edge_count() == 5);
        REQUIRE(g.graph.degree(g.v_prime) == 3);
        REQUIRE(g.graph.degree(g.w_prime) == 3);
        REQUIRE(g.k == 4);
    }
    SECTION("k = 5, planar: K_5 minus an edge, remainder P_3") {
        const Gadget g = gadget(5, true);
        REQUIRE(g.graph.vertex_count() == 5);
        REQUIRE(g.graph.edge_count() == 9);
        REQUIRE(g.graph.degree(g.v_prime) == 4);
        REQUIRE(g.k == 5);
        REQUIRE(g.planar_certified);
        REQUIRE(count_independent_sets(remove_vertices(g.graph, std::vector<Vertex>{g.v_prime, g.w_prime})) == 5);
    }
    SECTION("k = 7, general: K_8") {
        const Gadget g = gadget(7, false);
        REQUIRE(g.graph == Graph::complete(8));
        REQUIRE(g.k == 7);
        REQUIRE_FALSE(g.planar_certified);
    }
    REQUIRE_THROWS_AS(gadget(6, true), DomainError);
    REQUIRE_THROWS_AS(gadget(0, false), DomainError);

    for (std::uint64_t k = 1; k <= 20; ++k) {
        const Gadget g = gadget(k, false);
        REQUIRE(g.k == k);
        REQUIRE(universal_marks(g));
        REQUIRE(count_deleting_marks(MarkedGraph(g.graph, g.v_prime, g.w_prime)) == k);
        if (k <= 5) {
            const Gadget p = gadget(k, true);
            REQUIRE(universal_marks(p));
            REQUIRE(check_euler_bound(p.graph));
        }
    }
}

TEST_CASE("glue transfer law", "[glue]") {
    const MarkedGraph a = glue(MarkedGraph::single_vertex(), gadget(1, true));
    REQUIRE(a.graph == Graph::complete(2));
    REQUIRE(count_marked(a).with_mark == 1);
    REQUIRE(count_marked(a).without_mark == 2);

    const MarkedGraph b = glue(MarkedGraph::single_vertex(), gadget(2, true));
    REQUIRE(b.graph == Graph::complete(3));
    REQUIRE(count_marked(b).without_mark == 3);

    const MarkedGraph c = glue(MarkedGraph(Graph::path(2), 0), gadget(1, true));
    REQUIRE(count_marked(c).with_mark == 2);
    REQUIRE(count_marked(c).without_mark == 3);

    std::mt19937_64 rng(21);
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
        const Graph g = oracle::random_graph(n, 0.35, rng);
        const MarkedGraph mg(g, std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(n - 1))(rng));
        const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(1, 5)(rng);
        const Gadget gd = gadget(k, it % 2 == 0);
        const auto [a0, b0] = oracle::subsets_split(mg.graph, mg.mark);
        const MarkedGraph out = glue(mg, gd);
        REQUIRE(out.graph.vertex_count() == n + gd.graph.vertex_count() - 1);
        const auto [a1, b1] = oracle::subsets_split(out.graph, out.mark);
        REQUIRE(a1 == b0);
        REQUIRE(b1 == a0 + k * b0);
    }
}

TEST_CASE("gluing sequence", "[planar]") {
    REQUIRE(gluing_sequence({2}) == std::vector<std::uint64_t>{1});
    REQUIRE(gluing_sequence({3}) == std::vector<std::uint64_t>{2});
    REQUIRE(gluing_sequence({1, 2, 5}) == std::vector<std::uint64_t>{4, 2, 1});
    REQUIRE_THROWS_AS(gluing_sequence({2, 1}), DomainError);
    REQUIRE_THROWS_AS(gluing_sequence({}), DomainError);
}

TEST_CASE("realize_planar examples", "[planar]") {
    SECTION("q = 1") {
        const auto r = realize_planar(1);
        REQUIRE(r);
        REQUIRE(r->graph.empty());
    }
    SECTION("q = 2") {
        const auto r = realize_planar(2);
        REQUIRE(r->quotient_certificate == Quotients{2});
        REQUIRE(r->gadget_sequence == std::vector<std::uint64_t>{1});
        REQUIRE(r->graph == Graph(1));
    }
    SECTION("q = 3") {
        const auto r = realize_planar(3);
        REQUIRE(r->quotient_certificate == Quotients{3});
        REQUIRE(r->gadget_sequence == std::vector<std::uint64_t>{2});
        REQUIRE(r->graph == Graph::complete(2));
    }
    SECTION("q outside Q_1") { REQUIRE_FALSE(realize_planar(4, 1)); }
    REQUIRE_THROWS_AS(realize_planar(0), DomainError);
    REQUIRE_THROWS_AS(realize_planar(10, 6), DomainError);
}

TEST_CASE("realize_planar over Q_5 up to 3000", "[planar]") {
    for (auto q : zaremba_sieve(5, 3000)) {
        const auto r = realize_planar(q);
        REQUIRE(r);
        const Graph& g = r->graph;
        if (g.vertex_count() <= 20) REQUIRE(oracle::subsets(g) == q);
        REQUIRE(count_independent_sets(g) == q);
        REQUIRE(is_connected(g));
        REQUIRE(check_euler_bound(g));
        REQUIRE(planar_vertex_bound_holds(g.vertex_count(), q));
        REQUIRE(r->vertex_bound_ok);
    }
}

TEST_CASE("realize_planar with smaller quotient bounds", "[planar]") {
    for (std::uint64_t A = 1; A <= 4; ++A)
        for (std::uint64_t q = 1; q <= 500; ++q) {
            const auto r = realize_planar(q, A);
            REQUIRE(r.has_value() == oracle::in_QA(q, A));
            if (r) REQUIRE(count_independent_sets(r->graph) == q);
        }
}

TEST_CASE("realize_bounded_degree", "[avgdeg]") {
    const auto six = realize_bounded_degree(6, 5);
    REQUIRE(six);
    REQUIRE(count_independent_sets(six->graph) == 6);
    REQUIRE(connected_components(six->graph).size() == 2);
    REQUIRE(average_degree(six->graph) <= Ratio(6, 1));

    const auto four = realize_bounded_degree(4, 5);
    REQUIRE(count_independent_sets(four->graph) == 4);

    const auto A71 = minimal_quotient_bound(71);
    REQUIRE_FALSE(zaremba_member(71, A71 - 1));
    const auto r71 = realize_bounded_degree(71, A71);
    REQUIRE(r71);
    REQUIRE(count_independent_sets(r71->graph) == 71);

    REQUIRE_FALSE(realize_bounded_degree(7, 1));
    REQUIRE(realize_bounded_degree(4, 1));
    REQUIRE(first_unrealizable_prime(4 * 7, 1) == 7);
    REQUIRE_FALSE(first_unrealizable_prime(6, 5));
    REQUIRE_THROWS_AS(realize_bounded_degree(0, 5), DomainError);
}

TEST_CASE("realize_bounded_degree up to 2000", "[avgdeg]") {
    std::size_t realized = 0;
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        bool all_in = true;
        for (auto p : prime_factors(n)) all_in = all_in && oracle::in_QA(p, 5);
        const auto r = realize_bounded_degree(n, 5);
        REQUIRE(r.has_value() == all_in);
        if (!r) continue;
        ++realized;
        REQUIRE(count_independent_sets(r->graph) == n);
        REQUIRE(average_degree(r->graph) <= Ratio(6, 1));
    }
    REQUIRE(realized > 1900);
}

TEST_CASE("prime factors", "[avgdeg]") {
    REQUIRE(prime_factors(1).empty());
    REQUIRE(prime_factors(360) == std::vector<std::uint64_t>{2, 2, 2, 3, 3, 5});
    REQUIRE(prime_factors(1000003) == std::vector<std::uint64_t>{1000003});
}

TEST_CASE("pad_isolated", "[lowdeg]") {
    REQUIRE(count_independent_sets(pad_isolated(Graph::complete(3), 1)) == 8);
    REQUIRE(pad_isolated(Graph::path(4), 0) == Graph::path(4));
    const Graph k4 = pad_isolated(Graph::complete(4), 2);
    REQUIRE(count_independent_sets(k4) == 20);
    REQUIRE(average_degree(k4) == Ratio(2, 1));
    REQUIRE(average_degree(k4) < average_degree(Graph::complete(4)));
}

TEST_CASE("realize_low_degree", "[lowdeg]") {
    const Count N20 = Count{1} << 20;
    const auto a = realize_low_degree(3, Ratio(1, 1), N20);
    REQUIRE(a);
    REQUIRE(count_independent_sets(a->graph) == 3 * 1024);
    REQUIRE(a->graph.vertex_count() == 12);
    REQUIRE(average_degree(a->graph) == Ratio(1, 6));

    const auto b = realize_low_degree(1, Ratio(1, 2), N20);
    REQUIRE(b);
    REQUIRE(b->graph.edge_count() == 0);

    const auto c = realize_low_degree(5, Ratio(3, 2), Count{1} << 30);
    REQUIRE(c);
    REQUIRE(count_independent_sets(c->graph) == 5 * (Count{1} << 15));
    REQUIRE(average_degree(c->graph) < Ratio(3, 2));

    // Too few padding vertices for the degree target.
    REQUIRE_FALSE(realize_low_degree(1000, Ratio(1, 10), 1 << 4));
    REQUIRE_THROWS_AS(realize_low_degree(3, Ratio(2, 1), N20), DomainError);
    REQUIRE_THROWS_AS(realize_low_degree(3, Ratio(0, 1), N20), DomainError);
}

TEST_CASE("forbidden fixture values and planar realizability", "[planar]") {
    const auto values = read_fixture();
    REQUIRE(values.size() == 823);
    std::size_t planar = 0, composite = 0, neither = 0;
    for (auto v : values) {
        if (v > 20000) continue;
        if (const auto r = realize_planar(v)) {
            REQUIRE(count_independent_sets(r->graph) == v);
            ++planar;
        } else if (const auto r2 = realize_bounded_degree(v, 5)) {
            REQUIRE(count_independent_sets(r2->graph) == v);
            ++composite;
        } else {
            ++neither;
        }
    }
    INFO("planar=" << planar << " bounded-degree=" << composite << " neither=" << neither);
    REQUIRE(planar + composite + neither > 0);
}
