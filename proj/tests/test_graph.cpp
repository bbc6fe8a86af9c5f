#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "indset/counting.hpp"
#include "indset/graph.hpp"
#include "indset/graph_io.hpp"
#include "indset/tree_enum.hpp"
#include "oracles.hpp"

using namespace indset;

TEST_CASE("graph invariants are enforced", "[graph]") {
    Graph g(3);
    g.add_edge(0, 1);
    REQUIRE_THROWS_AS(g.add_edge(1, 1), DomainError);
    REQUIRE_THROWS_AS(g.add_edge(1, 0), DomainError);
    REQUIRE_THROWS_AS(g.add_edge(0, 3), DomainError);
    REQUIRE(g.edge_count() == 1);
    REQUIRE(Graph{}.empty());

    REQUIRE_THROWS_AS(MarkedGraph(Graph(2), 2), DomainError);
    REQUIRE_THROWS_AS(MarkedGraph(Graph(2), 1, 1), DomainError);
}

TEST_CASE("count_independent_sets on small named graphs", "[counting]") {
    REQUIRE(count_independent_sets(Graph::complete(4)) == 5);
    REQUIRE(count_independent_sets(Graph::edgeless(3)) == 8);
    REQUIRE(count_independent_sets(Graph{}) == 1);
    REQUIRE(count_independent_sets(Graph::path(3)) == 5);
    for (std::size_t n = 1; n <= 12; ++n) REQUIRE(count_independent_sets(Graph::complete(n)) == n + 1);
}

TEST_CASE("paths count Fibonacci numbers", "[counting]") {
    Count f1 = 1, f2 = 2;  // F_2, F_3
    for (std::size_t n = 1; n <= 40; ++n) {
        const Count next = f1 + f2;  // F_{n+2}
        f1 = f2;
        f2 = next;
        const Count expected = f1;
        REQUIRE(count_independent_sets(Graph::path(n)) == expected);
        REQUIRE(count_independent_sets(Graph::path(n), CountMethod::branching) == expected);
    }
}

TEST_CASE("branching agrees with subset brute force on random graphs", "[counting]") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 150; ++it) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 20)(rng);
        const double p = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
        const Graph g = oracle::random_graph(n, p, rng);
        const auto expected = oracle::subsets(g);
        REQUIRE(count_independent_sets(g) == expected);
        REQUIRE(count_independent_sets(g, CountMethod::branching) == expected);
    }
}

TEST_CASE("count_marked splits the total", "[counting]") {
    REQUIRE(count_marked(MarkedGraph::single_vertex()).with_mark == 1);
    REQUIRE(count_marked(MarkedGraph::single_vertex()).without_mark == 1);
    const auto p2 = count_marked(MarkedGraph(Graph::path(2), 0));
    REQUIRE((p2.with_mark == 1 && p2.without_mark == 2));
    const auto k3 = count_marked(MarkedGraph(Graph::complete(3), 2));
    REQUIRE((k3.with_mark == 1 && k3.without_mark == 3));
    REQUIRE_THROWS_AS(count_marked(MarkedGraph(Graph{}, 0)), DomainError);

    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 18)(rng);
        const Graph g = it % 3 == 0 ? oracle::random_tree(n, rng) : oracle::random_graph(n, 0.25, rng);
        const Vertex v = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(n - 1))(rng);
        const auto s = count_marked(MarkedGraph(g, v));
        const auto [with, without] = oracle::subsets_split(g, v);
        REQUIRE(s.with_mark == with);
        REQUIRE(s.without_mark == without);
        REQUIRE(s.total() == count_independent_sets(g));
    }
}

TEST_CASE("count_deleting_marks certifies gadget values", "[counting]") {
    REQUIRE(count_deleting_marks(MarkedGraph(Graph::complete(4), 0, 1)) == 3);
    REQUIRE(count_deleting_marks(MarkedGraph(Graph::complete(3), 0, 1)) == 2);

    Graph k4e = Graph::complete(4);
    Graph k4_minus(4);
    for (const auto& e : k4e.edges())
        if (!(e.u == 2 && e.v == 3)) k4_minus.add_edge(e.u, e.v);
    REQUIRE(count_deleting_marks(MarkedGraph(k4_minus, 0, 1)) == 4);

    const Graph k5 = Graph::complete(5);
    Graph h(5);
    for (const auto& e : k5.edges())
        if (!(e.u == 2 && e.v == 4)) h.add_edge(e.u, e.v);
    REQUIRE(count_deleting_marks(MarkedGraph(h, 0, 1)) == 5);

    REQUIRE_THROWS_AS(count_deleting_marks(MarkedGraph(Graph::complete(3), 0)), DomainError);
}

TEST_CASE("average degree and Euler bound", "[graph]") {
    REQUIRE(average_degree(Graph{}) == Ratio(0, 1));
    REQUIRE(average_degree(Graph::complete(3)) == Ratio(2, 1));
    REQUIRE(average_degree(Graph::path(4)) == Ratio(3, 2));
    REQUIRE(average_degree(Graph::path(4)).str() == "3/2");

    REQUIRE(check_euler_bound(Graph::complete(4)));
    REQUIRE_FALSE(check_euler_bound(Graph::complete(5)));
    REQUIRE(check_euler_bound(Graph::complete(2)));
    REQUIRE(check_euler_bound(Graph{}));
}

TEST_CASE("disjoint union multiplies counts", "[graph]") {
    REQUIRE(count_independent_sets(disjoint_union(Graph(1), Graph(1))) == 4);
    REQUIRE(count_independent_sets(disjoint_union(Graph::complete(3), Graph::complete(4))) == 20);
    REQUIRE(disjoint_union(Graph::path(5), Graph{}) == Graph::path(5));

    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        const Graph g1 = oracle::random_graph(std::uniform_int_distribution<std::size_t>(0, 9)(rng), 0.3, rng);
        const Graph g2 = oracle::random_graph(std::uniform_int_distribution<std::size_t>(0, 9)(rng), 0.3, rng);
        const Graph u = disjoint_union(g1, g2);
        REQUIRE(u.vertex_count() == g1.vertex_count() + g2.vertex_count());
        REQUIRE(count_independent_sets(u) == count_independent_sets(g1) * count_independent_sets(g2));
        REQUIRE(average_degree(u) <= std::max(average_degree(g1), average_degree(g2)));
    }
}

TEST_CASE("components, forests and trees", "[graph]") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    REQUIRE(connected_components(g).size() == 3);
    REQUIRE(is_forest(g));
    REQUIRE_FALSE(is_tree(g));
    REQUIRE(is_tree(Graph::path(4)));
    REQUIRE_FALSE(is_tree(Graph::complete(3)));
    REQUIRE_FALSE(is_tree(Graph{}));
    REQUIRE(is_connected(Graph{}));
}

TEST_CASE("tree_dp rejects graphs with cycles", "[counting]") {
    REQUIRE_THROWS_AS(count_independent_sets(Graph::complete(3), CountMethod::tree_dp), DomainError);
    REQUIRE(count_independent_sets(Graph::star(4), CountMethod::tree_dp) == 17);
}

TEST_CASE("counts that exceed 128 bits raise an overflow error", "[counting]") {
    REQUIRE_THROWS_AS(count_independent_sets(Graph::edgeless(128)), OverflowError);
    REQUIRE(count_independent_sets(Graph::edgeless(127)) == Count{1} << 127);
}

TEST_CASE("enumerate_trees produces each free tree once", "[enumerate]") {
    const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto trees = enumerate_trees(n);
        REQUIRE(trees.size() == expected[n - 1]);
        std::set<std::string> forms;
        for (const auto& t : trees) {
            REQUIRE(t.vertex_count() == n);
            REQUIRE(is_tree(t));
            forms.insert(tree_canonical_form(t));
        }
        REQUIRE(forms.size() == trees.size());
    }
    REQUIRE_THROWS_AS(enumerate_trees(0), DomainError);
    REQUIRE_THROWS_AS(enumerate_trees(13), DomainError);
}

TEST_CASE("enumerated trees are pairwise non-isomorphic and cover the labeled trees", "[enumerate]") {
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto trees = enumerate_trees(n);
        for (std::size_t i = 0; i < trees.size(); ++i)
            for (std::size_t j = i + 1; j < trees.size(); ++j) REQUIRE_FALSE(oracle::isomorphic(trees[i], trees[j]));
        std::set<std::uint64_t> values;
        for (const auto& t : trees) values.insert(oracle::subsets(t));
        REQUIRE(values == oracle::labeled_tree_values(n));
    }
}

TEST_CASE("tree DP, branching and subsets agree on all trees up to 12 vertices", "[counting][enumerate]") {
    for (std::size_t n = 1; n <= 12; ++n)
        for (const auto& t : enumerate_trees(n)) {
            const auto expected = oracle::subsets(t);
            REQUIRE(count_independent_sets(t, CountMethod::tree_dp) == expected);
            REQUIRE(count_independent_sets(t, CountMethod::branching) == expected);
        }
}

TEST_CASE("edge-list round trip and parse errors", "[io]") {
    const Graph g = Graph::complete(4);
    std::ostringstream out;
    write_edge_list(out, g, {"target=5"});
    REQUIRE(out.str().rfind("# target=5\n4 6\n", 0) == 0);
    std::istringstream in(out.str());
    REQUIRE(read_edge_list(in) == g);

    auto parse = [](const std::string& text) {
        std::istringstream s(text);
        return read_edge_list(s);
    };
    REQUIRE(parse("0 0\n").empty());
    REQUIRE_THROWS_AS(parse(""), FormatError);
    REQUIRE_THROWS_AS(parse("3 1\n2 1\n"), FormatError);
    REQUIRE_THROWS_AS(parse("3 2\n0 1\n"), FormatError);
    REQUIRE_THROWS_AS(parse("3 1\n0 x\n"), FormatError);
    REQUIRE_THROWS_AS(parse("3 1\n0 1\n1 2\n"), FormatError);
    REQUIRE_THROWS_AS(parse("3 2\n0 1\n0 1\n"), FormatError);
    try {
        (void)parse("# c\n3 1\n0 5\n");
        FAIL("expected a format error");
    } catch (const FormatError& e) {
        REQUIRE(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("dot output marks vertices", "[io]") {
    std::ostringstream out;
    write_dot(out, Graph::path(2), {1}, {"target=3"});
    REQUIRE(out.str() == "# target=3\ngraph G {\n  0;\n  1 [color=red];\n  0 -- 1;\n}\n");
}

TEST_CASE("identify_marks and extend_mark follow the pair operations", "[graph]") {
    const MarkedGraph p2(Graph::path(2), 0);
    const MarkedGraph center = identify_marks(p2, p2);
    REQUIRE(center.graph.vertex_count() == 3);
    const auto s = count_marked(center);
    REQUIRE((s.with_mark == 1 && s.without_mark == 4));
    const auto e = count_marked(extend_mark(p2));
    REQUIRE((e.with_mark == 2 && e.without_mark == 3));
}
