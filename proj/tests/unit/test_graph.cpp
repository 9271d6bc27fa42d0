#include <algorithm>

#include "doctest.h"
#include "metric_lines/graph.hpp"
#include "metric_lines/metric.hpp"

using namespace mlines;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
    std::ranges::sort(out, std::greater<>());
    return out;
}

}  // namespace

TEST_CASE("graph rejects malformed edge lists") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    const Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.size() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("vertex sets") {
    VertexSet s{3, 70, 5};
    CHECK(s.size() == 3);
    CHECK(s.min() == 3);
    CHECK(s.to_string() == "{3,5,70}");
    CHECK(VertexSet{}.min() == -1);
    CHECK((s - VertexSet{5}).members() == std::vector<int>{3, 70});
    CHECK(VertexSet{1, 2} < VertexSet{1, 3});
    CHECK(VertexSet{1} < VertexSet{1, 2});
    CHECK(VertexSet{0, 9} < VertexSet{1});
    CHECK(VertexSet::range(65).size() == 65);
}

TEST_CASE("graph6 decoding") {
    SUBCASE("the K_{1,4} record") {
        const auto g = parse_graph6("D?{");
        CHECK(g.order() == 5);
        CHECK(g.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    }
    SUBCASE("edge list 0-3 1-3 2-3 1-4 2-4 3-4") {
        const Graph expected(5, {{0, 3}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
        CHECK(parse_graph6("DF[") == expected);
        CHECK(to_graph6(expected) == "DF[");
    }
    SUBCASE("trivial records") {
        CHECK(parse_graph6("@") == Graph(1));
        CHECK(to_graph6(Graph(1)) == "@");
        CHECK(to_graph6(Graph(2, {{0, 1}})) == "A_");
        CHECK(parse_graph6(">>graph6<<A_\n") == Graph(2, {{0, 1}}));
    }
    SUBCASE("malformed input") {
        CHECK_THROWS_AS(parse_graph6(""), ParseError);
        CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
        CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);
        CHECK_THROWS_AS(parse_graph6("A`"), ParseError);  // padding bit set
        CHECK_THROWS_AS(parse_graph6("A\x01"), ParseError);
    }
}

TEST_CASE("graph6 round trip") {
    for (auto name : all_named_graphs()) {
        const auto g = named_graph(name);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
    const auto big = cycle_graph(70);
    const auto text = to_graph6(big);
    CHECK(text.front() == '~');
    CHECK(parse_graph6(text) == big);
}

TEST_CASE("edge list format") {
    const auto g = parse_edge_list("# triangle\n3;\n0 1\n1 2  # path\n0 2\n");
    CHECK(g == complete_graph(3));
    CHECK_THROWS_AS(parse_edge_list("3\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x\n"), ParseError);
}

TEST_CASE("complete multipartite graphs") {
    CHECK(degree_sequence(complete_multipartite({{1, 2, 2}})) == std::vector<int>{4, 3, 3, 3, 3});
    const auto oct = complete_multipartite({{2, 2, 2}});
    CHECK(oct.order() == 6);
    CHECK(oct.size() == 12);
    CHECK(degree_sequence(oct) == std::vector<int>(6, 4));
    CHECK(complete_multipartite({{5}}).size() == 0);

    // Edge count is the sum of products over part pairs.
    for (std::vector<int> parts : {std::vector<int>{1, 1, 3}, {2, 3}, {3, 1, 4, 2}, {2, 2, 2, 2}}) {
        int expected = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) expected += parts[i] * parts[j];
        CHECK(complete_multipartite({parts}).size() == expected);
    }
}

TEST_CASE("matched cliques") {
    const auto h6 = matched_cliques(3);
    CHECK(h6.size() == 9);
    CHECK(diameter(apsp(h6)) == 2);
    CHECK(matched_cliques(4).size() == 16);
    CHECK(is_isomorphic(matched_cliques(2), cycle_graph(4)));
    for (int k = 2; k <= 8; ++k) {
        const auto g = matched_cliques(k);
        CHECK(g.order() == 2 * k);
        CHECK(degree_sequence(g) == std::vector<int>(2 * k, k));
    }
    CHECK_THROWS_AS(matched_cliques(1), std::invalid_argument);
}

TEST_CASE("named graphs") {
    const auto h6p = named_graph(NamedGraph::H6_prime);
    CHECK(h6p.order() == 6);
    CHECK(h6p.size() == 8);
    CHECK(diameter(apsp(h6p)) == 3);

    const auto h8pp = named_graph(NamedGraph::H8_doubleprime);
    CHECK(h8pp.order() == 8);
    CHECK(diameter(apsp(h8pp)) == 3);

    const auto house = named_graph(NamedGraph::H5_house);
    CHECK(house.order() == 5);
    CHECK(house.size() == 6);
    CHECK(degree_sequence(house) == std::vector<int>{3, 3, 2, 2, 2});

    for (auto name : all_named_graphs()) {
        CHECK(parse_named_graph(short_name(name)) == name);
    }
    CHECK(display_name(NamedGraph::K122) == "K_{1,2,2}");
    CHECK_FALSE(parse_named_graph("nope").has_value());
}

TEST_CASE("graph operations") {
    const auto c5 = cycle_graph(5);
    CHECK(remove_edge(c5, 4, 0) == path_graph(5));
    CHECK_THROWS_AS(remove_edge(c5, 0, 2), std::invalid_argument);
    CHECK(induced_subgraph(c5, VertexSet{0, 1, 2}) == path_graph(3));
    const auto w = wheel_graph(5);
    CHECK(w.order() == 6);
    CHECK(w.degree(5) == 5);
}
