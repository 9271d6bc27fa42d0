#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "metric_lines/classes.hpp"
#include "metric_lines/graph.hpp"
#include "metric_lines/verify.hpp"

using namespace mlines;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::ranges::shuffle(pi, rng);
    return pi;
}

}  // namespace

TEST_CASE("canonical form of relabeled cycles") {
    const Graph a(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const Graph b(4, {{0, 2}, {2, 1}, {1, 3}, {0, 3}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(named_graph(NamedGraph::K122)) != canonical_form(named_graph(NamedGraph::K122_prime)));
}

TEST_CASE("isomorphism examples") {
    CHECK(is_isomorphic(matched_cliques(2), complete_multipartite({{2, 2}})));
    CHECK_FALSE(is_isomorphic(named_graph(NamedGraph::K222), matched_cliques(3)));
    CHECK_FALSE(is_isomorphic(cycle_graph(6), matched_cliques(3)));
    CHECK(is_isomorphic(named_graph(NamedGraph::K22), cycle_graph(4)));
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 8;
        const auto g = random_graph(rng, n, 0.2 + 0.6 * (trial % 7) / 6.0);
        const auto pi = random_permutation(rng, n);
        const auto h = permute(g, pi);
        REQUIRE(canonical_form(g) == canonical_form(h));

        std::vector<int> inverse(n);
        for (int v = 0; v < n; ++v) inverse[pi[v]] = v;
        REQUIRE(permute(h, inverse) == g);

        // The labeling realizes the form.
        REQUIRE(permute(g, canonical_labeling(g)) == canonical_graph(g));
        REQUIRE(graph_from_canonical(canonical_form(g)) == canonical_graph(g));
    }
}

TEST_CASE("canonical form separates regular graphs of equal degree") {
    // Both 3-regular on 6 vertices.
    CHECK(canonical_form(matched_cliques(3)) != canonical_form(complete_multipartite({{3, 3}})));
    // Both 2-regular on 8 vertices.
    const Graph two_squares(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
    CHECK(canonical_form(two_squares) != canonical_form(cycle_graph(8)));
    CHECK_THROWS_AS(canonical_form(cycle_graph(11)), std::invalid_argument);
}

TEST_CASE("connected graph census") {
    const std::array<int, 7> expected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        const auto s = enumerate_connected(n);
        CHECK(s.exhaustive);
        CHECK(static_cast<int>(s.graphs.size()) == expected[n - 1]);
    }
    CHECK(to_graph6(enumerate_connected(1).graphs.front()) == "@");
    CHECK_THROWS_AS(enumerate_connected(8), std::out_of_range);
    CHECK_THROWS_AS(enumerate_connected(0), std::out_of_range);
}

TEST_CASE("enumerator soundness") {
    for (int n = 1; n <= 6; ++n) {
        const auto a = enumerate_connected(n, 1);
        const auto b = enumerate_connected(n, 4);
        REQUIRE(a.graphs.size() == b.graphs.size());
        std::set<CanonicalForm> forms;
        for (std::size_t i = 0; i < a.graphs.size(); ++i) {
            CHECK(a.graphs[i] == b.graphs[i]);
            CHECK(is_connected(a.graphs[i]));
            forms.insert(canonical_form(a.graphs[i]));
        }
        CHECK(forms.size() == a.graphs.size());
    }
}

TEST_CASE("locally connected counts agree with the oracle") {
    // Frozen from tests/oracle/lines_oracle.py.
    const std::array<int, 6> lc{0, 1, 1, 2, 6, 27};
    for (int n = 1; n <= 6; ++n) {
        int count = 0;
        for (const auto& g : enumerate_connected(n).graphs) count += is_locally_connected(g) ? 1 : 0;
        CHECK(count == lc[n - 1]);
    }
}
