#include "metric_lines/graph.hpp"

#include <algorithm>
#include <string>

namespace mlines {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxVertices) + "]");
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
    adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (adj_[u].contains(v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

int Graph::size() const {
    int twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph permute(const Graph& g, std::span<const int> pi) {
    const int n = g.order();
    if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<char> seen(n, 0);
    for (int x : pi) {
        if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = 1;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(pi[u], pi[v]);
    return Graph(n, edges);
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw std::invalid_argument("not an edge");
    auto edges = g.edges();
    std::erase(edges, Edge{std::min(u, v), std::max(u, v)});
    return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> index(g.order(), -1);
    int k = 0;
    keep.for_each([&](int v) { index[v] = k++; });
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return Graph(k, edges);
}

}  // namespace mlines
