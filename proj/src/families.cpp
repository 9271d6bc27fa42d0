#include <algorithm>
#include <array>
#include <numeric>

#include "metric_lines/graph.hpp"

namespace mlines {

Graph complete_multipartite(const PartSizes& sizes) {
    if (sizes.parts.empty()) throw std::invalid_argument("complete_multipartite: empty part list");
    if (std::ranges::any_of(sizes.parts, [](int s) { return s < 1; }))
        throw std::invalid_argument("complete_multipartite: part sizes must be positive");
    const int n = std::accumulate(sizes.parts.begin(), sizes.parts.end(), 0);
    std::vector<int> part_of;
    for (int p = 0; p < static_cast<int>(sizes.parts.size()); ++p)
        part_of.insert(part_of.end(), sizes.parts[p], p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph matched_cliques(int k) {
    if (k < 2) throw std::invalid_argument("matched_cliques: k must be at least 2");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            edges.emplace_back(i, j);
            edges.emplace_back(i + k, j + k);
        }
        edges.emplace_back(i, i + k);
    }
    return Graph(2 * k, edges);
}

Graph complete_graph(int n) {
    return complete_multipartite(PartSizes{std::vector<int>(n, 1)});
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph wheel_graph(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel_graph: rim must have at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < rim; ++i) {
        edges.emplace_back(i, (i + 1) % rim);
        edges.emplace_back(i, rim);
    }
    return Graph(rim + 1, edges);
}

namespace {

struct NamedEntry {
    NamedGraph id;
    std::string_view short_name;
    std::string_view enum_name;
    std::string_view display;
};

constexpr std::array<NamedEntry, 13> kNamed{{
    {NamedGraph::H5_house, "H5", "H5_house", "H_5 (house)"},
    {NamedGraph::H6, "H6", "H6", "H_6"},
    {NamedGraph::H8, "H8", "H8", "H_8"},
    {NamedGraph::H6_prime, "H6p", "H6_prime", "H'_6"},
    {NamedGraph::H8_prime, "H8p", "H8_prime", "H'_8"},
    {NamedGraph::H8_doubleprime, "H8pp", "H8_doubleprime", "H''_8"},
    {NamedGraph::K122_prime, "K122p", "K122_prime", "K'_{1,2,2}"},
    {NamedGraph::K22, "K22", "K22", "K_{2,2}"},
    {NamedGraph::K23, "K23", "K23", "K_{2,3}"},
    {NamedGraph::K122, "K122", "K122", "K_{1,2,2}"},
    {NamedGraph::K222, "K222", "K222", "K_{2,2,2}"},
    {NamedGraph::K2222, "K2222", "K2222", "K_{2,2,2,2}"},
    {NamedGraph::K113, "K113", "K113", "K_{1,1,3}"},
}};

const NamedEntry& entry(NamedGraph name) {
    for (const auto& e : kNamed)
        if (e.id == name) return e;
    throw std::invalid_argument("unknown named graph");
}

constexpr std::array<NamedGraph, 13> kAllNamed = [] {
    std::array<NamedGraph, 13> out{};
    for (std::size_t i = 0; i < kNamed.size(); ++i) out[i] = kNamed[i].id;
    return out;
}();

}  // namespace

std::span<const NamedGraph> all_named_graphs() { return kAllNamed; }

std::string_view short_name(NamedGraph name) { return entry(name).short_name; }
std::string_view display_name(NamedGraph name) { return entry(name).display; }

std::optional<NamedGraph> parse_named_graph(std::string_view text) {
    for (const auto& e : kNamed)
        if (text == e.short_name || text == e.enum_name) return e.id;
    return std::nullopt;
}

Graph named_graph(NamedGraph name) {
    switch (name) {
    case NamedGraph::H5_house:
        return induced_subgraph(matched_cliques(3), VertexSet{0, 1, 2, 3, 4});
    case NamedGraph::H6:
        return matched_cliques(3);
    case NamedGraph::H8:
        return matched_cliques(4);
    case NamedGraph::H6_prime:
        return remove_edge(matched_cliques(3), 0, 3);
    case NamedGraph::H8_prime:
        return remove_edge(matched_cliques(4), 0, 4);
    case NamedGraph::H8_doubleprime: {
        // K_4 on 0..3, vertex i matched to 4+i, plus the disjoint edges 4-5 and 6-7.
        std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                {0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 5}, {6, 7}};
        return Graph(8, edges);
    }
    case NamedGraph::K122_prime:
        // Vertex 0 is the degree-four vertex of K_{1,2,2}.
        return remove_edge(complete_multipartite({{1, 2, 2}}), 0, 1);
    case NamedGraph::K22:
        return complete_multipartite({{2, 2}});
    case NamedGraph::K23:
        return complete_multipartite({{2, 3}});
    case NamedGraph::K122:
        return complete_multipartite({{1, 2, 2}});
    case NamedGraph::K222:
        return complete_multipartite({{2, 2, 2}});
    case NamedGraph::K2222:
        return complete_multipartite({{2, 2, 2, 2}});
    case NamedGraph::K113:
        return complete_multipartite({{1, 1, 3}});
    }
    throw std::invalid_argument("unknown named graph");
}

}  // namespace mlines
