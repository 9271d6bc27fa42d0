#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metric_lines/vertex_set.hpp"

namespace mlines {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, immutable after construction.
class Graph {
public:
    // Edgeless graph on n vertices, 1 <= n <= kMaxVertices.
    explicit Graph(int n);
    // Rejects loops, duplicate edges and out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    int size() const;  // edge count

    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    VertexSet vertices() const { return VertexSet::range(n_); }

    // Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_;
    std::vector<VertexSet> adj_;
};

inline int degree(const Graph& g, int v) { return g.degree(v); }
inline const VertexSet& neighbors(const Graph& g, int v) { return g.neighbors(v); }

// Relabels vertex v as pi[v]. pi must be a bijection on 0..n-1.
Graph permute(const Graph& g, std::span<const int> pi);

// Graph obtained by deleting one edge; throws if uv is not an edge.
Graph remove_edge(const Graph& g, int u, int v);

// Subgraph induced by `keep`, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// ---------------------------------------------------------------------------
// graph6

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts one graph6 record; an optional ">>graph6<<" header and trailing
// whitespace are ignored.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Fallback text format: first non-comment line "n", then one "u v" per line.
Graph parse_edge_list(std::string_view text);

// ---------------------------------------------------------------------------
// Families

struct PartSizes {
    std::vector<int> parts;
};

// u ~ v iff they lie in different parts; parts are laid out consecutively.
Graph complete_multipartite(const PartSizes& sizes);

// H_{2k}: cliques on 0..k-1 and k..2k-1, plus the matching i -- i+k.
Graph matched_cliques(int k);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// Hub n plus the rim cycle 0..n-1.
Graph wheel_graph(int rim);

enum class NamedGraph {
    H5_house,
    H6,
    H8,
    H6_prime,
    H8_prime,
    H8_doubleprime,
    K122_prime,
    K22,
    K23,
    K122,
    K222,
    K2222,
    K113,
};

Graph named_graph(NamedGraph name);
std::span<const NamedGraph> all_named_graphs();
// Short identifier, e.g. "H8pp" or "K122".
std::string_view short_name(NamedGraph name);
// Display form, e.g. "H''_8" or "K_{1,2,2}".
std::string_view display_name(NamedGraph name);
// Accepts short names and enumerator spellings ("H8pp", "H8_doubleprime").
std::optional<NamedGraph> parse_named_graph(std::string_view text);

// ---------------------------------------------------------------------------
// Canonical labeling (n <= kMaxCanonicalOrder)

inline constexpr int kMaxCanonicalOrder = 10;

// Upper-triangle adjacency bits of the canonical relabeling, pair (i,j), i<j,
// at graph6 position j(j-1)/2+i, first pair most significant.
struct CanonicalForm {
    int n = 0;
    std::uint64_t code = 0;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Throws std::invalid_argument when g.order() > kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
// pi such that permute(g, pi) realizes canonical_form(g).
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_graph(const Graph& g);
Graph graph_from_canonical(const CanonicalForm& form);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace mlines
