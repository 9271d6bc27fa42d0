#include "metric_lines/classes.hpp"

#include <algorithm>

namespace mlines {

namespace {

// Vertices of `within` reachable from `start` using only vertices of `within`.
VertexSet reach(const Graph& g, int start, const VertexSet& within) {
    VertexSet seen{start};
    VertexSet frontier{start};
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int u) { next |= g.neighbors(u); });
        next &= within;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

struct LowLink {
    const Graph& g;
    std::vector<int> disc;
    std::vector<int> low;
    std::vector<Edge> bridge_list;
    bool cut_vertex = false;
    int clock = 0;

    explicit LowLink(const Graph& graph) : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

    void dfs(int u, int parent) {
        disc[u] = low[u] = clock++;
        int children = 0;
        g.neighbors(u).for_each([&](int v) {
            if (disc[v] < 0) {
                ++children;
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) bridge_list.emplace_back(std::min(u, v), std::max(u, v));
                if (parent >= 0 && low[v] >= disc[u]) cut_vertex = true;
            } else if (v != parent) {
                low[u] = std::min(low[u], disc[v]);
            }
        });
        if (parent < 0 && children > 1) cut_vertex = true;
    }

    void run() {
        for (int s = 0; s < g.order(); ++s)
            if (disc[s] < 0) dfs(s, -1);
        std::ranges::sort(bridge_list);
    }
};

}  // namespace

bool is_connected(const Graph& g) { return reach(g, 0, g.vertices()).size() == g.order(); }

bool is_biconnected(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    LowLink ll(g);
    ll.run();
    return !ll.cut_vertex;
}

std::vector<Edge> bridges(const Graph& g) {
    LowLink ll(g);
    ll.run();
    return ll.bridge_list;
}

bool is_locally_connected(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        const auto& nv = g.neighbors(v);
        if (nv.empty()) return false;
        if (reach(g, nv.min(), nv) != nv) return false;
    }
    return true;
}

bool is_lc_member(const Graph& g) { return is_connected(g) && is_locally_connected(g); }

std::vector<int> mcs_elimination_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(n, 0);
    VertexSet unnumbered = g.vertices();
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        unnumbered.for_each([&](int v) {
            if (pick < 0 || weight[v] > weight[pick]) pick = v;
        });
        visit.push_back(pick);
        unnumbered.erase(pick);
        (g.neighbors(pick) & unnumbered).for_each([&](int v) { ++weight[v]; });
    }
    std::ranges::reverse(visit);
    return visit;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    if (static_cast<int>(order.size()) != n) return false;
    VertexSet remaining = g.vertices();
    for (int v : order) {
        remaining.erase(v);
        const auto later = g.neighbors(v) & remaining;
        bool clique = true;
        later.for_each([&](int u) {
            auto rest = later;
            rest.erase(u);
            clique = clique && rest.is_subset_of(g.neighbors(u));
        });
        if (!clique) return false;
    }
    return true;
}

bool is_chordal(const Graph& g) { return is_perfect_elimination_order(g, mcs_elimination_order(g)); }

bool is_module(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("is_module: empty vertex set");
    const auto outside = g.vertices() - s;
    bool ok = true;
    outside.for_each([&](int v) {
        const auto seen = g.neighbors(v) & s;
        ok = ok && (seen.empty() || seen == s);
    });
    return ok;
}

}  // namespace mlines
