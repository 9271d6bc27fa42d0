#include <algorithm>
#include <bit>

#include "metric_lines/graph.hpp"
#include "small_canon.hpp"

namespace mlines {

namespace detail {

namespace {

constexpr int kCap = kMaxCanonicalOrder;

// Ordered partition of the vertex set; cells are vertex masks.
struct Partition {
    std::array<std::uint16_t, kCap> cells{};
    int k = 0;
};

// Equitable refinement: each cell is split by the vector of neighbor counts
// into every cell, sub-cells ordered by that vector. Label-invariant.
void refine(const SmallAdj& adj, Partition& p) {
    for (;;) {
        Partition next;
        for (int c = 0; c < p.k; ++c) {
            const std::uint16_t cell = p.cells[c];
            if (std::popcount(cell) == 1) {
                next.cells[next.k++] = cell;
                continue;
            }
            std::array<std::pair<std::uint64_t, int>, kCap> keyed{};
            int m = 0;
            for (std::uint16_t bits = cell; bits; bits &= bits - 1) {
                const int v = std::countr_zero(bits);
                std::uint64_t key = 0;
                for (int i = 0; i < p.k; ++i)
                    key = (key << 4) | static_cast<std::uint64_t>(std::popcount(static_cast<std::uint16_t>(adj[v] & p.cells[i])));
                keyed[m++] = {key, v};
            }
            std::sort(keyed.begin(), keyed.begin() + m);
            std::uint16_t run = 0;
            for (int i = 0; i < m; ++i) {
                if (i > 0 && keyed[i].first != keyed[i - 1].first) {
                    next.cells[next.k++] = run;
                    run = 0;
                }
                run |= static_cast<std::uint16_t>(1U << keyed[i].second);
            }
            next.cells[next.k++] = run;
        }
        const bool stable = next.k == p.k;
        p = next;
        if (stable) return;
    }
}

struct Search {
    int n;
    const SmallAdj& adj;
    int pairs;
    std::uint64_t best = 0;
    bool have_best = false;
    std::array<int, kCap> best_labeling{};

    std::uint64_t leaf_code(const std::array<int, kCap>& lab) const {
        std::uint64_t code = 0;
        for (int u = 0; u < n; ++u) {
            for (std::uint16_t bits = adj[u]; bits; bits &= bits - 1) {
                const int v = std::countr_zero(bits);
                if (v < u) continue;
                const int a = std::min(lab[u], lab[v]);
                const int b = std::max(lab[u], lab[v]);
                code |= std::uint64_t{1} << (pairs - 1 - pair_index(a, b));
            }
        }
        return code;
    }

    bool twins(int u, int v) const {
        const auto mu = static_cast<std::uint16_t>(adj[u] & ~(1U << v));
        const auto mv = static_cast<std::uint16_t>(adj[v] & ~(1U << u));
        return mu == mv;
    }

    void run(Partition p) {
        refine(adj, p);
        int target = -1;
        for (int c = 0; c < p.k; ++c)
            if (std::popcount(p.cells[c]) > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            std::array<int, kCap> lab{};
            for (int c = 0; c < p.k; ++c) lab[std::countr_zero(p.cells[c])] = c;
            const auto code = leaf_code(lab);
            if (!have_best || code > best) {
                best = code;
                best_labeling = lab;
                have_best = true;
            }
            return;
        }
        const std::uint16_t cell = p.cells[target];
        std::uint16_t tried = 0;
        for (std::uint16_t bits = cell; bits; bits &= bits - 1) {
            const int v = std::countr_zero(bits);
            // Transposing twins is an automorphism fixing p: identical subtrees.
            bool redundant = false;
            for (std::uint16_t t = tried; t && !redundant; t &= t - 1)
                redundant = twins(std::countr_zero(t), v);
            tried |= static_cast<std::uint16_t>(1U << v);
            if (redundant) continue;

            Partition child;
            for (int c = 0; c < target; ++c) child.cells[child.k++] = p.cells[c];
            child.cells[child.k++] = static_cast<std::uint16_t>(1U << v);
            child.cells[child.k++] = static_cast<std::uint16_t>(cell & ~(1U << v));
            for (int c = target + 1; c < p.k; ++c) child.cells[child.k++] = p.cells[c];
            run(child);
        }
    }
};

}  // namespace

std::uint64_t canonical_code(int n, const SmallAdj& adj, std::array<int, kMaxCanonicalOrder>* labeling) {
    Search s{n, adj, n * (n - 1) / 2};
    Partition start;
    start.cells[0] = static_cast<std::uint16_t>((1U << n) - 1);
    start.k = 1;
    s.run(start);
    if (labeling) *labeling = s.best_labeling;
    return s.best;
}

}  // namespace detail

namespace {

void require_small(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder)
        throw std::invalid_argument("canonical form needs at most " + std::to_string(kMaxCanonicalOrder) +
                                    " vertices, got " + std::to_string(g.order()));
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    require_small(g);
    return {g.order(), detail::canonical_code(g.order(), detail::small_adjacency(g))};
}

std::vector<int> canonical_labeling(const Graph& g) {
    require_small(g);
    std::array<int, kMaxCanonicalOrder> lab{};
    detail::canonical_code(g.order(), detail::small_adjacency(g), &lab);
    return {lab.begin(), lab.begin() + g.order()};
}

Graph canonical_graph(const Graph& g) { return permute(g, canonical_labeling(g)); }

Graph graph_from_canonical(const CanonicalForm& form) {
    const int n = form.n;
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((form.code >> (pairs - 1 - detail::pair_index(i, j))) & 1U) edges.emplace_back(i, j);
    return Graph(n, edges);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace mlines
