#pragma once

// Canonical labeling of graphs with at most kMaxCanonicalOrder vertices held as
// 16-bit adjacency masks. Shared by canonical_form() and the exhaustive
// enumerator, which never materializes a Graph for non-representatives.

#include <array>
#include <cstdint>

#include "metric_lines/graph.hpp"

namespace mlines::detail {

using SmallAdj = std::array<std::uint16_t, kMaxCanonicalOrder>;

inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

// Maximum upper-triangle code over the individualization-refinement leaves.
// When `labeling` is non-null it receives the vertex -> position map of a
// leaf attaining the maximum.
std::uint64_t canonical_code(int n, const SmallAdj& adj, std::array<int, kMaxCanonicalOrder>* labeling = nullptr);

inline SmallAdj small_adjacency(const Graph& g) {
    SmallAdj adj{};
    for (int v = 0; v < g.order(); ++v)
        g.neighbors(v).for_each([&](int u) { adj[v] |= static_cast<std::uint16_t>(1U << u); });
    return adj;
}

}  // namespace mlines::detail
