#include "metric_lines/metric.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace mlines {

bool DistanceMatrix::connected() const {
    return std::ranges::none_of(dist_, [this](int x) { return x >= n_; });
}

DistanceMatrix apsp(const Graph& g) {
    const int n = g.order();
    DistanceMatrix d(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        d.at(s, s) = 0;
        int head = 0;
        int tail = 0;
        queue[tail++] = s;
        VertexSet seen{s};
        while (head < tail) {
            const int u = queue[head++];
            const int du = d(s, u);
            (g.neighbors(u) - seen).for_each([&](int v) {
                seen.insert(v);
                d.at(s, v) = du + 1;
                queue[tail++] = v;
            });
        }
    }
    return d;
}

int diameter(const DistanceMatrix& d) {
    int best = 0;
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v) {
            if (!d.finite(u, v)) throw DisconnectedGraph();
            best = std::max(best, d(u, v));
        }
    return best;
}

bool between(const DistanceMatrix& d, Triple t) {
    if (t.a == t.b || t.b == t.c || t.a == t.c) throw std::invalid_argument("between: vertices must be distinct");
    assert(d.finite(t.a, t.b) && d.finite(t.b, t.c) && d.finite(t.a, t.c));
    return d(t.a, t.c) == d(t.a, t.b) + d(t.b, t.c);
}

}  // namespace mlines
