#pragma once

#include <stdexcept>
#include <vector>

#include "metric_lines/graph.hpp"

namespace mlines {

class DisconnectedGraph : public std::runtime_error {
public:
    DisconnectedGraph() : std::runtime_error("graph is disconnected") {}
};

// All-pairs hop distances. Unreachable pairs hold infinity() == n, which is
// larger than any finite distance.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, n) {}

    int order() const { return n_; }
    int infinity() const { return n_; }
    int operator()(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
    int& at(int u, int v) { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

    bool adjacent(int u, int v) const { return (*this)(u, v) == 1; }
    bool finite(int u, int v) const { return (*this)(u, v) < n_; }
    bool connected() const;

private:
    int n_;
    std::vector<int> dist_;
};

// BFS from every vertex.
DistanceMatrix apsp(const Graph& g);

// Throws DisconnectedGraph when some distance is infinite.
int diameter(const DistanceMatrix& d);

struct Triple {
    int a, b, c;
};

// d(a,c) = d(a,b) + d(b,c): b lies on a shortest a-c path.
// Throws std::invalid_argument unless a, b, c are pairwise distinct.
bool between(const DistanceMatrix& d, Triple t);

}  // namespace mlines
