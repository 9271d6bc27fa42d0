#pragma once

#include <set>
#include <vector>

#include "metric_lines/graph.hpp"
#include "metric_lines/metric.hpp"

namespace mlines {

// The line through a and b: a, b and every c such that some shortest path
// contains all three.
struct Line {
    VertexSet members;
    int a = 0;
    int b = 0;
};

// Throws std::invalid_argument if a == b, DisconnectedGraph if d has infinite entries.
Line line(const DistanceMatrix& d, int a, int b);

// Every line of a connected graph, indexed by generating pair.
class LineTable {
public:
    explicit LineTable(const Graph& g);
    explicit LineTable(DistanceMatrix d);

    int order() const { return d_.order(); }
    const DistanceMatrix& distances() const { return d_; }
    // Requires a != b.
    const VertexSet& operator()(int a, int b) const { return lines_[static_cast<std::size_t>(a) * order() + b]; }

private:
    DistanceMatrix d_;
    std::vector<VertexSet> lines_;
};

using LineSet = std::set<VertexSet>;

struct LineSystem {
    int n = 0;
    // Distinct member sets, sorted.
    std::vector<VertexSet> lines;
    // generators[i] lists every pair (a, b), a < b, spanning lines[i].
    std::vector<std::vector<Edge>> generators;

    int count() const { return static_cast<int>(lines.size()); }
    bool has_universal() const;
};

// Throws std::invalid_argument for n < 2 and DisconnectedGraph when disconnected.
LineSystem line_system(const Graph& g);
LineSystem line_system(const LineTable& table);

bool is_universal(const Graph& g, const Line& l);
bool has_universal_line(const Graph& g);

// A universal line exists or there are at least n lines.
bool chen_chvatal_holds(const Graph& g);

// ---------------------------------------------------------------------------
// Pencils

// One R^z equivalence class together with the line z-u shared by its members.
struct PencilClass {
    VertexSet members;
    VertexSet line;
};

// The distinct lines through z and the partition of V \ {z} they induce.
struct Pencil {
    int z = 0;
    std::vector<PencilClass> classes;  // ordered by least member
    std::vector<int> class_index;      // per vertex; -1 at z

    int line_count() const { return static_cast<int>(classes.size()); }
    const PencilClass& class_of(int u) const { return classes[class_index[u]]; }
    LineSet lines() const;
};

Pencil pencil(const LineTable& table, int z);
Pencil pencil(const Graph& g, int z);

// Split of the pencil at x for a diametral pair (x, y) of a graph of diameter >= 3.
struct Diam3Partition {
    int x = 0;
    int y = 0;
    int diameter = 0;
    Pencil pencil_x;
    std::vector<PencilClass> l0;  // singleton classes
    std::vector<PencilClass> c1;  // classes of size >= 2 inside N(x)
    std::vector<PencilClass> c2;  // classes of size >= 2 not inside N(x)
    VertexSet v1;                 // union of the c1 classes
    VertexSet v2;                 // c2 members u with 2 d(x,u) <= diameter
    LineSet cy12;                 // lines y-u for u in v1 | v2
};

// Throws std::invalid_argument if the diameter is below 3 or d(x,y) is not the diameter.
Diam3Partition diam3_partition(const LineTable& table, int x, int y);
Diam3Partition diam3_partition(const Graph& g, int x, int y);

// Neighborhood split at x in a graph of diameter 2, with the line families
// built from it.
struct Diam2Partition {
    int x = 0;
    Pencil pencil_x;
    VertexSet neighborhood;         // N(x)
    VertexSet second_neighborhood;  // vertices at distance 2
    VertexSet a1;                   // u in N(x) with |[u]| = 1
    VertexSet a2;                   // |[u]| = 2
    VertexSet a3;                   // |[u]| >= 3
    VertexSet a2_prime;             // u in a2 with a non-neighbor in N(x) \ [u]
    VertexSet a2_double_prime;      // a2 \ a2_prime
    int a3_lines = 0;               // distinct lines x-u with u in a3
    LineSet l1;                     // lines x-u, u in N(x)
    LineSet l2;                     // lines x-u, u at distance 2
    LineSet family_a3;              // u'-u'' within one a3 class
    LineSet family_a2_prime;        // s-t, s in [u], t in [v], u in a2', v in N(x) \ [u], uv not an edge
    LineSet family_a2_double_prime; // u-v, u, v in a2'' from different classes
    LineSet family_a2_triple_prime; // u-v, u in N(x) \ a2'', v in a2''
};

// Throws std::invalid_argument unless the diameter is exactly 2.
Diam2Partition diam2_partition(const LineTable& table, int x);
Diam2Partition diam2_partition(const Graph& g, int x);

}  // namespace mlines
