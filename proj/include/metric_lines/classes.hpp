#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "metric_lines/graph.hpp"

namespace mlines {

bool is_connected(const Graph& g);
// Connected, at least 3 vertices, no cut vertex.
bool is_biconnected(const Graph& g);
std::vector<Edge> bridges(const Graph& g);

// Every open neighborhood induces a connected subgraph. A vertex with an
// empty neighborhood fails the test.
bool is_locally_connected(const Graph& g);
bool is_lc_member(const Graph& g);

// Maximum cardinality search followed by an explicit perfect elimination check.
bool is_chordal(const Graph& g);
// Order produced by maximum cardinality search, reversed: a perfect elimination
// ordering whenever the graph is chordal.
std::vector<int> mcs_elimination_order(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);

// Every vertex outside s sees all of s or none of it. Throws on empty s.
bool is_module(const Graph& g, const VertexSet& s);

// ---------------------------------------------------------------------------
// Plane embeddings

// Cyclic order of the neighbors around each vertex.
struct RotationSystem {
    int n = 0;
    std::vector<std::vector<int>> rot;
};

// Text format: one "v: n1 n2 ..." line per vertex. Throws ParseError.
RotationSystem parse_rotation_system(std::string_view text);
std::string format_rotation_system(const RotationSystem& r);

// Neighbors sorted counterclockwise by angle from straight-line coordinates.
RotationSystem rotation_from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& coords);

// Throws std::invalid_argument unless r.rot[v] is a permutation of N(v) for every v.
void validate_rotation(const Graph& g, const RotationSystem& r);

struct FaceSet {
    // Vertex sequence of each traced boundary walk.
    std::vector<std::vector<int>> faces;

    int count() const { return static_cast<int>(faces.size()); }
};

// Traces every dart exactly once: after arriving at v from u, leave along the
// neighbor following u in rot[v].
FaceSet trace_faces(const Graph& g, const RotationSystem& r);

// True iff each vertex lies on at most one face whose boundary walk is not of
// length 3. Throws std::invalid_argument("not a plane embedding") when the
// traced faces fail Euler's formula.
bool locally_connected_by_embedding(const Graph& g, const RotationSystem& r);

}  // namespace mlines
