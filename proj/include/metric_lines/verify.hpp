#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metric_lines/classes.hpp"
#include "metric_lines/graph.hpp"

namespace mlines {

// ---------------------------------------------------------------------------
// Graph streams

struct GraphStream {
    std::string source;
    // True when the stream holds every isomorphism class of connected graphs
    // on the scanned sizes.
    bool exhaustive = false;
    // Set by sample_lc when the rejection budget ran out before `count` samples.
    bool budget_exhausted = false;
    std::vector<Graph> graphs;
};

inline constexpr int kMaxEnumerationOrder = 7;

// One representative per isomorphism class of connected graphs on n vertices,
// in canonical labeling, ordered by graph6 string. jobs <= 0 means all cores.
// Throws std::out_of_range for n outside [1, kMaxEnumerationOrder].
GraphStream enumerate_connected(int n, int jobs = 0);

// graph6 records, one per line; a leading ">>graph6<<" header is accepted.
GraphStream read_graph6_stream(const std::filesystem::path& path);
GraphStream read_graph6_stream(std::string_view text, std::string source);

GraphStream generated_stream(std::span<const NamedGraph> names);

inline constexpr long kSampleRetryBudget = 1'000'000;

// Erdős–Rényi G(n, p) draws kept when connected and locally connected.
// Reproducible for a fixed seed. Throws std::invalid_argument unless 0 < p < 1.
GraphStream sample_lc(int n, double p, std::uint64_t seed, int count);

// ---------------------------------------------------------------------------
// Per-graph property suite

enum class Status { pass, fail, not_applicable };

std::string_view to_string(Status s);

struct PropertyResult {
    std::string name;
    Status status = Status::not_applicable;
    // Lexicographically least violating tuple; empty unless status == fail.
    std::vector<int> witness;
};

struct VerificationReport {
    std::string id;  // graph6 of the canonical labeling (plain graph6 above 10 vertices)
    int n = 0;
    int diameter = 0;
    int line_count = 0;
    bool universal = false;
    bool lc = false;
    bool chordal = false;
    bool biconnected = false;
    std::vector<PropertyResult> properties;

    bool all_passed() const;
    const PropertyResult* first_failure() const;
    const PropertyResult* find(std::string_view name) const;
};

// Names of every property evaluated by check_properties, in report order.
std::span<const std::string_view> property_names();

// Requires a connected graph with at least 2 vertices.
VerificationReport check_properties(const Graph& g);

// Parallel map of check_properties; results ordered by id.
std::vector<VerificationReport> check_stream(const GraphStream& stream, int jobs = 0);

// Graph6 id used in reports.
std::string report_id(const Graph& g);

// "K_{1,2,2}" etc. when g is isomorphic to a named graph.
std::optional<std::string> known_graph_name(const Graph& g);

// ---------------------------------------------------------------------------
// Suites

struct TheoremVerdict {
    int scanned = 0;
    int lc_members = 0;
    std::vector<std::string> exceptions;  // ids of lc graphs with fewer lines than vertices
    std::vector<std::string> expected;    // exceptional graphs at the scanned sizes
    std::vector<std::string> unexpected;
    std::vector<std::string> missing;     // only filled for exhaustive streams
    bool matched = false;
};

// Graphs on fewer than 3 vertices are outside the scan.
TheoremVerdict verify_theorem_main(const GraphStream& stream);

struct Diam3Verdict {
    int scanned = 0;
    int checked = 0;  // lc members of diameter >= 3
    std::vector<std::string> violators;

    bool passed() const { return violators.empty(); }
};

Diam3Verdict verify_prop_diam3(const GraphStream& stream);

struct FamilyCheck {
    std::string name;
    int n = 0;
    int diameter = 0;
    int lines = 0;
    int bridges = 0;
    bool biconnected = false;
    std::string expectation;
    bool ok = false;
};

// Six graphs whose lines plus bridges fall below n.
std::vector<FamilyCheck> verify_theorem_class_examples();
// Matched-clique families and their relatives with their known line counts.
std::vector<FamilyCheck> verify_conclusion_families();

// ---------------------------------------------------------------------------
// Plane corpus

struct EmbeddedGraph {
    std::string name;
    Graph graph;
    RotationSystem rotation;
};

// Cycles C_4..C_8, K_4, wheels W_4..W_7, the octahedron, two stacked
// triangulations, plus a few extra 2-connected plane graphs.
std::vector<EmbeddedGraph> plane_corpus();

}  // namespace mlines
