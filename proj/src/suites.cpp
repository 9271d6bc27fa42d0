#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "metric_lines/classes.hpp"
#include "metric_lines/lines.hpp"
#include "metric_lines/verify.hpp"

namespace mlines {

namespace {

constexpr std::array kExceptional{NamedGraph::K122, NamedGraph::K222, NamedGraph::K2222};

}  // namespace

TheoremVerdict verify_theorem_main(const GraphStream& stream) {
    TheoremVerdict v;
    std::set<int> sizes;
    std::set<std::string> found;
    for (const auto& g : stream.graphs) {
        if (g.order() < 3) continue;
        ++v.scanned;
        sizes.insert(g.order());
        if (!is_lc_member(g)) continue;
        ++v.lc_members;
        if (line_system(g).count() < g.order()) found.insert(report_id(g));
    }
    v.exceptions.assign(found.begin(), found.end());

    std::set<std::string> expected;
    for (auto name : kExceptional) {
        const auto g = named_graph(name);
        if (sizes.contains(g.order())) expected.insert(report_id(g));
    }
    v.expected.assign(expected.begin(), expected.end());
    std::ranges::set_difference(found, expected, std::back_inserter(v.unexpected));
    if (stream.exhaustive) std::ranges::set_difference(expected, found, std::back_inserter(v.missing));
    v.matched = v.unexpected.empty() && v.missing.empty();
    return v;
}

Diam3Verdict verify_prop_diam3(const GraphStream& stream) {
    Diam3Verdict v;
    for (const auto& g : stream.graphs) {
        ++v.scanned;
        if (g.order() < 2 || !is_lc_member(g)) continue;
        const LineTable table(g);
        if (diameter(table.distances()) < 3) continue;
        ++v.checked;
        if (line_system(table).count() < g.order()) v.violators.push_back(report_id(g));
    }
    std::ranges::sort(v.violators);
    return v;
}

namespace {

FamilyCheck measure(std::string name, const Graph& g) {
    FamilyCheck c;
    c.name = std::move(name);
    c.n = g.order();
    const LineTable table(g);
    c.diameter = diameter(table.distances());
    c.lines = line_system(table).count();
    c.bridges = static_cast<int>(bridges(g).size());
    c.biconnected = is_biconnected(g);
    return c;
}

}  // namespace

std::vector<FamilyCheck> verify_theorem_class_examples() {
    std::vector<FamilyCheck> out;
    for (auto name : {NamedGraph::K22, NamedGraph::K23, NamedGraph::K122_prime, NamedGraph::K122, NamedGraph::K222,
                      NamedGraph::K2222}) {
        auto c = measure(std::string(display_name(name)), named_graph(name));
        c.expectation = "lines + bridges < n";
        c.ok = c.lines + c.bridges < c.n;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<FamilyCheck> verify_conclusion_families() {
    struct Expect {
        std::string name;
        Graph graph;
        int diameter;
        int lines;  // -1: only "fewer lines than vertices" is asserted
    };
    const std::vector<Expect> table{
        {"H_6", matched_cliques(3), 2, 4},
        {"H_8", matched_cliques(4), 2, 7},
        {"H'_6", named_graph(NamedGraph::H6_prime), 3, 4},
        {"H'_8", named_graph(NamedGraph::H8_prime), 3, 7},
        {"H''_8", named_graph(NamedGraph::H8_doubleprime), 3, 7},
        {"H_5 (house)", named_graph(NamedGraph::H5_house), 2, -1},
        {"H_10", matched_cliques(5), 2, 5 * 4 / 2 + 1},
    };
    std::vector<FamilyCheck> out;
    for (const auto& e : table) {
        auto c = measure(e.name, e.graph);
        if (e.lines < 0) {
            c.expectation = "diameter " + std::to_string(e.diameter) + ", 2-connected, lines < n";
            c.ok = c.lines < c.n;
        } else {
            c.expectation = "diameter " + std::to_string(e.diameter) + ", 2-connected, " + std::to_string(e.lines) + " lines";
            c.ok = c.lines == e.lines;
        }
        c.ok = c.ok && c.diameter == e.diameter && c.biconnected;
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

using Coords = std::vector<std::pair<double, double>>;

Coords polygon(int k, double radius, double phase = std::numbers::pi / 2) {
    Coords out;
    for (int i = 0; i < k; ++i) {
        const double a = phase + 2 * std::numbers::pi * i / k;
        out.emplace_back(radius * std::cos(a), radius * std::sin(a));
    }
    return out;
}

EmbeddedGraph embed(std::string name, Graph g, const Coords& coords) {
    auto rot = rotation_from_coordinates(g, coords);
    return {std::move(name), std::move(g), std::move(rot)};
}

// Starts from a triangle and inserts a vertex at the centroid of each listed face.
EmbeddedGraph stacked(std::string name, const std::vector<std::array<int, 3>>& insertions) {
    Coords coords = polygon(3, 10.0);
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    for (const auto& face : insertions) {
        const int v = static_cast<int>(coords.size());
        double cx = 0;
        double cy = 0;
        for (int u : face) {
            cx += coords[u].first / 3;
            cy += coords[u].second / 3;
            edges.emplace_back(u, v);
        }
        coords.emplace_back(cx, cy);
    }
    return embed(std::move(name), Graph(static_cast<int>(coords.size()), edges), coords);
}

}  // namespace

std::vector<EmbeddedGraph> plane_corpus() {
    std::vector<EmbeddedGraph> out;
    for (int k = 4; k <= 8; ++k) out.push_back(embed("C_" + std::to_string(k), cycle_graph(k), polygon(k, 1.0)));

    {
        Coords c = polygon(3, 1.0);
        c.emplace_back(0.0, 0.0);
        out.push_back(embed("K_4", complete_graph(4), c));
    }
    for (int k = 4; k <= 7; ++k) {
        Coords c = polygon(k, 1.0);
        c.emplace_back(0.0, 0.0);
        out.push_back(embed("W_" + std::to_string(k), wheel_graph(k), c));
    }
    {
        // Parts {0,1}, {2,3}, {4,5}: outer triangle 0,2,4 with each partner
        // placed opposite on a smaller inner triangle.
        Coords c(6);
        const auto outer = polygon(3, 2.0);
        const auto inner = polygon(3, 0.5, std::numbers::pi / 2 + std::numbers::pi);
        for (int i = 0; i < 3; ++i) {
            c[2 * i] = outer[i];
            c[2 * i + 1] = inner[i];
        }
        out.push_back(embed("octahedron", named_graph(NamedGraph::K222), c));
    }
    out.push_back(stacked("stacked_A", {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}, {0, 2, 3}}));
    out.push_back(stacked("stacked_B", {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {1, 3, 4}, {0, 3, 4}}));

    // Extra 2-connected plane graphs.
    {
        Coords c = polygon(3, 2.0);
        const auto inner = polygon(3, 1.0);
        c.insert(c.end(), inner.begin(), inner.end());
        out.push_back(embed("prism H_6", matched_cliques(3), c));
    }
    out.push_back(embed("house H_5", named_graph(NamedGraph::H5_house),
                        Coords{{0, 1}, {1, 1}, {0.5, 1.7}, {0, 0}, {1, 0}}));
    {
        // Apex 0 over the path 1-2-3-4.
        Graph fan(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
        out.push_back(embed("fan F_4", fan, Coords{{0, 0}, {-1.5, 1}, {-0.5, 1.5}, {0.5, 1.5}, {1.5, 1}}));
    }
    out.push_back(embed("K_{2,3}", named_graph(NamedGraph::K23),
                        Coords{{0, 2}, {0, -2}, {-1, 0}, {0, 0}, {1, 0}}));
    return out;
}

}  // namespace mlines
