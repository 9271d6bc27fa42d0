#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "metric_lines/classes.hpp"

namespace mlines {

RotationSystem parse_rotation_system(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::map<int, std::vector<int>> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("rotation: missing ':' on line " + std::to_string(lineno));
        std::istringstream head(line.substr(0, colon));
        int v = -1;
        if (!(head >> v) || v < 0) throw ParseError("rotation: bad vertex on line " + std::to_string(lineno));
        std::istringstream tail(line.substr(colon + 1));
        std::vector<int> order;
        for (int u = 0; tail >> u;) order.push_back(u);
        if (!tail.eof()) throw ParseError("rotation: bad neighbor on line " + std::to_string(lineno));
        if (!rows.emplace(v, std::move(order)).second)
            throw ParseError("rotation: vertex " + std::to_string(v) + " listed twice");
    }
    RotationSystem r;
    r.n = static_cast<int>(rows.size());
    for (auto& [v, order] : rows) {
        if (v != static_cast<int>(r.rot.size())) throw ParseError("rotation: vertex " + std::to_string(r.rot.size()) + " missing");
        r.rot.push_back(std::move(order));
    }
    return r;
}

std::string format_rotation_system(const RotationSystem& r) {
    std::ostringstream out;
    for (int v = 0; v < r.n; ++v) {
        out << v << ':';
        for (int u : r.rot[v]) out << ' ' << u;
        out << '\n';
    }
    return out.str();
}

RotationSystem rotation_from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& coords) {
    if (static_cast<int>(coords.size()) != g.order()) throw std::invalid_argument("rotation: one coordinate per vertex required");
    RotationSystem r;
    r.n = g.order();
    r.rot.resize(r.n);
    for (int v = 0; v < r.n; ++v) {
        auto order = g.neighbors(v).members();
        auto angle = [&](int u) {
            return std::atan2(coords[u].second - coords[v].second, coords[u].first - coords[v].first);
        };
        std::ranges::sort(order, [&](int a, int b) { return angle(a) < angle(b); });
        r.rot[v] = std::move(order);
    }
    return r;
}

void validate_rotation(const Graph& g, const RotationSystem& r) {
    if (r.n != g.order() || static_cast<int>(r.rot.size()) != g.order())
        throw std::invalid_argument("rotation: vertex count does not match the graph");
    for (int v = 0; v < r.n; ++v) {
        VertexSet listed;
        for (int u : r.rot[v]) {
            if (u < 0 || u >= g.order() || !g.adjacent(v, u) || listed.contains(u))
                throw std::invalid_argument("rotation: entry " + std::to_string(u) + " at vertex " + std::to_string(v) +
                                            " is not a distinct neighbor");
            listed.insert(u);
        }
        if (listed != g.neighbors(v))
            throw std::invalid_argument("rotation: vertex " + std::to_string(v) + " omits a neighbor");
    }
}

FaceSet trace_faces(const Graph& g, const RotationSystem& r) {
    validate_rotation(g, r);
    const int n = g.order();
    FaceSet out;
    if (g.size() == 0) {
        out.faces.emplace_back();
        return out;
    }
    // position[v][u] = index of u in rot[v]
    std::vector<std::map<int, int>> position(n);
    std::vector<std::vector<char>> used(n);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(r.rot[v].size()); ++i) position[v][r.rot[v][i]] = i;
        used[v].assign(r.rot[v].size(), 0);
    }
    for (int s = 0; s < n; ++s) {
        for (int i = 0; i < static_cast<int>(r.rot[s].size()); ++i) {
            if (used[s][i]) continue;
            std::vector<int> walk;
            int u = s;
            int k = i;
            while (!used[u][k]) {
                used[u][k] = 1;
                walk.push_back(u);
                const int v = r.rot[u][k];
                const int deg = static_cast<int>(r.rot[v].size());
                k = (position[v].at(u) + 1) % deg;
                u = v;
            }
            out.faces.push_back(std::move(walk));
        }
    }
    return out;
}

bool locally_connected_by_embedding(const Graph& g, const RotationSystem& r) {
    const auto faces = trace_faces(g, r);
    if (g.order() - g.size() + faces.count() != 2) throw std::invalid_argument("not a plane embedding");
    std::vector<int> non_triangular(g.order(), 0);
    for (const auto& walk : faces.faces) {
        if (walk.size() == 3) continue;
        VertexSet on;
        for (int v : walk) on.insert(v);
        on.for_each([&](int v) { ++non_triangular[v]; });
    }
    return std::ranges::all_of(non_triangular, [](int c) { return c <= 1; });
}

}  // namespace mlines
