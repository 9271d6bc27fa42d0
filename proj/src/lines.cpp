#include "metric_lines/lines.hpp"

#include <map>
#include <unordered_map>

namespace mlines {

namespace {

VertexSet compute_line(const DistanceMatrix& d, int a, int b) {
    const int dab = d(a, b);
    VertexSet members{a, b};
    for (int c = 0; c < d.order(); ++c) {
        if (c == a || c == b) continue;
        const int dac = d(a, c);
        const int dbc = d(b, c);
        if (dbc == dac + dab || dab == dac + dbc || dac == dab + dbc) members.insert(c);
    }
    return members;
}

}  // namespace

Line line(const DistanceMatrix& d, int a, int b) {
    if (a == b) throw std::invalid_argument("line: generating vertices must differ");
    if (!d.connected()) throw DisconnectedGraph();
    return {compute_line(d, a, b), a, b};
}

LineTable::LineTable(const Graph& g) : LineTable(apsp(g)) {}

LineTable::LineTable(DistanceMatrix d) : d_(std::move(d)) {
    if (!d_.connected()) throw DisconnectedGraph();
    const int n = d_.order();
    lines_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            lines_[static_cast<std::size_t>(a) * n + b] = compute_line(d_, a, b);
            lines_[static_cast<std::size_t>(b) * n + a] = lines_[static_cast<std::size_t>(a) * n + b];
        }
}

bool LineSystem::has_universal() const {
    const auto all = VertexSet::range(n);
    for (const auto& l : lines)
        if (l == all) return true;
    return false;
}

LineSystem line_system(const LineTable& table) {
    const int n = table.order();
    if (n < 2) throw std::invalid_argument("line system needs at least 2 vertices");
    std::map<VertexSet, std::vector<Edge>> grouped;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) grouped[table(a, b)].emplace_back(a, b);
    LineSystem out;
    out.n = n;
    for (auto& [members, pairs] : grouped) {
        out.lines.push_back(members);
        out.generators.push_back(std::move(pairs));
    }
    return out;
}

LineSystem line_system(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("line system needs at least 2 vertices");
    return line_system(LineTable(g));
}

bool is_universal(const Graph& g, const Line& l) { return l.members == g.vertices(); }

bool has_universal_line(const Graph& g) { return line_system(g).has_universal(); }

bool chen_chvatal_holds(const Graph& g) {
    const auto sys = line_system(g);
    return sys.has_universal() || sys.count() >= g.order();
}

LineSet Pencil::lines() const {
    LineSet out;
    for (const auto& c : classes) out.insert(c.line);
    return out;
}

Pencil pencil(const LineTable& table, int z) {
    const int n = table.order();
    Pencil p;
    p.z = z;
    p.class_index.assign(n, -1);
    std::unordered_map<VertexSet, int> index;
    for (int u = 0; u < n; ++u) {
        if (u == z) continue;
        const auto& l = table(z, u);
        auto [it, inserted] = index.try_emplace(l, static_cast<int>(p.classes.size()));
        if (inserted) p.classes.push_back({VertexSet{}, l});
        p.classes[it->second].members.insert(u);
        p.class_index[u] = it->second;
    }
    return p;
}

Pencil pencil(const Graph& g, int z) { return pencil(LineTable(g), z); }

Diam3Partition diam3_partition(const LineTable& table, int x, int y) {
    const auto& d = table.distances();
    const int diam = diameter(d);
    if (diam < 3) throw std::invalid_argument("diam3_partition: diameter is below 3");
    if (x == y || d(x, y) != diam) throw std::invalid_argument("diam3_partition: (x, y) is not a diametral pair");

    Diam3Partition out;
    out.x = x;
    out.y = y;
    out.diameter = diam;
    out.pencil_x = pencil(table, x);
    VertexSet nx;
    for (int u = 0; u < table.order(); ++u)
        if (d(x, u) == 1) nx.insert(u);

    for (const auto& cls : out.pencil_x.classes) {
        if (cls.members.size() == 1) {
            out.l0.push_back(cls);
        } else if (cls.members.is_subset_of(nx)) {
            out.c1.push_back(cls);
            out.v1 |= cls.members;
        } else {
            out.c2.push_back(cls);
            cls.members.for_each([&](int u) {
                if (2 * d(x, u) <= diam) out.v2.insert(u);
            });
        }
    }
    (out.v1 | out.v2).for_each([&](int u) { out.cy12.insert(table(y, u)); });
    return out;
}

Diam3Partition diam3_partition(const Graph& g, int x, int y) { return diam3_partition(LineTable(g), x, y); }

Diam2Partition diam2_partition(const LineTable& table, int x) {
    const auto& d = table.distances();
    if (diameter(d) != 2) throw std::invalid_argument("diam2_partition: diameter is not 2");
    const int n = table.order();

    Diam2Partition out;
    out.x = x;
    out.pencil_x = pencil(table, x);
    const auto& pen = out.pencil_x;
    for (int u = 0; u < n; ++u) {
        if (d(x, u) == 1) out.neighborhood.insert(u);
        if (d(x, u) == 2) out.second_neighborhood.insert(u);
    }
    auto cls = [&](int u) -> const VertexSet& { return pen.class_of(u).members; };

    out.neighborhood.for_each([&](int u) {
        const int size = cls(u).size();
        (size == 1 ? out.a1 : size == 2 ? out.a2 : out.a3).insert(u);
        out.l1.insert(table(x, u));
    });
    out.second_neighborhood.for_each([&](int u) { out.l2.insert(table(x, u)); });

    LineSet a3_pencil_lines;
    out.a3.for_each([&](int u) { a3_pencil_lines.insert(table(x, u)); });
    out.a3_lines = static_cast<int>(a3_pencil_lines.size());

    out.a2.for_each([&](int u) {
        const auto others = out.neighborhood - cls(u);
        bool has_non_neighbor = false;
        others.for_each([&](int v) { has_non_neighbor |= !d.adjacent(u, v); });
        (has_non_neighbor ? out.a2_prime : out.a2_double_prime).insert(u);
    });

    out.a3.for_each([&](int u) {
        const auto members = cls(u).members();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) out.family_a3.insert(table(members[i], members[j]));
    });

    out.a2_prime.for_each([&](int u) {
        (out.neighborhood - cls(u)).for_each([&](int v) {
            if (d.adjacent(u, v)) return;
            cls(u).for_each([&](int s) { cls(v).for_each([&](int t) { out.family_a2_prime.insert(table(s, t)); }); });
        });
    });

    out.a2_double_prime.for_each([&](int u) {
        (out.a2_double_prime - cls(u)).for_each([&](int v) { out.family_a2_double_prime.insert(table(u, v)); });
        (out.neighborhood - out.a2_double_prime).for_each([&](int v) { out.family_a2_triple_prime.insert(table(v, u)); });
    });
    return out;
}

Diam2Partition diam2_partition(const Graph& g, int x) { return diam2_partition(LineTable(g), x); }

}  // namespace mlines
