// Executable forms of the structural statements about lines in connected,
// locally connected graphs. Each check scans its parameters in increasing
// lexicographic order and stops at the first violation, so a reported
// witness is the least violating tuple.

#include <algorithm>
#include <array>
#include <map>

#include "metric_lines/classes.hpp"
#include "metric_lines/lines.hpp"
#include "metric_lines/verify.hpp"
#include "parallel.hpp"

namespace mlines {

namespace {

using Witness = std::optional<std::vector<int>>;

constexpr std::array<std::string_view, 20> kPropertyNames{
    "lc_implies_biconnected",
    "chordal_biconnected_implies_lc",
    "chen_chvatal",
    "fewer_lines_exception",
    "z_in_the_middle",
    "short_generator",
    "long_generator",
    "diam3_distinct_y_lines",
    "diam3_disjoint_pencils",
    "diam3_counting",
    "diam2_pencil_split",
    "diam2_independent_module",
    "diam2_class_respecting_lines",
    "diam2_a3_family",
    "diam2_a2_prime_family",
    "diam2_a2_double_prime_lines",
    "diam2_l1_below_neighborhood",
    "diam2_a2_double_prime_nonempty",
    "diam2_k122_branch",
    "diam3_at_least_n_lines",
};

bool disjoint(const LineSet& a, const LineSet& b) {
    return std::ranges::none_of(a, [&](const VertexSet& l) { return b.contains(l); });
}

LineSet unite(const LineSet& a, const LineSet& b) {
    LineSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

class Checker {
public:
    Checker(const Graph& g, const LineTable& table, int diam)
        : g_(g), t_(table), d_(table.distances()), n_(g.order()), diam_(diam) {
        pencils_.reserve(n_);
        for (int z = 0; z < n_; ++z) pencils_.push_back(pencil(t_, z));
    }

    bool between(int a, int b, int c) const { return d_(a, c) == d_(a, b) + d_(b, c); }

    Witness first_cut_vertex() const {
        for (int v = 0; v < n_; ++v) {
            auto rest = g_.vertices();
            rest.erase(v);
            if (!is_connected(induced_subgraph(g_, rest))) return std::vector<int>{v};
        }
        return std::nullopt;
    }

    Witness first_disconnected_neighborhood() const {
        for (int v = 0; v < n_; ++v) {
            const auto& nv = g_.neighbors(v);
            if (nv.empty() || !is_connected(induced_subgraph(g_, nv))) return std::vector<int>{v};
        }
        return std::nullopt;
    }

    // Same-class vertices a, b of the pencil at z satisfy a-z-b.
    Witness z_in_the_middle() const {
        for (int z = 0; z < n_; ++z)
            for (int a = 0; a < n_; ++a)
                for (int b = a + 1; b < n_; ++b) {
                    if (a == z || b == z) continue;
                    const auto& p = pencils_[z];
                    if (p.class_index[a] == p.class_index[b] && !between(a, z, b)) return std::vector<int>{z, a, b};
                }
        return std::nullopt;
    }

    // If |[a]_z| >= 2 and z-a-v for some v, then some u in N(a) has [a]_z
    // inside N(u) & N(z) and z-b-u for every b in [a]_z.
    Witness short_generator() const {
        for (int z = 0; z < n_; ++z)
            for (int a = 0; a < n_; ++a) {
                if (a == z) continue;
                const auto& cls = pencils_[z].class_of(a).members;
                if (cls.size() < 2) continue;
                bool extends = false;
                for (int v = 0; v < n_ && !extends; ++v)
                    extends = v != z && v != a && between(z, a, v);
                if (!extends) continue;
                bool found = false;
                g_.neighbors(a).for_each([&](int u) {
                    if (found || u == z) return;
                    if (!cls.is_subset_of(g_.neighbors(u) & g_.neighbors(z))) return;
                    bool all = true;
                    cls.for_each([&](int b) { all = all && between(z, b, u); });
                    found = all;
                });
                if (!found) return std::vector<int>{z, a};
            }
        return std::nullopt;
    }

    // Classes of size >= 2 leaving N(z): the line u-v is exactly the interval
    // between u and v, contains z, and is not in the pencil at z.
    Witness long_generator() const {
        for (int z = 0; z < n_; ++z) {
            const auto& p = pencils_[z];
            const auto pencil_lines = p.lines();
            for (int u = 0; u < n_; ++u)
                for (int v = u + 1; v < n_; ++v) {
                    if (u == z || v == z || p.class_index[u] != p.class_index[v]) continue;
                    if (p.class_of(u).members.is_subset_of(g_.neighbors(z))) continue;
                    VertexSet interval{u, v};
                    for (int w = 0; w < n_; ++w)
                        if (w != u && w != v && between(u, w, v)) interval.insert(w);
                    const auto& l = t_(u, v);
                    if (l != interval || !l.contains(z) || pencil_lines.contains(l)) return std::vector<int>{z, u, v};
                }
        }
        return std::nullopt;
    }

    template <class F>
    Witness for_diametral_pairs(F&& check) const {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                if (x == y || d_(x, y) != diam_) continue;
                const auto part = diam3_partition(t_, x, y);
                if (auto w = check(part)) return w;
            }
        return std::nullopt;
    }

    Witness diam3_distinct() const {
        return for_diametral_pairs([&](const Diam3Partition& p) -> Witness {
            const auto members = (p.v1 | p.v2).members();
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (t_(p.y, members[i]) == t_(p.y, members[j])) return std::vector<int>{p.x, p.y, members[i], members[j]};
            return std::nullopt;
        });
    }

    Witness diam3_disjoint() const {
        return for_diametral_pairs([&](const Diam3Partition& p) -> Witness {
            const auto lx = p.pencil_x.lines();
            Witness w;
            (p.v1 | p.v2).for_each([&](int u) {
                if (!w && lx.contains(t_(p.y, u))) w = std::vector<int>{p.x, p.y, u};
            });
            return w;
        });
    }

    Witness diam3_counting() const {
        return for_diametral_pairs([&](const Diam3Partition& p) -> Witness {
            const auto lx = p.pencil_x.lines();
            const auto both = unite(lx, p.cy12);
            int surplus = 0;
            for (const auto& c : p.c2) surplus += c.members.size() - 1;
            if (static_cast<int>(both.size()) < n_ - 1 + static_cast<int>(p.c1.size()) || p.v2.size() < surplus)
                return std::vector<int>{p.x, p.y};
            for (const auto& c : p.c2) {
                const auto m = c.members.members();
                for (std::size_t i = 0; i < m.size(); ++i)
                    for (std::size_t j = i + 1; j < m.size(); ++j)
                        if (both.contains(t_(m[i], m[j]))) return std::vector<int>{p.x, p.y, m[i], m[j]};
            }
            return std::nullopt;
        });
    }

    template <class F>
    Witness for_diam2_apexes(F&& check) const {
        for (int x = 0; x < n_; ++x) {
            const auto part = diam2_partition(t_, x);
            if (auto w = check(part)) return w;
        }
        return std::nullopt;
    }

    Witness diam2_pencil_split() const {
        return for_diam2_apexes([&](const Diam2Partition& p) -> Witness {
            bool ok = disjoint(p.l1, p.l2) && static_cast<int>(p.l2.size()) == p.second_neighborhood.size();
            for (const auto& c : p.pencil_x.classes)
                ok = ok && (c.members.size() == 1 || c.members.is_subset_of(p.neighborhood));
            return ok ? Witness{} : std::vector<int>{p.x};
        });
    }

    Witness diam2_independent_module() const {
        return for_diam2_apexes([&](const Diam2Partition& p) -> Witness {
            for (const auto& c : p.pencil_x.classes) {
                if (!c.members.is_subset_of(p.neighborhood)) continue;
                bool independent = true;
                c.members.for_each([&](int u) { independent = independent && !g_.neighbors(u).intersects(c.members); });
                if (!independent || !is_module(g_, c.members)) return std::vector<int>{p.x, c.members.min()};
            }
            return std::nullopt;
        });
    }

    // Every line v-w meets each class [u]_x (u in N(x) outside the classes of
    // v and w) fully or not at all; for v, w in N(x) it contains both classes
    // when vw is an edge and only v, w from them otherwise.
    Witness diam2_class_respecting_lines() const {
        return for_diam2_apexes([&](const Diam2Partition& p) -> Witness {
            const int x = p.x;
            auto cls = [&](int v) { return v == x ? VertexSet{x} : p.pencil_x.class_of(v).members; };
            for (int v = 0; v < n_; ++v)
                for (int w = v + 1; w < n_; ++w) {
                    const auto& l = t_(v, w);
                    const auto own = cls(v) | cls(w);
                    if (p.neighborhood.contains(v) && p.neighborhood.contains(w)) {
                        const bool ok = g_.adjacent(v, w) ? own.is_subset_of(l) : (own & l) == VertexSet{v, w};
                        if (!ok) return std::vector<int>{x, v, w};
                    }
                    Witness bad;
                    (p.neighborhood - own).for_each([&](int u) {
                        if (bad) return;
                        const auto& c = cls(u);
                        if (!c.is_subset_of(l) && c.intersects(l)) bad = std::vector<int>{x, v, w, u};
                    });
                    if (bad) return bad;
                }
            return std::nullopt;
        });
    }

    Witness diam2_a3_family() const {
        return for_diam2_apexes([&](const Diam2Partition& p) -> Witness {
            const bool ok = disjoint(p.family_a3, unite(p.l1, p.l2)) &&
                            static_cast<int>(p.family_a3.size()) >= p.a3.size();
            return ok ? Witness{} : std::vector<int>{p.x};
        });
    }

    Witness diam2_a2_prime_family() const {
        return for_diam2_apexes([&](const Diam2Partition& p) -> Witness {
            const bool ok = disjoint(p.family_a2_prime, unite(unite(p.l1, p.l2), p.family_a3)) &&
                            static_cast<int>(p.family_a2_prime.size()) >= p.a2_prime.size();
            return ok ? Witness{} : std::vector<int>{p.x};
        });
    }

    // For u, v in A''_2 from different classes, line u-v meets N(x) in
    // [u] | [v]; for u in N(x) \ A''_2 and v in A''_2 it meets A''_2 in [v].
    Witness diam2_a2_double_prime_lines() const {
        return for_diam2_apexes([&](const Diam2Partition& p) -> Witness {
            auto cls = [&](int v) -> const VertexSet& { return p.pencil_x.class_of(v).members; };
            const auto& a2pp = p.a2_double_prime;
            Witness bad;
            p.neighborhood.for_each([&](int u) {
                a2pp.for_each([&](int v) {
                    if (bad || cls(u).contains(v)) return;
                    const auto& l = t_(u, v);
                    const bool ok = a2pp.contains(u) ? (l & p.neighborhood) == (cls(u) | cls(v)) : (l & a2pp) == cls(v);
                    if (!ok) bad = std::vector<int>{p.x, u, v};
                });
            });
            if (bad) return bad;
            const int half = p.a2_double_prime.size() / 2;
            bool ok = disjoint(p.family_a2_double_prime, p.family_a2_triple_prime) &&
                      static_cast<int>(p.family_a2_double_prime.size()) >= half * (half - 1) / 2;
            if (!(p.neighborhood - p.a2_double_prime).empty())
                ok = ok && static_cast<int>(p.family_a2_triple_prime.size()) >= half;
            return ok ? Witness{} : std::vector<int>{p.x};
        });
    }

    Witness diam2_l1_below_neighborhood() const {
        return for_diam2_apexes([&](const Diam2Partition& p) -> Witness {
            return static_cast<int>(p.l1.size()) < p.neighborhood.size() ? Witness{} : std::vector<int>{p.x};
        });
    }

    Witness diam2_a2_double_prime_nonempty() const {
        return for_diam2_apexes([&](const Diam2Partition& p) -> Witness {
            return p.a2_double_prime.empty() ? std::vector<int>{p.x} : Witness{};
        });
    }

    Witness diam2_k122_branch() const {
        const bool is_k122 = is_isomorphic(g_, named_graph(NamedGraph::K122));
        return for_diam2_apexes([&](const Diam2Partition& p) -> Witness {
            if (p.neighborhood != p.a2_double_prime && !is_k122) return std::vector<int>{p.x};
            return std::nullopt;
        });
    }

private:
    const Graph& g_;
    const LineTable& t_;
    const DistanceMatrix& d_;
    int n_;
    int diam_;
    std::vector<Pencil> pencils_;
};

bool is_listed_exception(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder) return false;
    for (auto name : {NamedGraph::K122, NamedGraph::K222, NamedGraph::K2222})
        if (is_isomorphic(g, named_graph(name))) return true;
    return false;
}

}  // namespace

std::string_view to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "n/a";
    }
    return "?";
}

bool VerificationReport::all_passed() const { return first_failure() == nullptr; }

const PropertyResult* VerificationReport::first_failure() const {
    for (const auto& p : properties)
        if (p.status == Status::fail) return &p;
    return nullptr;
}

const PropertyResult* VerificationReport::find(std::string_view name) const {
    for (const auto& p : properties)
        if (p.name == name) return &p;
    return nullptr;
}

std::span<const std::string_view> property_names() { return kPropertyNames; }

std::string report_id(const Graph& g) {
    return g.order() <= kMaxCanonicalOrder ? to_graph6(canonical_graph(g)) : to_graph6(g);
}

std::optional<std::string> known_graph_name(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder) return std::nullopt;
    for (auto name : all_named_graphs())
        if (is_isomorphic(g, named_graph(name))) return std::string(display_name(name));
    return std::nullopt;
}

VerificationReport check_properties(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("check_properties: need at least 2 vertices");
    const LineTable table(g);  // throws DisconnectedGraph
    const auto system = line_system(table);

    VerificationReport r;
    r.id = report_id(g);
    r.n = g.order();
    r.diameter = diameter(table.distances());
    r.line_count = system.count();
    r.universal = system.has_universal();
    r.lc = is_lc_member(g);
    r.chordal = is_chordal(g);
    r.biconnected = is_biconnected(g);

    const Checker check(g, table, r.diameter);
    const bool fewer = r.line_count < r.n;
    auto record = [&](std::string_view name, bool applicable, auto&& run) {
        PropertyResult p;
        p.name = std::string(name);
        if (applicable) {
            Witness w = run();
            p.status = w ? Status::fail : Status::pass;
            if (w) p.witness = std::move(*w);
        }
        r.properties.push_back(std::move(p));
    };
    auto totals = [&](bool ok) { return ok ? Witness{} : std::vector<int>{r.n, r.line_count}; };

    record(kPropertyNames[0], r.lc && r.n >= 3, [&] { return check.first_cut_vertex(); });
    record(kPropertyNames[1], r.chordal && r.biconnected, [&] { return check.first_disconnected_neighborhood(); });
    record(kPropertyNames[2], r.lc, [&] { return totals(r.universal || !fewer); });
    record(kPropertyNames[3], r.lc && r.n >= 3, [&] { return totals(!fewer || is_listed_exception(g)); });
    record(kPropertyNames[4], r.lc, [&] { return check.z_in_the_middle(); });
    record(kPropertyNames[5], r.lc, [&] { return check.short_generator(); });
    record(kPropertyNames[6], r.lc, [&] { return check.long_generator(); });
    const bool d3 = r.lc && r.diameter >= 3;
    record(kPropertyNames[7], d3, [&] { return check.diam3_distinct(); });
    record(kPropertyNames[8], d3, [&] { return check.diam3_disjoint(); });
    record(kPropertyNames[9], d3, [&] { return check.diam3_counting(); });
    const bool d2 = r.lc && r.diameter == 2;
    record(kPropertyNames[10], d2, [&] { return check.diam2_pencil_split(); });
    record(kPropertyNames[11], d2, [&] { return check.diam2_independent_module(); });
    record(kPropertyNames[12], d2, [&] { return check.diam2_class_respecting_lines(); });
    record(kPropertyNames[13], d2, [&] { return check.diam2_a3_family(); });
    record(kPropertyNames[14], d2, [&] { return check.diam2_a2_prime_family(); });
    record(kPropertyNames[15], d2, [&] { return check.diam2_a2_double_prime_lines(); });
    record(kPropertyNames[16], d2 && fewer, [&] { return check.diam2_l1_below_neighborhood(); });
    record(kPropertyNames[17], d2 && fewer, [&] { return check.diam2_a2_double_prime_nonempty(); });
    record(kPropertyNames[18], d2 && fewer, [&] { return check.diam2_k122_branch(); });
    record(kPropertyNames[19], d3, [&] { return totals(!fewer); });
    return r;
}

std::vector<VerificationReport> check_stream(const GraphStream& stream, int jobs) {
    std::vector<VerificationReport> out(stream.graphs.size());
    detail::parallel_for(static_cast<long>(stream.graphs.size()), jobs,
                         [&](int, long i) { out[i] = check_properties(stream.graphs[i]); });
    std::ranges::stable_sort(out, {}, &VerificationReport::id);
    return out;
}

}  // namespace mlines
