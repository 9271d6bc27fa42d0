// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "metric_lines/classes.hpp"
#include "metric_lines/lines.hpp"
#include "metric_lines/verify.hpp"

using namespace mlines;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool ok = false;
    std::string detail;
};

// Exhaustive streams are shared across criteria.
const std::vector<GraphStream>& census() {
    static const std::vector<GraphStream> streams = [] {
        std::vector<GraphStream> out;
        for (int n = 1; n <= kMaxEnumerationOrder; ++n) out.push_back(enumerate_connected(n));
        return out;
    }();
    return streams;
}

std::vector<Graph> lc_members(int max_n) {
    std::vector<Graph> out;
    for (const auto& s : census())
        for (const auto& g : s.graphs)
            if (g.order() <= max_n && is_lc_member(g)) out.push_back(g);
    return out;
}

std::string ids(const std::vector<std::string>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    return out + "}";
}

Outcome theorem_at(int n, std::vector<NamedGraph> expected, double limit_seconds) {
    const auto start = Clock::now();
    const auto stream = enumerate_connected(n);
    const auto verdict = verify_theorem_main(stream);
    const double elapsed = seconds_since(start);

    std::vector<std::string> want;
    for (auto name : expected) want.push_back(report_id(named_graph(name)));
    std::ranges::sort(want);
    const bool ok = verdict.exceptions == want && verdict.matched && elapsed < limit_seconds;
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=%d graphs=%zu lc=%d exceptions=%s time=%.2fs (limit %.0fs)", n,
                  stream.graphs.size(), verdict.lc_members, ids(verdict.exceptions).c_str(), elapsed, limit_seconds);
    return {ok, buf};
}

Outcome criterion_1() {
    auto r = theorem_at(5, {NamedGraph::K122}, 1.0);
    r.ok = r.ok && enumerate_connected(5).graphs.size() == 21;
    return r;
}

Outcome criterion_2() {
    const auto six = theorem_at(6, {NamedGraph::K222}, 300.0);
    const auto seven = theorem_at(7, {}, 300.0);
    return {six.ok && seven.ok, six.detail + "; " + seven.detail};
}

Outcome criterion_3() {
    // Golden count from tests/oracle/lines_oracle.py.
    constexpr int kK2222Lines = 7;
    const auto g = named_graph(NamedGraph::K2222);
    const int lines = line_system(g).count();
    const bool lc = is_lc_member(g);
    return {lc && lines == kK2222Lines && lines < g.order(),
            "K_{2,2,2,2}: lc=" + std::string(lc ? "true" : "false") + " lines=" + std::to_string(lines) +
                " golden=" + std::to_string(kK2222Lines)};
}

Outcome criterion_4() {
    int checked = 0;
    std::vector<std::string> violators;
    for (const auto& s : census()) {
        const auto v = verify_prop_diam3(s);
        checked += v.checked;
        violators.insert(violators.end(), v.violators.begin(), v.violators.end());
    }
    return {violators.empty() && checked > 0,
            "diameter>=3 lc graphs checked=" + std::to_string(checked) + " violators=" + ids(violators)};
}

Outcome criterion_5() {
    struct Row {
        std::string name;
        Graph g;
        int diameter;
        int lines;  // -1: fewer than n
    };
    const std::vector<Row> rows{
        {"H_6", matched_cliques(3), 2, 4},
        {"H_8", matched_cliques(4), 2, 7},
        {"H'_6", named_graph(NamedGraph::H6_prime), 3, 4},
        {"H'_8", named_graph(NamedGraph::H8_prime), 3, 7},
        {"H''_8", named_graph(NamedGraph::H8_doubleprime), 3, 7},
        {"H_5", named_graph(NamedGraph::H5_house), -1, -1},
    };
    bool ok = true;
    std::string detail;
    for (const auto& r : rows) {
        const int d = diameter(apsp(r.g));
        const int lines = line_system(r.g).count();
        const bool row_ok = r.lines < 0 ? lines < r.g.order() : (lines == r.lines && d == r.diameter);
        ok = ok && row_ok;
        detail += r.name + "=" + std::to_string(lines) + "/d" + std::to_string(d) + (row_ok ? " " : "(!) ");
    }
    ok = ok && named_graph(NamedGraph::H8_doubleprime).order() == 8;
    detail.pop_back();
    return {ok, detail};
}

struct Sweep {
    int graphs = 0;
    int applicable = 0;
    std::vector<std::string> failures;
};

Sweep sweep(const std::vector<Graph>& graphs, const std::vector<std::string>& names) {
    GraphStream s;
    s.graphs = graphs;
    Sweep out;
    for (const auto& r : check_stream(s)) {
        ++out.graphs;
        for (const auto& p : r.properties) {
            if (!names.empty() && std::ranges::find(names, p.name) == names.end()) continue;
            if (p.status == Status::not_applicable) continue;
            ++out.applicable;
            if (p.status == Status::fail) out.failures.push_back(r.id + ":" + p.name);
        }
    }
    return out;
}

Outcome criterion_6() {
    const auto s = sweep(lc_members(7), {"z_in_the_middle", "short_generator"});
    return {s.failures.empty() && s.applicable > 0,
            "lc graphs=" + std::to_string(s.graphs) + " checks=" + std::to_string(s.applicable) +
                " witnesses=" + std::to_string(s.failures.size())};
}

Outcome criterion_7() {
    std::vector<std::string> claims;
    for (auto name : property_names())
        if (name.starts_with("diam") || name == "long_generator") claims.emplace_back(name);
    const auto exhaustive = sweep(lc_members(7), claims);
    bool ok = exhaustive.failures.empty() && exhaustive.applicable > 0;
    std::string detail = "n<=7: checks=" + std::to_string(exhaustive.applicable) +
                         " witnesses=" + std::to_string(exhaustive.failures.size());
    for (int n = 8; n <= 10; ++n) {
        const auto sample = sample_lc(n, 0.7, 1, 100);
        const auto s = sweep(sample.graphs, claims);
        ok = ok && sample.graphs.size() == 100 && s.failures.empty();
        detail += "; n=" + std::to_string(n) + ": samples=" + std::to_string(sample.graphs.size()) +
                  " checks=" + std::to_string(s.applicable) + " witnesses=" + std::to_string(s.failures.size());
    }
    if (!exhaustive.failures.empty()) detail += "; first " + exhaustive.failures.front();
    return {ok, detail};
}

Outcome criterion_8() {
    int chordal_bi = 0;
    int lc = 0;
    int counterexamples = 0;
    for (const auto& s : census())
        for (const auto& g : s.graphs) {
            if (g.order() >= 3 && is_biconnected(g) && is_chordal(g)) {
                ++chordal_bi;
                if (!is_locally_connected(g)) ++counterexamples;
            }
            if (g.order() >= 3 && is_lc_member(g)) {
                ++lc;
                if (!is_biconnected(g)) ++counterexamples;
            }
        }
    return {counterexamples == 0, "2-connected chordal=" + std::to_string(chordal_bi) + " lc(n>=3)=" +
                                      std::to_string(lc) + " counterexamples=" + std::to_string(counterexamples)};
}

Outcome criterion_9() {
    const std::set<std::string> required{"C_4", "C_5", "C_6", "C_7", "C_8", "K_4", "W_4", "W_5", "W_6",
                                         "W_7", "octahedron", "stacked_A", "stacked_B"};
    std::set<std::string> seen;
    int agree = 0;
    int total = 0;
    for (const auto& e : plane_corpus()) {
        ++total;
        seen.insert(e.name);
        if (locally_connected_by_embedding(e.graph, e.rotation) == is_locally_connected(e.graph)) ++agree;
    }
    const bool covered = std::ranges::includes(seen, required);
    return {agree == total && covered,
            "agree " + std::to_string(agree) + "/" + std::to_string(total) + (covered ? "" : " (corpus incomplete)")};
}

Outcome criterion_10() {
    int checked = 0;
    int failures = 0;
    for (const auto& g : lc_members(7)) {
        if (g.order() < 2) continue;
        ++checked;
        if (!chen_chvatal_holds(g)) ++failures;
    }
    std::string detail;
    for (auto name : {NamedGraph::K122, NamedGraph::K222, NamedGraph::K2222}) {
        const auto g = named_graph(name);
        ++checked;
        const bool universal = has_universal_line(g);
        if (!chen_chvatal_holds(g) || !universal) ++failures;
        detail += std::string(" ") + std::string(display_name(name)) + (universal ? ":universal" : ":NO-universal");
    }
    return {failures == 0, "graphs=" + std::to_string(checked) + " failures=" + std::to_string(failures) + detail};
}

Outcome criterion_11() {
    const auto rows = verify_theorem_class_examples();
    bool ok = rows.size() == 6;
    std::string detail;
    for (const auto& r : rows) {
        ok = ok && r.ok;
        detail += r.name + ":" + std::to_string(r.lines) + "+" + std::to_string(r.bridges) + "<" + std::to_string(r.n) +
                  (r.ok ? " " : "(!) ");
    }
    if (!detail.empty()) detail.pop_back();
    return {ok, detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"main theorem exhaustive n=5", criterion_1},
        {"main theorem exhaustive n=6,7", criterion_2},
        {"K_{2,2,2,2} pointwise", criterion_3},
        {"diameter >= 3 sweep n<=7", criterion_4},
        {"matched-clique family counts", criterion_5},
        {"pencil lemma sweeps n<=7", criterion_6},
        {"partition claim sweeps", criterion_7},
        {"class containments n<=7", criterion_8},
        {"embedding criterion on plane corpus", criterion_9},
        {"chen-chvatal on lc graphs", criterion_10},
        {"lines plus bridges examples", criterion_11},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failed += r.ok ? 0 : 1;
        std::printf("[%s] %2zu %s: %s\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), r.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
