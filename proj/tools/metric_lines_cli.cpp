// metric-lines: batch front end for line systems of graph metrics.
//
// Exit codes: 0 success, 1 mathematical finding (violation, unexpected
// exception, disconnected input), 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "metric_lines/classes.hpp"
#include "metric_lines/json_io.hpp"
#include "metric_lines/lines.hpp"
#include "metric_lines/verify.hpp"

namespace {

using namespace mlines;

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for inputs that are well formed but mathematically unsuitable.
struct InputFinding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string graph6;
    std::string file;
    std::string family;
    int k = -1;
    std::string parts;

    int sources() const { return !graph6.empty() + !file.empty() + !family.empty(); }
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--graph6", in.graph6, "Inline graph6 record");
    cmd->add_option("--file", in.file, "graph6 file (one record per line) or 'n; u v' edge list");
    cmd->add_option("--family", in.family, "Named graph: H5 H6 H8 H6p H8p H8pp K122p K22 K23 K122 K222 K2222 K113, "
                                           "Cn Pn Kn Wn H2k, multipartite (--parts), matched (--k)");
    cmd->add_option("--k", in.k, "Clique size for --family matched");
    cmd->add_option("--parts", in.parts, "Comma-separated part sizes for --family multipartite");
}

std::optional<int> suffix_number(const std::string& s, char prefix) {
    if (s.size() < 2 || s[0] != prefix) return std::nullopt;
    int value = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        value = value * 10 + (s[i] - '0');
        if (value > kMaxVertices) return std::nullopt;
    }
    return value;
}

PartSizes parse_parts(const std::string& text) {
    PartSizes sizes;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            sizes.parts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("bad --parts entry '" + item + "'");
        }
    }
    return sizes;
}

Graph family_graph(const InputOptions& in) {
    const auto& f = in.family;
    if (auto named = parse_named_graph(f)) return named_graph(*named);
    if (f == "multipartite") {
        if (in.parts.empty()) throw UsageError("--family multipartite needs --parts");
        return complete_multipartite(parse_parts(in.parts));
    }
    if (f == "matched") {
        if (in.k < 0) throw UsageError("--family matched needs --k");
        return matched_cliques(in.k);
    }
    if (auto n = suffix_number(f, 'C')) return cycle_graph(*n);
    if (auto n = suffix_number(f, 'P')) return path_graph(*n);
    if (auto n = suffix_number(f, 'K')) return complete_graph(*n);
    if (auto n = suffix_number(f, 'W')) return wheel_graph(*n);
    if (auto n = suffix_number(f, 'H'); n && *n % 2 == 0) return matched_cliques(*n / 2);
    throw UsageError("unknown family '" + f + "'");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return std::isdigit(static_cast<unsigned char>(line[first])) != 0;
    }
    return false;
}

Graph read_graph(const InputOptions& in) {
    if (in.sources() != 1) throw UsageError("give exactly one of --graph6, --file, --family");
    if (!in.graph6.empty()) return parse_graph6(in.graph6);
    if (!in.family.empty()) return family_graph(in);
    const auto text = slurp(in.file);
    if (looks_like_edge_list(text)) return parse_edge_list(text);
    auto stream = read_graph6_stream(text, in.file);
    if (stream.graphs.empty()) throw UsageError(in.file + " holds no graph");
    return stream.graphs.front();
}

bool json_format(const std::string& format) {
    if (format != "json" && format != "text") throw UsageError("--format must be json or text");
    return format == "json";
}

int run_lines(const InputOptions& in, const std::string& format) {
    const bool as_json = json_format(format);
    const auto g = read_graph(in);
    if (g.order() < 2) throw InputFinding("need >= 2 vertices");
    const auto system = line_system(g);
    if (as_json) {
        std::cout << to_json(system).dump() << '\n';
        return kOk;
    }
    std::cout << "n=" << system.n << " count=" << system.count()
              << " universal=" << (system.has_universal() ? "true" : "false") << '\n';
    for (const auto& l : system.lines) std::cout << l.to_string() << '\n';
    return kOk;
}

int run_check(const InputOptions& in, const std::string& preds, const std::string& format) {
    const bool as_json = json_format(format);
    const auto g = read_graph(in);
    nlohmann::json out = nlohmann::json::object();
    std::string text;
    std::stringstream list(preds);
    for (std::string p; std::getline(list, p, ',');) {
        nlohmann::json value;
        if (p == "connected") value = is_connected(g);
        else if (p == "lc") value = is_lc_member(g);
        else if (p == "locally_connected") value = is_locally_connected(g);
        else if (p == "chordal") value = is_chordal(g);
        else if (p == "biconnected") value = is_biconnected(g);
        else if (p == "bridges") value = bridges(g).size();
        else if (p == "diameter") value = is_connected(g) ? nlohmann::json(diameter(apsp(g))) : nlohmann::json("inf");
        else if (p == "lines") value = (g.order() >= 2 && is_connected(g)) ? nlohmann::json(line_system(g).count()) : nlohmann::json(nullptr);
        else throw UsageError("unknown predicate '" + p + "'");
        out[p] = value;
        text += (text.empty() ? "" : " ") + p + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    std::cout << (as_json ? out.dump() : text) << '\n';
    return kOk;
}

struct VerifyOptions {
    std::string suite;
    InputOptions input;
    int n = -1;
    bool random = false;
    double p = 0.7;
    std::uint64_t seed = 1;
    int count = 100;
    int jobs = 0;
    std::string format = "text";
    std::string out;
};

GraphStream verify_stream(const VerifyOptions& o) {
    const auto& in = o.input;
    if (in.sources() + (o.random ? 1 : 0) > 1) throw UsageError("give at most one stream source");
    if (!in.file.empty()) return read_graph6_stream(std::filesystem::path(in.file));
    if (!in.graph6.empty() || !in.family.empty()) {
        GraphStream s;
        s.source = "single";
        s.graphs.push_back(read_graph(in));
        return s;
    }
    if (o.n < 1) throw UsageError("--n is required for exhaustive or random streams");
    if (o.random) {
        auto s = sample_lc(o.n, o.p, o.seed, o.count);
        if (s.graphs.empty()) throw InputFinding("no samples: rejection budget exhausted");
        return s;
    }
    if (o.n > kMaxEnumerationOrder)
        throw UsageError("--n " + std::to_string(o.n) + " is beyond exhaustive range (max " +
                         std::to_string(kMaxEnumerationOrder) + "); supply an external graph6 stream with --file");
    return enumerate_connected(o.n, o.jobs);
}

std::vector<VerificationReport> reports_for(const GraphStream& stream, int jobs) {
    GraphStream usable;
    for (const auto& g : stream.graphs)
        if (g.order() >= 2 && is_connected(g)) usable.graphs.push_back(g);
    return check_stream(usable, jobs);
}

void write_reports(const std::string& path, const std::vector<VerificationReport>& reports) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    for (const auto& r : reports) out << to_json(r).dump() << '\n';
}

std::string describe(const std::string& id) {
    auto name = known_graph_name(parse_graph6(id));
    return name ? *name : id;
}

std::string join(const std::vector<std::string>& ids) {
    std::string s;
    for (const auto& id : ids) s += (s.empty() ? "" : ", ") + describe(id);
    return s.empty() ? "none" : s;
}

int print_family_checks(const std::vector<FamilyCheck>& checks, bool as_json) {
    bool all = true;
    for (const auto& c : checks) all = all && c.ok;
    if (as_json) {
        std::cout << to_json(checks).dump() << '\n';
    } else {
        for (const auto& c : checks)
            std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << ": n=" << c.n << " diameter=" << c.diameter
                      << " lines=" << c.lines << " bridges=" << c.bridges << " (" << c.expectation << ")\n";
    }
    return all ? kOk : kFinding;
}

int run_verify(const VerifyOptions& o) {
    const bool as_json = json_format(o.format);
    const auto& s = o.suite;
    if (s == "families") return print_family_checks(verify_conclusion_families(), as_json);
    if (s == "theorem-class") return print_family_checks(verify_theorem_class_examples(), as_json);
    if (s != "main-theorem" && s != "diam3" && s != "claims") throw UsageError("unknown suite '" + s + "'");

    const auto stream = verify_stream(o);
    if (s == "main-theorem") {
        const auto v = verify_theorem_main(stream);
        if (!o.out.empty()) write_reports(o.out, reports_for(stream, o.jobs));
        if (as_json) {
            std::cout << to_json(v).dump() << '\n';
        } else {
            std::cout << "scanned=" << v.scanned << " lc=" << v.lc_members << '\n';
            std::cout << "exceptions: " << join(v.exceptions) << (v.matched ? " (expected)" : "") << '\n';
            if (!v.unexpected.empty()) std::cout << "unexpected: " << join(v.unexpected) << '\n';
            if (!v.missing.empty()) std::cout << "missing: " << join(v.missing) << '\n';
        }
        return v.matched ? kOk : kFinding;
    }
    if (s == "diam3") {
        const auto v = verify_prop_diam3(stream);
        if (!o.out.empty()) write_reports(o.out, reports_for(stream, o.jobs));
        if (as_json) {
            std::cout << to_json(v).dump() << '\n';
        } else {
            std::cout << "scanned=" << v.scanned << " checked=" << v.checked << " violators=" << v.violators.size() << '\n';
            if (!v.passed()) std::cout << "first violator: " << v.violators.front() << '\n';
        }
        return v.passed() ? kOk : kFinding;
    }

    const auto reports = reports_for(stream, o.jobs);
    write_reports(o.out, reports);
    int failing = 0;
    const VerificationReport* first = nullptr;
    for (const auto& r : reports)
        if (!r.all_passed()) {
            ++failing;
            if (!first) first = &r;
        }
    if (as_json) {
        nlohmann::json summary{{"schema", kSchema}, {"suite", "claims"}, {"graphs", reports.size()}, {"failing", failing}};
        if (first) {
            const auto* p = first->first_failure();
            summary["first_failure"] = {{"id", first->id}, {"property", p->name}, {"witness", p->witness}};
        }
        std::cout << summary.dump() << '\n';
    } else {
        std::cout << "graphs=" << reports.size() << " failing=" << failing << '\n';
        if (first) {
            const auto* p = first->first_failure();
            std::cout << "first failure: " << first->id << ' ' << p->name << " witness=(";
            for (std::size_t i = 0; i < p->witness.size(); ++i) std::cout << (i ? "," : "") << p->witness[i];
            std::cout << ")\n";
        }
    }
    return failing == 0 ? kOk : kFinding;
}

int run_enumerate(int n, const std::string& out_path, int jobs) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw UsageError("--n must lie in [1, " + std::to_string(kMaxEnumerationOrder) +
                         "]; supply an external graph6 stream for larger n");
    const auto stream = enumerate_connected(n, jobs);
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot write " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    for (const auto& g : stream.graphs) out << to_graph6(g) << '\n';
    (out_path.empty() ? std::cerr : std::cout) << "classes=" << stream.graphs.size() << '\n';
    return kOk;
}

int default_jobs() {
    if (const char* env = std::getenv("METRIC_LINES_JOBS")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            return 0;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lines in graph metric spaces: line systems, graph-class predicates, verification suites"};
    app.require_subcommand(1);

    InputOptions lines_in;
    std::string lines_format = "text";
    auto* lines_cmd = app.add_subcommand("lines", "Print the distinct lines of a connected graph");
    add_input_options(lines_cmd, lines_in);
    lines_cmd->add_option("--format", lines_format, "json | text");

    InputOptions check_in;
    std::string preds = "lc,chordal,biconnected,bridges,diameter";
    std::string check_format = "text";
    auto* check_cmd = app.add_subcommand("check", "Evaluate graph-class predicates");
    add_input_options(check_cmd, check_in);
    check_cmd->add_option("--pred", preds, "Comma list of connected, lc, locally_connected, chordal, biconnected, bridges, diameter, lines");
    check_cmd->add_option("--format", check_format, "json | text");

    VerifyOptions vo;
    vo.jobs = default_jobs();
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", vo.suite, "main-theorem | diam3 | claims | families | theorem-class")->required();
    add_input_options(verify_cmd, vo.input);
    verify_cmd->add_option("--n", vo.n, "Vertex count for exhaustive or random streams");
    verify_cmd->add_flag("--random", vo.random, "Use a random locally connected stream");
    verify_cmd->add_option("--p", vo.p, "Edge probability for --random");
    verify_cmd->add_option("--seed", vo.seed, "Seed for --random");
    verify_cmd->add_option("--count", vo.count, "Sample count for --random");
    verify_cmd->add_option("--jobs", vo.jobs, "Worker threads (default: METRIC_LINES_JOBS or all cores)");
    verify_cmd->add_option("--format", vo.format, "json | text");
    verify_cmd->add_option("--out", vo.out, "Write per-graph JSON-lines reports here");

    int enum_n = -1;
    std::string enum_out;
    int enum_jobs = default_jobs();
    auto* enum_cmd = app.add_subcommand("enumerate", "Write one graph6 record per connected graph class");
    enum_cmd->add_option("--n", enum_n, "Vertex count (1..7)")->required();
    enum_cmd->add_option("--out", enum_out, "Output path (default stdout)");
    enum_cmd->add_option("--jobs", enum_jobs, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (lines_cmd->parsed()) return run_lines(lines_in, lines_format);
        if (check_cmd->parsed()) return run_check(check_in, preds, check_format);
        if (verify_cmd->parsed()) return run_verify(vo);
        if (enum_cmd->parsed()) return run_enumerate(enum_n, enum_out, enum_jobs);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DisconnectedGraph& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFinding;
    } catch (const InputFinding& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFinding;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
