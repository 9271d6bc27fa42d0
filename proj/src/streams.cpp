#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "metric_lines/classes.hpp"
#include "metric_lines/verify.hpp"
#include "parallel.hpp"
#include "small_canon.hpp"

namespace mlines {

namespace {

bool small_connected(int n, const detail::SmallAdj& adj) {
    const auto all = static_cast<std::uint16_t>((1U << n) - 1);
    std::uint16_t seen = 1;
    std::uint16_t frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        for (auto bits = frontier; bits; bits &= bits - 1) next |= adj[std::countr_zero(bits)];
        frontier = static_cast<std::uint16_t>(next & ~seen);
        seen |= frontier;
    }
    return seen == all;
}

}  // namespace

GraphStream enumerate_connected(int n, int jobs) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::out_of_range("exhaustive enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                                "; use an external graph6 stream for larger n");
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    const long total = 1L << pairs.size();
    constexpr long kChunk = 1L << 12;
    const long chunks = (total + kChunk - 1) / kChunk;

    const int workers = detail::resolve_jobs(jobs);
    std::vector<std::unordered_set<std::uint64_t>> found(workers);
    detail::parallel_for(chunks, workers, [&](int worker, long chunk) {
        const long end = std::min(total, (chunk + 1) * kChunk);
        for (long mask = chunk * kChunk; mask < end; ++mask) {
            detail::SmallAdj adj{};
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                if ((mask >> k) & 1) {
                    auto [i, j] = pairs[k];
                    adj[i] |= static_cast<std::uint16_t>(1U << j);
                    adj[j] |= static_cast<std::uint16_t>(1U << i);
                }
            }
            if (!small_connected(n, adj)) continue;
            found[worker].insert(detail::canonical_code(n, adj));
        }
    });

    std::unordered_set<std::uint64_t> codes;
    for (auto& f : found) codes.merge(f);

    GraphStream out;
    out.source = "exhaustive(" + std::to_string(n) + ")";
    out.exhaustive = true;
    std::vector<std::pair<std::string, Graph>> keyed;
    for (auto code : codes) {
        auto g = graph_from_canonical({n, code});
        keyed.emplace_back(to_graph6(g), std::move(g));
    }
    std::ranges::sort(keyed, {}, &std::pair<std::string, Graph>::first);
    for (auto& [key, g] : keyed) out.graphs.push_back(std::move(g));
    return out;
}

GraphStream read_graph6_stream(std::string_view text, std::string source) {
    GraphStream out;
    out.source = std::move(source);
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.graphs.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(out.source + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

GraphStream read_graph6_stream(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return read_graph6_stream(buf.str(), path.string());
}

GraphStream generated_stream(std::span<const NamedGraph> names) {
    GraphStream out;
    out.source = "generated";
    for (auto name : names) out.graphs.push_back(named_graph(name));
    return out;
}

GraphStream sample_lc(int n, double p, std::uint64_t seed, int count) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("sample_lc: p must lie strictly between 0 and 1");
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("sample_lc: bad vertex count");
    if (count < 0) throw std::invalid_argument("sample_lc: negative count");

    GraphStream out;
    out.source = "random(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",seed=" + std::to_string(seed) + ")";
    std::mt19937_64 rng(seed);
    // 53-bit uniform in [0,1); independent of the standard library's distributions.
    auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };

    while (static_cast<int>(out.graphs.size()) < count) {
        bool accepted = false;
        for (long attempt = 0; attempt < kSampleRetryBudget && !accepted; ++attempt) {
            std::vector<Edge> edges;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    if (coin()) edges.emplace_back(i, j);
            Graph g(n, edges);
            if (is_lc_member(g)) {
                out.graphs.push_back(std::move(g));
                accepted = true;
            }
        }
        if (!accepted) {
            out.budget_exhausted = true;
            break;
        }
    }
    return out;
}

}  // namespace mlines
