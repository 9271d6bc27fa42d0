#include <cctype>
#include <charconv>
#include <sstream>
#include <string>

#include "metric_lines/graph.hpp"

namespace mlines {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int sextet(char c) {
    const int x = static_cast<unsigned char>(c) - kBias;
    if (x < 0 || x > 63) throw ParseError(std::string("graph6: byte out of range: '") + c + "'");
    return x;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (text.empty()) throw ParseError("graph6: empty record");

    long n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = sextet(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6: vertex count too large");
        if (text.size() < 4) throw ParseError("graph6: truncated length field");
        n = (static_cast<long>(sextet(text[1])) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
        if (n < 63) throw ParseError("graph6: non-minimal length field");
        pos = 4;
    }
    if (n < 1 || n > kMaxVertices) throw ParseError("graph6: unsupported vertex count " + std::to_string(n));

    const long bits = n * (n - 1) / 2;
    const long bytes = (bits + 5) / 6;
    if (static_cast<long>(text.size() - pos) != bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                         std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (k % 6 != 0) {
        const int last = sextet(text[pos + k / 6]);
        if (last & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kBias);
    } else {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + kBias);
        out += static_cast<char>(((n >> 6) & 63) + kBias);
        out += static_cast<char>((n & 63) + kBias);
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + kBias);
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + kBias);
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto body = trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty()) continue;
        std::istringstream fields{std::string(body)};
        if (n < 0) {
            if (!(fields >> n) || n < 1) throw ParseError("edge list: bad vertex count on line " + std::to_string(lineno));
            char extra = 0;
            if (fields >> extra && extra != ';') throw ParseError("edge list: trailing text on line " + std::to_string(lineno));
            continue;
        }
        int u = 0;
        int v = 0;
        std::string rest;
        if (!(fields >> u >> v) || (fields >> rest))
            throw ParseError("edge list: expected 'u v' on line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: vertex out of range on line " + std::to_string(lineno));
        if (u == v) throw ParseError("edge list: loop on line " + std::to_string(lineno));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("edge list: missing vertex count");
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

}  // namespace mlines
