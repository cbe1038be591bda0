#include "gzeta/errors.hpp"
#include "gzeta/graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace gzeta {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::size_t parse_vertex(std::string_view tok, std::size_t line) {
    if (!tok.empty() && tok.front() == '-')
        throw ParseError("negative vertex id '" + std::string(tok) + "'", line);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("vertex id '" + std::string(tok) + "' is not a non-negative integer", line);
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<std::size_t> header_n;
    std::vector<Graph::Edge> edges;
    std::vector<std::size_t> edge_lines;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto tokens = split_ws(line);
        if (tokens.size() == 2 && tokens[0] == "n") {
            if (header_n) throw ParseError("duplicate 'n' header", line_no);
            if (!edges.empty()) throw ParseError("'n' header must precede the edges", line_no);
            header_n = parse_vertex(tokens[1], line_no);
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError("expected \"x y\", got \"" + std::string(line) + "\"", line_no);
        edges.emplace_back(parse_vertex(tokens[0], line_no), parse_vertex(tokens[1], line_no));
        edge_lines.push_back(line_no);
    }

    std::size_t n = 0;
    if (header_n) {
        n = *header_n;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (edges[j].first >= n || edges[j].second >= n)
                throw ParseError("vertex id exceeds header count n=" + std::to_string(n), edge_lines[j]);
        }
    } else {
        if (edges.empty()) throw ParseError("empty edge list (no edges and no 'n' header)");
        for (const auto& [x, y] : edges) n = std::max({n, x + 1, y + 1});
        std::vector<bool> used(n, false);
        for (const auto& [x, y] : edges) used[x] = used[y] = true;
        for (std::size_t x = 0; x < n; ++x) {
            if (!used[x])
                throw ParseError("vertex ids are not dense: " + std::to_string(x) +
                                 " never appears (add an 'n <count>' header for isolated vertices)");
        }
    }
    return Graph(n, std::move(edges));
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    bool isolated = g.edge_count() == 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) isolated = isolated || g.degree(v) == 0;
    if (isolated) os << "n " << g.vertex_count() << '\n';
    for (const auto& [x, y] : g.edges()) os << x << ' ' << y << '\n';
    return os.str();
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (c < 63 || c > 126) throw ParseError("graph6: character " + std::to_string(c) + " out of range 63..126");
    }

    auto value = [&](std::size_t i) { return static_cast<std::size_t>(static_cast<unsigned char>(text[i]) - 63); };

    std::size_t n = 0;
    std::size_t pos = 0;
    if (value(0) < 63) {
        n = value(0);
        pos = 1;
    } else if (text.size() >= 2 && value(1) < 63) {
        if (text.size() < 4) throw ParseError("graph6: bad length (truncated vertex count)");
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        pos = 4;
    } else {
        if (text.size() < 8) throw ParseError("graph6: bad length (truncated vertex count)");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
        pos = 8;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = pos + (bits + 5) / 6;
    if (text.size() < expected) throw ParseError("graph6: bad length (adjacency data truncated)");
    if (text.size() > expected) throw ParseError("graph6: trailing garbage after adjacency data");

    std::vector<Graph::Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const std::size_t byte = value(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [x, y] : g.edges()) {
        if (x == y) throw InputError("graph6 cannot encode self-loops");
        if (adj[x][y]) throw InputError("graph6 cannot encode multiple edges");
        adj[x][y] = adj[y][x] = true;
    }

    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n < 258048) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }

    unsigned acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj[i][j] ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

} // namespace gzeta
