#include "gzeta/errors.hpp"
#include "gzeta/graph.hpp"

#include <cctype>
#include <charconv>

namespace gzeta {

namespace {

void expect_params(std::string_view name, std::span<const long> params, std::size_t count) {
    if (params.size() != count)
        throw InputError(std::string(name) + " expects " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(params.size()));
}

Graph complete(long n) {
    if (n < 2) throw InputError("complete(n) requires n >= 2");
    std::vector<Graph::Edge> edges;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) edges.emplace_back(i, j);
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph complete_bipartite(long a, long b) {
    if (a < 1 || b < 1) throw InputError("complete_bipartite(a,b) requires a,b >= 1");
    std::vector<Graph::Edge> edges;
    for (long i = 0; i < a; ++i)
        for (long j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(static_cast<std::size_t>(a + b), std::move(edges));
}

Graph cycle(long n) {
    if (n < 3) throw InputError("cycle(n) requires n >= 3");
    std::vector<Graph::Edge> edges;
    for (long i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen() {
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (std::size_t i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
    for (std::size_t i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    return Graph(10, std::move(edges));
}

// 3-cube: vertices are 3-bit words, edges join words at Hamming distance 1.
Graph cube() {
    std::vector<Graph::Edge> edges;
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t bit = 1; bit < 8; bit <<= 1)
            if (!(x & bit)) edges.emplace_back(x, x | bit);
    return Graph(8, std::move(edges));
}

std::vector<long> parse_params(std::string_view s, std::string_view spec) {
    std::vector<long> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const auto tok = s.substr(0, comma);
        long v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw InputError("bad parameter '" + std::string(tok) + "' in '" + std::string(spec) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Graph generate_named(std::string_view name, std::span<const long> params) {
    if (name == "complete") {
        expect_params(name, params, 1);
        return complete(params[0]);
    }
    if (name == "complete_bipartite") {
        expect_params(name, params, 2);
        return complete_bipartite(params[0], params[1]);
    }
    if (name == "cycle") {
        expect_params(name, params, 1);
        return cycle(params[0]);
    }
    if (name == "petersen") {
        expect_params(name, params, 0);
        return petersen();
    }
    if (name == "cube") {
        expect_params(name, params, 0);
        return cube();
    }
    throw InputError("unknown graph name '" + std::string(name) + "'");
}

Graph generate_from_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view name = spec.substr(0, colon);
    const std::vector<long> params =
        colon == std::string_view::npos ? std::vector<long>{} : parse_params(spec.substr(colon + 1), spec);

    if (colon == std::string_view::npos && name.size() >= 2) {
        const auto digits = name.substr(1);
        if ((name[0] == 'k' || name[0] == 'K') && all_digits(digits)) {
            if (digits.size() == 2) {
                const long both[] = {digits[0] - '0', digits[1] - '0'};
                return generate_named("complete_bipartite", both);
            }
            const long one[] = {std::stol(std::string(digits))};
            return generate_named("complete", one);
        }
        if ((name[0] == 'c' || name[0] == 'C') && all_digits(digits)) {
            const long one[] = {std::stol(std::string(digits))};
            return generate_named("cycle", one);
        }
    }
    return generate_named(name, params);
}

} // namespace gzeta
