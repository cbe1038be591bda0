#include "gzeta/graph.hpp"

#include "gzeta/errors.hpp"
#include "gzeta/exact.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace gzeta {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), degrees_(vertex_count, 0),
      out_(vertex_count), in_(vertex_count) {
    arcs_.reserve(2 * edges_.size());
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        const auto [x, y] = edges_[j];
        if (x >= n_ || y >= n_)
            throw InputError("edge " + std::to_string(j) + " references a vertex outside 0.." +
                             std::to_string(n_ == 0 ? 0 : n_ - 1));
        arcs_.push_back({x, y, 2 * j + 1});
        arcs_.push_back({y, x, 2 * j});
    }
    for (ArcIndex e = 0; e < arcs_.size(); ++e) {
        ++degrees_[arcs_[e].origin];
        out_[arcs_[e].origin].push_back(e);
        in_[arcs_[e].terminus].push_back(e);
    }
}

IntMatrix Graph::adjacency_matrix() const {
    IntMatrix a(n_);
    for (const auto& e : arcs_) a(e.origin, e.terminus) += 1;
    return a;
}

IntMatrix Graph::degree_matrix() const {
    IntMatrix d(n_);
    for (Vertex x = 0; x < n_; ++x) d(x, x) = static_cast<unsigned long>(degrees_[x]);
    return d;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw InputError("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& [x, y] : edges_) edges.emplace_back(perm[x], perm[y]);
    return Graph(n_, std::move(edges));
}

GraphClassification classify(const Graph& g) {
    GraphClassification c;
    const std::size_t n = g.vertex_count();

    if (n > 0) {
        const auto degs = g.degrees();
        c.min_degree = *std::min_element(degs.begin(), degs.end());
        c.max_degree = *std::max_element(degs.begin(), degs.end());
        if (c.min_degree == c.max_degree) c.regular_degree = c.min_degree;
    }

    c.simple = true;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& [x, y] : g.edges()) {
        if (x == y || !seen.emplace(std::min(x, y), std::max(x, y)).second) {
            c.simple = false;
            break;
        }
    }

    // BFS 2-coloring; also yields connectivity.
    std::vector<int> color(n, -1);
    bool bipartite = true;
    std::size_t components = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        ++components;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            const Vertex x = q.front();
            q.pop();
            for (ArcIndex e : g.out_arcs(x)) {
                const Vertex y = g.arc(e).terminus;
                if (color[y] == -1) {
                    color[y] = 1 - color[x];
                    q.push(y);
                } else if (color[y] == color[x]) {
                    bipartite = false;
                }
            }
        }
    }
    c.connected = components == 1;
    c.bipartite = bipartite;
    if (bipartite) {
        std::vector<Vertex> v0, v1;
        for (Vertex x = 0; x < n; ++x) (color[x] == 0 ? v0 : v1).push_back(x);
        c.bipartition = std::make_pair(std::move(v0), std::move(v1));
    }
    return c;
}

Eligibility validate_for_modified_zeta(const Graph& g) {
    Eligibility result;
    const auto c = classify(g);
    if (!c.simple) result.violations.push_back("G must be simple (no loops or multi-edges)");
    if (!c.connected) result.violations.push_back("G must be connected");
    if (c.min_degree < 3)
        result.violations.push_back("\xCE\xB4(G) \xE2\x89\xA5 3 required (\xCE\xB4(G)=" +
                                    std::to_string(c.min_degree) + ")");
    return result;
}

void require_modified_eligible(const Graph& g) {
    auto e = validate_for_modified_zeta(g);
    if (!e.ok()) throw HypothesisError(std::move(e.violations));
}

std::size_t require_regular(const Graph& g) {
    const auto c = classify(g);
    std::vector<std::string> v;
    if (!c.simple) v.push_back("G must be simple (no loops or multi-edges)");
    if (!c.connected) v.push_back("G must be connected");
    if (!c.regular_degree) v.push_back("G must be regular");
    else if (*c.regular_degree < 3) v.push_back("regular degree k \xE2\x89\xA5 3 required");
    if (!v.empty()) throw HypothesisError(std::move(v));
    return *c.regular_degree;
}

} // namespace gzeta
