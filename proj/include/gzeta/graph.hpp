#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gzeta {

class IntMatrix;

using Vertex = std::size_t;
using ArcIndex = std::size_t;

/// One orientation of an unoriented edge. Edge j owns arcs 2j (as listed)
/// and 2j+1 (reversed), so `inverse` is always `index ^ 1`.
struct OrientedEdge {
    Vertex origin;
    Vertex terminus;
    ArcIndex inverse;

    bool operator==(const OrientedEdge&) const = default;
};

/// Finite undirected multigraph with dense 0-based vertex ids.
/// Self-loops contribute two distinct arcs and degree 2 at their vertex.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const OrientedEdge> arcs() const noexcept { return arcs_; }
    const OrientedEdge& arc(ArcIndex e) const { return arcs_.at(e); }
    ArcIndex inverse(ArcIndex e) const noexcept { return e ^ 1U; }

    std::size_t degree(Vertex x) const { return degrees_.at(x); }
    std::span<const std::size_t> degrees() const noexcept { return degrees_; }

    /// Arcs with origin x, in arc-index order.
    std::span<const ArcIndex> out_arcs(Vertex x) const { return out_.at(x); }
    /// Arcs with terminus x, in arc-index order.
    std::span<const ArcIndex> in_arcs(Vertex x) const { return in_.at(x); }

    /// a(x,y) = number of arcs from x to y (a self-loop gives 2 on the diagonal).
    IntMatrix adjacency_matrix() const;
    IntMatrix degree_matrix() const;

    /// Graph with vertex x renamed to perm[x]; edge order is kept.
    Graph relabeled(std::span<const Vertex> perm) const;

    bool operator==(const Graph& other) const = default;

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<OrientedEdge> arcs_;
    std::vector<std::size_t> degrees_;
    std::vector<std::vector<ArcIndex>> out_;
    std::vector<std::vector<ArcIndex>> in_;
};

struct GraphClassification {
    bool connected = false;
    bool bipartite = false;
    /// (V0, V1) when bipartite; V0 holds the vertices colored like the
    /// smallest vertex of each component.
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition;
    std::optional<std::size_t> regular_degree;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    bool simple = false;
};

GraphClassification classify(const Graph& g);

/// Hypotheses shared by every modified-zeta operation: simple, connected,
/// minimum degree at least 3. Violations are data, not errors.
struct Eligibility {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

Eligibility validate_for_modified_zeta(const Graph& g);

/// Throws HypothesisError listing every violation if `g` is not eligible.
void require_modified_eligible(const Graph& g);

/// Throws HypothesisError unless g is simple, connected and k-regular with k >= 3.
std::size_t require_regular(const Graph& g);

// Text formats.

/// Lines "x y"; '#' starts a comment; optional header "n <count>".
Graph parse_edge_list(std::string_view text);
/// One edge per line, preceded by an "n <count>" header only when some
/// vertex is isolated.
std::string emit_edge_list(const Graph& g);

Graph parse_graph6(std::string_view text);
/// Throws InputError for graphs with loops or parallel edges.
std::string emit_graph6(const Graph& g);

// Generators.

/// name in {complete, complete_bipartite, cycle, petersen, cube}.
Graph generate_named(std::string_view name, std::span<const long> params = {});

/// Parses "name[:p1,p2,...]" and a few aliases: "k4" (complete), "k33"
/// (complete bipartite; exactly two digits), "c5" (cycle).
Graph generate_from_spec(std::string_view spec);

} // namespace gzeta
