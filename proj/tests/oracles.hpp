// Independent reference implementations used only by the tests. None of these
// call into the library's algebra; they share only the Graph container.
#pragma once

#include "gzeta/exact.hpp"
#include "gzeta/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using gzeta::BigInt;
using gzeta::Graph;
using gzeta::IntMatrix;
using gzeta::IntPolynomial;
using gzeta::Rational;

// Laplace expansion along the first row. Exponential; keep dim <= 8.
inline BigInt det_cofactor(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<BigInt>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BigInt> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            sub.push_back(std::move(row));
        }
        const BigInt term = m[0][c] * det_cofactor(sub);
        total += (c % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

inline std::vector<std::vector<BigInt>> rows_of(const IntMatrix& a) {
    std::vector<std::vector<BigInt>> out(a.dim(), std::vector<BigInt>(a.dim()));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out[i][j] = a(i, j);
    return out;
}

// Faddeev-LeVerrier over Q: coefficients of det(xI - A), lowest first.
inline std::vector<BigInt> charpoly_faddeev(const IntMatrix& a) {
    const std::size_t n = a.dim();
    using Mat = std::vector<std::vector<Rational>>;
    auto mul = [n](const Mat& x, const Mat& y) {
        Mat z(n, std::vector<Rational>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (x[i][k] != 0)
                    for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    Mat am(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) am[i][j] = Rational(a(i, j));
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Mat m(n, std::vector<Rational>(n, 0));  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
        const Mat am_k = mul(am, m);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am_k[i][i];
        c[n - k] = -tr / static_cast<long>(k);
        m = am_k;
    }
    std::vector<BigInt> out;
    for (const auto& q : c) {
        if (q.get_den() != 1) throw std::logic_error("non-integral char poly coefficient");
        out.push_back(q.get_num());
    }
    return out;
}

// Simple-graph neighbourhoods.
inline std::vector<std::vector<std::size_t>> neighbours(const Graph& g) {
    std::vector<std::vector<std::size_t>> nb(g.vertex_count());
    for (const auto& [x, y] : g.edges()) {
        nb[x].push_back(y);
        nb[y].push_back(x);
    }
    return nb;
}

// Closed vertex walks v0 v1 ... v_{k-1} (v_k = v0) with v_{i+1} != v_{i-1}
// cyclically. On a simple graph these are exactly the closed reduced arc
// sequences with a marked start.
inline std::uint64_t reduced_closed_walks(const Graph& g, unsigned k) {
    const auto nb = neighbours(g);
    std::uint64_t count = 0;
    std::vector<std::size_t> walk;
    std::function<void()> extend = [&] {
        if (walk.size() == k) {
            const std::size_t last = walk.back();
            if (std::find(nb[last].begin(), nb[last].end(), walk[0]) == nb[last].end()) return;
            // step last -> v0 must not undo v_{k-2} -> last, and v0 -> v1 must not undo last -> v0
            if (k >= 2 && walk[k - 2] == walk[0]) return;
            if (k >= 2 && walk[1] == last) return;
            if (k == 1) return;
            ++count;
            return;
        }
        const std::size_t cur = walk.back();
        for (std::size_t y : nb[cur]) {
            if (walk.size() >= 2 && y == walk[walk.size() - 2]) continue;
            walk.push_back(y);
            extend();
            walk.pop_back();
        }
    };
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        walk = {v};
        extend();
    }
    return count;
}

// Arcs of a simple graph as ordered vertex pairs.
using Pair = std::pair<std::size_t, std::size_t>;

// 2-step relation straight from the definition on vertex pairs:
// e = (a,b), f = (c,d); e == f, or a connector (b,c) exists that is neither
// (b,a) nor (d,c).
inline bool two_step(const std::set<Pair>& arcs, Pair e, Pair f) {
    if (e == f) return true;
    const Pair g{e.second, f.first};
    if (!arcs.count(g)) return false;
    return g != Pair{e.second, e.first} && g != Pair{f.second, f.first};
}

inline std::uint64_t two_step_closed_sequences(const Graph& g, unsigned r) {
    std::set<Pair> arcs;
    for (const auto& [x, y] : g.edges()) {
        arcs.insert({x, y});
        arcs.insert({y, x});
    }
    const std::vector<Pair> list(arcs.begin(), arcs.end());
    std::uint64_t count = 0;
    std::vector<Pair> seq;
    std::function<void()> extend = [&] {
        if (seq.size() == r) {
            if (two_step(arcs, seq.back(), seq.front())) ++count;
            return;
        }
        for (const auto& f : list) {
            if (!two_step(arcs, seq.back(), f)) continue;
            seq.push_back(f);
            extend();
            seq.pop_back();
        }
    };
    for (const auto& e : list) {
        seq = {e};
        extend();
    }
    return count;
}

// Sum of 4^components over spanning subgraphs with n edges in which every
// component is unicyclic with an odd cycle. Components by DFS, odd cycle
// detected as a failed 2-colouring.
inline BigInt odd_unicyclic_sum(const Graph& g) {
    const std::size_t n = g.vertex_count(), m = g.edge_count();
    BigInt total = 0;
    if (n > m) return 0;
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(n), true);
    do {
        std::vector<std::vector<std::size_t>> nb(n);
        for (std::size_t i = 0; i < m; ++i)
            if (mask[i]) {
                nb[g.edges()[i].first].push_back(g.edges()[i].second);
                nb[g.edges()[i].second].push_back(g.edges()[i].first);
            }
        std::vector<int> colour(n, -1);
        bool ok = true;
        unsigned components = 0;
        for (std::size_t s = 0; s < n && ok; ++s) {
            if (colour[s] != -1) continue;
            ++components;
            std::size_t verts = 0, degsum = 0;
            bool odd = false;
            std::vector<std::size_t> stack{s};
            colour[s] = 0;
            while (!stack.empty()) {
                const std::size_t x = stack.back();
                stack.pop_back();
                ++verts;
                degsum += nb[x].size();
                for (std::size_t y : nb[x]) {
                    if (colour[y] == -1) {
                        colour[y] = 1 - colour[x];
                        stack.push_back(y);
                    } else if (colour[y] == colour[x]) {
                        odd = true;
                    }
                }
            }
            ok = degsum / 2 == verts && odd;
        }
        if (ok) {
            BigInt w;
            mpz_ui_pow_ui(w.get_mpz_t(), 4, components);
            total += w;
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return total;
}

// prod over adjacency eigenvalues (integers here) of the k-regular factors.
inline IntPolynomial ihara_core_from_spectrum(const std::map<long, unsigned>& spec, long k) {
    IntPolynomial f{1};
    for (const auto& [lambda, mult] : spec) f *= IntPolynomial{1, -lambda, k - 1}.pow(mult);
    return f;
}

// (1 + (k-2)u)^2 - lambda^2 u (1 - u) per eigenvalue.
inline IntPolynomial modified_core_from_spectrum(const std::map<long, unsigned>& spec, long k) {
    IntPolynomial p{1};
    for (const auto& [lambda, mult] : spec) {
        const IntPolynomial one_plus = IntPolynomial{1, k - 2}.pow(2);
        const IntPolynomial shift = IntPolynomial{0, lambda * lambda, -lambda * lambda};
        p *= (one_plus - shift).pow(mult);
    }
    return p;
}

// Random simple connected graph on n vertices with minimum degree >= min_deg:
// a random spanning tree, then random extra edges until the degree floor holds.
inline Graph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t min_deg, std::size_t extra = 0) {
    std::set<Pair> edges;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        const std::size_t a = order[i], b = order[pick(rng)];
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::size_t> deg(n, 0);
    for (const auto& [a, b] : edges) ++deg[a], ++deg[b];
    std::uniform_int_distribution<std::size_t> vert(0, n - 1);
    auto add_random_from = [&](std::size_t a) {
        for (int tries = 0; tries < 100; ++tries) {
            const std::size_t b = vert(rng);
            if (b == a || edges.count({std::min(a, b), std::max(a, b)})) continue;
            edges.insert({std::min(a, b), std::max(a, b)});
            ++deg[a], ++deg[b];
            return;
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        while (deg[v] < min_deg && deg[v] < n - 1) add_random_from(v);
    for (std::size_t i = 0; i < extra; ++i) add_random_from(vert(rng));
    return Graph(n, std::vector<Graph::Edge>(edges.begin(), edges.end()));
}

// Random simple graph, each pair present with probability p.
inline Graph random_simple(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Graph::Edge> edges;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (coin(rng)) edges.push_back({i, j});
    return Graph(n, edges);
}

inline Graph k5_minus_edge() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

} // namespace oracle
