#include "gzeta/zeta.hpp"

#include "gzeta/errors.hpp"
#include "gzeta/walk.hpp"

#include <Eigen/Dense>
#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>

namespace gzeta {

const char* to_string(ZetaKind kind) { return kind == ZetaKind::ihara ? "ihara" : "modified"; }

const char* to_string(ZetaForm form) {
    return form == ZetaForm::edge_determinant ? "edge-determinant" : "vertex-factored";
}

IntPolynomial ZetaReciprocal::cofactor_base() const {
    return kind == ZetaKind::ihara ? IntPolynomial{1, 0, -1} : IntPolynomial{1, -2};
}

std::string ZetaReciprocal::cofactor_string() const {
    return std::string(kind == ZetaKind::ihara ? "(1-u^2)^" : "(1-2u)^") + std::to_string(cofactor_exponent);
}

namespace {

long excess(const Graph& g) { return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()); }

void require_connected(const Graph& g) {
    if (!classify(g).connected) throw HypothesisError({"G must be connected"});
}

Rational power_of_two(long e) {
    BigInt p = 1;
    p <<= static_cast<unsigned long>(std::abs(e));
    return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

// polynomial / base^exponent (or times base^-exponent); throws when inexact.
IntPolynomial extract_core(const IntPolynomial& polynomial, const IntPolynomial& base, long exponent,
                           const char* what) {
    if (exponent <= 0) return polynomial * base.pow(static_cast<unsigned long>(-exponent));
    auto q = divide_if_exact(polynomial, base.pow(static_cast<unsigned long>(exponent)));
    if (!q)
        throw TheoremViolation(std::string(what) + ": reciprocal is not divisible by (" + base.to_string() + ")^" +
                               std::to_string(exponent));
    return *q;
}

// f(u) = det(I - uA + u^2 (D - I)), degree <= 2n.
IntPolynomial bass_core(const Graph& g, Execution exec) {
    const std::size_t n = g.vertex_count();
    const MatrixPencil pencil{IntMatrix::identity(n), -g.adjacency_matrix(), g.degree_matrix() - IntMatrix::identity(n)};
    return det_pencil(pencil, 2 * n, exec);
}

// A few recent results per builder. verify and the CLI request the same
// reciprocal from several checks, and each one costs a big determinant per node.
class ReciprocalCache {
public:
    template <class Build>
    ZetaReciprocal get(const Graph& g, Execution exec, Build build) {
        {
            std::lock_guard lock(mutex_);
            for (const auto& e : entries_)
                if (e.exec == exec && e.graph == g) return e.value;
        }
        ZetaReciprocal value = build();
        std::lock_guard lock(mutex_);
        if (entries_.size() == kCapacity) entries_.erase(entries_.begin());
        entries_.push_back({g, exec, value});
        return value;
    }

private:
    static constexpr std::size_t kCapacity = 4;
    struct Entry {
        Graph graph;
        Execution exec;
        ZetaReciprocal value;
    };
    std::mutex mutex_;
    std::vector<Entry> entries_;
};

ReciprocalCache edge_cache, bass_cache, modified_cache;

ZetaReciprocal build_ihara_edge(const Graph& g, Execution exec) {
    require_connected(g);
    ZetaReciprocal z{det_poly_linear(grover_support(g).to_int(), PencilSign::minus, exec),
                     ZetaKind::ihara, ZetaForm::edge_determinant, excess(g), {}, {}};
    z.core = extract_core(z.polynomial, z.cofactor_base(), z.cofactor_exponent, "ihara edge form");
    return z;
}

ZetaReciprocal build_ihara_bass(const Graph& g, Execution exec) {
    require_connected(g);
    ZetaReciprocal z{{}, ZetaKind::ihara, ZetaForm::vertex_factored, excess(g), bass_core(g, exec), {}};
    const long e = z.cofactor_exponent;
    if (e >= 0) {
        z.polynomial = z.cofactor_base().pow(static_cast<unsigned long>(e)) * z.core;
    } else {
        auto q = divide_if_exact(z.core, z.cofactor_base().pow(static_cast<unsigned long>(-e)));
        if (!q) throw TheoremViolation("ihara vertex form: f(u) is not divisible by (1 - u^2)^" + std::to_string(-e));
        z.polynomial = *q;
    }
    return z;
}

ZetaReciprocal build_modified(const Graph& g, Execution exec) {
    const SquaredSupport sq = squared_support(g);  // validates eligibility
    ZetaReciprocal z{det_poly_linear(sq.matrix.to_int(), PencilSign::minus, exec),
                     ZetaKind::modified, ZetaForm::edge_determinant, 2 * excess(g), {}, {}};
    z.core = extract_core(z.polynomial, z.cofactor_base(), z.cofactor_exponent, "modified zeta");
    z.branch_checks = branch_spot_check(g, z.core, default_branch_points());
    return z;
}

} // namespace

ZetaReciprocal ihara_reciprocal_edge(const Graph& g, Execution exec) {
    return edge_cache.get(g, exec, [&] { return build_ihara_edge(g, exec); });
}

ZetaReciprocal ihara_reciprocal_bass(const Graph& g, Execution exec) {
    return bass_cache.get(g, exec, [&] { return build_ihara_bass(g, exec); });
}

ZetaReciprocal modified_reciprocal(const Graph& g, Execution exec) {
    return modified_cache.get(g, exec, [&] { return build_modified(g, exec); });
}

std::span<const std::complex<double>> default_branch_points() {
    static const std::array<std::complex<double>, 5> points{
        std::complex<double>{0.1, 0.0}, {0.3, 0.0}, {0.7, 0.0}, {1.0, 1.0}, {-0.2, 0.0}};
    return points;
}

std::vector<BranchSpotCheck> branch_spot_check(const Graph& g, const IntPolynomial& core,
                                               std::span<const std::complex<double>> points, double tolerance) {
    const std::size_t n = g.vertex_count();
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<long>(n), static_cast<long>(n));
    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(static_cast<long>(n), static_cast<long>(n));
    for (const auto& arc : g.arcs()) a(static_cast<long>(arc.origin), static_cast<long>(arc.terminus)) += 1.0;
    for (Vertex x = 0; x < n; ++x)
        shift(static_cast<long>(x), static_cast<long>(x)) = static_cast<double>(g.degree(x)) - 2.0;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(static_cast<long>(n), static_cast<long>(n));

    std::vector<BranchSpotCheck> out;
    for (const auto u : points) {
        // One branch of sqrt(u(1-u)) shared by both factors.
        const std::complex<double> s = std::sqrt(u * (1.0 - u));
        const std::complex<double> h = (id - s * a + u * shift).determinant();
        const std::complex<double> l = (id + s * a + u * shift).determinant();
        const std::complex<double> product = h * l;
        const std::complex<double> exact = core(u);
        // Sample points can be roots (u = 0.1 for K5), so normalize by the
        // size of the terms rather than by the value.
        double terms = 0.0;
        for (std::size_t i = core.coeffs().size(); i-- > 0;)
            terms = terms * std::abs(u) + std::abs(core.coeffs()[i].get_d());
        const double scale = std::max({std::abs(product), std::abs(exact), terms, 1e-300});
        const double rel = std::abs(product - exact) / scale;
        out.push_back({u, product, exact, rel, rel <= tolerance});
    }
    return out;
}

BigInt complexity(const Graph& g) {
    if (g.vertex_count() <= 1) return 1;
    const IntMatrix laplacian = g.degree_matrix() - g.adjacency_matrix();
    return det_bareiss(laplacian.minor(0));
}

std::optional<BigInt> iota(const Graph& g) {
    const auto c = classify(g);
    std::vector<std::string> v;
    if (!c.simple) v.push_back("G must be simple (no loops or multi-edges)");
    if (!c.connected) v.push_back("G must be connected");
    if (!v.empty()) throw HypothesisError(std::move(v));
    if (c.bipartite) return std::nullopt;
    return det_bareiss(g.degree_matrix() + g.adjacency_matrix());
}

namespace {

// 4^components if the edge subset `mask` is an odd-unicyclic factor, else 0.
std::uint64_t odd_unicyclic_weight(const Graph& g, std::uint32_t mask) {
    const std::size_t n = g.vertex_count();
    if (static_cast<std::size_t>(std::popcount(mask)) != n) return 0;

    // Union-find with parity to the root; odd[r] marks an odd cycle in r's tree.
    std::array<std::uint8_t, 64> parent{}, parity{}, odd{}, vertices{}, edges{};
    for (std::size_t x = 0; x < n; ++x) {
        parent[x] = static_cast<std::uint8_t>(x);
        vertices[x] = 1;
    }
    auto find = [&](std::size_t x, std::uint8_t& par) {
        par = 0;
        while (parent[x] != x) {
            par ^= parity[x];
            x = parent[x];
        }
        return x;
    };

    const auto edge_list = g.edges();
    for (std::size_t j = 0; j < edge_list.size(); ++j) {
        if (!((mask >> j) & 1U)) continue;
        std::uint8_t px = 0, py = 0;
        const std::size_t rx = find(edge_list[j].first, px);
        const std::size_t ry = find(edge_list[j].second, py);
        if (rx == ry) {
            ++edges[rx];
            if (px == py) odd[rx] = 1;
        } else {
            parent[ry] = static_cast<std::uint8_t>(rx);
            parity[ry] = static_cast<std::uint8_t>(px ^ py ^ 1U);
            vertices[rx] = static_cast<std::uint8_t>(vertices[rx] + vertices[ry]);
            edges[rx] = static_cast<std::uint8_t>(edges[rx] + edges[ry] + 1);
            odd[rx] |= odd[ry];
        }
    }

    unsigned components = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (parent[x] != x) continue;
        if (edges[x] != vertices[x] || !odd[x]) return 0;
        ++components;
    }
    return std::uint64_t{1} << (2 * components);
}

} // namespace

BigInt iota_bruteforce(const Graph& g, Execution exec) {
    if (!classify(g).simple) throw HypothesisError({"G must be simple (no loops or multi-edges)"});
    if (g.edge_count() > kIotaEnumerationMaxEdges)
        throw InputError("odd-unicyclic enumeration is capped at m <= 20 (m=" + std::to_string(g.edge_count()) + ")");
    if (g.vertex_count() == 0) return 0;

    const long subsets = 1L << g.edge_count();
    std::uint64_t total = 0;
    if (exec == Execution::serial) {
        for (long mask = 0; mask < subsets; ++mask) total += odd_unicyclic_weight(g, static_cast<std::uint32_t>(mask));
    } else {
#pragma omp parallel for schedule(static) reduction(+ : total)
        for (long mask = 0; mask < subsets; ++mask) total += odd_unicyclic_weight(g, static_cast<std::uint32_t>(mask));
    }
    BigInt result;
    mpz_import(result.get_mpz_t(), 1, 1, sizeof(total), 0, 0, &total);
    return result;
}

std::vector<BigInt> power_sums_from_reciprocal(const IntPolynomial& p, unsigned order) {
    if (p.coeff(0) != 1) throw std::invalid_argument("power sums need a reciprocal with constant term 1");
    // 1/P as a power series; integral because P(0) = 1.
    std::vector<BigInt> inverse(order, 0);
    if (order > 0) inverse[0] = 1;
    for (unsigned k = 1; k < order; ++k) {
        BigInt acc = 0;
        for (unsigned j = 1; j <= k; ++j) acc += p.coeff(j) * inverse[k - j];
        inverse[k] = -acc;
    }
    const IntPolynomial dp = poly_derivative(p);
    std::vector<BigInt> sums(order);
    for (unsigned r = 1; r <= order; ++r) {
        BigInt acc = 0;  // [u^(r-1)] P'/P
        for (unsigned j = 0; j < r; ++j) acc += dp.coeff(j) * inverse[r - 1 - j];
        sums[r - 1] = -acc;
    }
    return sums;
}

bool InvariantReport::pass() const {
    return std::all_of(identities.begin(), identities.end(), [](const IdentityCheck& c) { return c.pass; });
}

const IdentityCheck* InvariantReport::find(const std::string& name) const {
    for (const auto& c : identities)
        if (c.name == name) return &c;
    return nullptr;
}

InvariantReport derivative_identities(const Graph& g, Execution exec) {
    require_connected(g);
    InvariantReport report;
    report.kappa = complexity(g);
    const long mn = excess(g);
    const long n = static_cast<long>(g.vertex_count());
    const auto cls = classify(g);

    auto add = [&](const char* name, Rational lhs, Rational rhs) {
        lhs.canonicalize();
        rhs.canonicalize();
        const bool ok = lhs == rhs;
        report.identities.push_back({name, std::move(lhs), std::move(rhs), ok});
    };

    const IntPolynomial f = bass_core(g, exec);
    add(identity::f_prime_one, poly_eval_rational(poly_derivative(f), 1), Rational(2 * mn) * Rational(report.kappa));

    if (cls.simple) {
        report.iota = iota(g);
        if (report.iota && g.edge_count() <= kIotaEnumerationMaxEdges) {
            report.iota_bruteforce = iota_bruteforce(g, exec);
            add(identity::iota_enumeration, Rational(*report.iota), Rational(*report.iota_bruteforce));
        }
    }

    if (validate_for_modified_zeta(g).ok()) {
        const IntPolynomial p = modified_reciprocal(g, exec).core;
        const Rational half(1, 2);
        add(identity::p_half, poly_eval_rational(p, half), 0);
        const Rational p1 = poly_eval_rational(poly_derivative(p), half);
        const Rational kappa(report.kappa);
        if (!cls.bipartite) {
            add(identity::p_prime_half, p1, Rational(mn) * kappa * Rational(*report.iota) / power_of_two(2 * n - 2));
        } else {
            add(identity::p_prime_half, p1, 0);
            add(identity::p_second_half, poly_eval_rational(poly_derivative(p, 2), half),
                Rational(mn * mn) * kappa * kappa / power_of_two(2 * n - 5));
        }
    }
    return report;
}

} // namespace gzeta
