#include "gzeta/spectra.hpp"

#include "gzeta/errors.hpp"
#include "gzeta/walk.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gzeta {

Spectrum adjacency_spectrum(const Graph& g, double tolerance) {
    const long n = static_cast<long>(g.vertex_count());
    Spectrum s{{}, tolerance, true};
    if (n == 0) return s;

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& arc : g.arcs()) a(static_cast<long>(arc.origin), static_cast<long>(arc.terminus)) += 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(values.begin(), values.end(), std::greater<>());

    for (double v : values) {
        if (!s.eigenvalues.empty() && std::abs(s.eigenvalues.back().value - v) <= tolerance) {
            auto& last = s.eigenvalues.back();
            // Running mean keeps the cluster representative centered.
            last.value = (last.value * last.multiplicity + v) / (last.multiplicity + 1);
            ++last.multiplicity;
        } else {
            s.eigenvalues.push_back({v, 1});
        }
    }

    const auto exact = poly_roots(char_poly(g.adjacency_matrix()));
    for (const auto& ev : s.eigenvalues) {
        unsigned mult = 0;
        for (const auto& r : exact)
            if (std::abs(r.real - ev.value) <= tolerance && std::abs(r.imag) <= tolerance) mult += r.multiplicity;
        if (mult != ev.multiplicity) s.exact_multiplicities_agree = false;
    }
    return s;
}

std::vector<LiftedEigenvalue> lifted_spectrum(const Graph& g) {
    const auto k = static_cast<double>(require_regular(g));
    std::vector<LiftedEigenvalue> out;
    for (const auto& [lambda, mult] : adjacency_spectrum(g).eigenvalues) {
        const double center = (lambda * lambda - 2.0 * k + 4.0) / 2.0;
        const std::complex<double> root = std::sqrt(std::complex<double>(k - 1.0 - lambda * lambda / 4.0, 0.0));
        const std::complex<double> offset = std::complex<double>(0.0, 1.0) * lambda * root;
        out.push_back({center + offset, mult});
        out.push_back({center - offset, mult});
    }
    const long remaining = 2 * (static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()));
    if (remaining > 0) out.push_back({2.0, static_cast<unsigned>(remaining)});
    return out;
}

CharpolyCheck lifted_charpoly_check(const Graph& g, Execution exec) {
    const long k = static_cast<long>(require_regular(g));
    const std::size_t n = g.vertex_count();
    const IntMatrix id = IntMatrix::identity(n);
    const IntMatrix a = g.adjacency_matrix();
    const IntMatrix a2 = a * a;

    const MatrixPencil pencil{a2 + id * BigInt((k - 2) * (k - 2)), -(a2 - id * BigInt(2 * k - 4)), id};
    const long remaining = 2 * (static_cast<long>(g.edge_count()) - static_cast<long>(n));
    CharpolyCheck check;
    check.factored = IntPolynomial::binomial_power(-2, 1, static_cast<unsigned long>(remaining)) *
                     det_pencil(pencil, 2 * n, exec);
    check.direct = char_poly(squared_support(g).matrix.to_int(), exec);
    return check;
}

CharpolyCheck uplus_charpoly_check(const Graph& g, Execution exec) {
    const auto c = classify(g);
    std::vector<std::string> v;
    if (!c.connected) v.push_back("G must be connected");
    if (c.min_degree < 2) v.push_back("\xCE\xB4(G) \xE2\x89\xA5 2 required");
    if (!v.empty()) throw HypothesisError(std::move(v));

    const std::size_t n = g.vertex_count();
    const IntMatrix id = IntMatrix::identity(n);
    const MatrixPencil pencil{g.degree_matrix() - id, -g.adjacency_matrix(), id};
    const long excess = static_cast<long>(g.edge_count()) - static_cast<long>(n);

    CharpolyCheck check;
    check.factored = IntPolynomial{-1, 0, 1}.pow(static_cast<unsigned long>(excess)) * det_pencil(pencil, 2 * n, exec);
    check.direct = char_poly(grover_support(g).to_int(), exec);
    return check;
}

unsigned PoleSet::total_multiplicity() const {
    unsigned t = 0;
    for (const auto& p : poles) t += p.root.multiplicity;
    return t;
}

unsigned PoleSet::multiplicity_near(std::complex<double> u, double tol) const {
    unsigned t = 0;
    for (const auto& p : poles)
        if (std::abs(p.root.value() - u) <= tol) t += p.root.multiplicity;
    return t;
}

Circle critical_circle(ZetaKind kind, std::size_t k) {
    const double kd = static_cast<double>(k);
    if (kind == ZetaKind::ihara) return {0.0, 1.0 / std::sqrt(kd - 1.0)};
    const double denom = kd * kd - 2.0 * kd;
    return {-1.0 / denom, (kd - 1.0) / denom};
}

std::vector<double> trivial_pole_values(ZetaKind kind, std::size_t k) {
    const double kd = static_cast<double>(k);
    if (kind == ZetaKind::ihara) return {1.0, -1.0, 1.0 / (kd - 1.0), -1.0 / (kd - 1.0)};
    return {1.0 / (kd * kd - 2.0 * kd + 2.0), 0.5};
}

namespace {

double circle_residue(std::complex<double> u, const Circle& c) {
    const double dx = u.real() - c.center;
    return std::abs(dx * dx + u.imag() * u.imag() - c.radius * c.radius);
}

} // namespace

PoleSet poles(const ZetaReciprocal& z, std::optional<std::size_t> regular_degree, double tolerance) {
    PoleSet set{z.kind, {}, regular_degree, std::nullopt};
    if (regular_degree) set.circle = critical_circle(z.kind, *regular_degree);
    if (z.polynomial.degree() < 1) return set;

    for (const auto& root : poly_roots(z.polynomial)) {
        Pole pole{root, {}};
        const auto u = root.value();
        const bool is_real = root.imag == 0.0;
        if (regular_degree) {
            const std::size_t k = *regular_degree;
            for (double t : trivial_pole_values(z.kind, k))
                if (is_real && std::abs(root.real - t) <= tolerance * std::max(1.0, std::abs(t))) pole.annotation.trivial = true;
            pole.annotation.on_ihara_circle = circle_residue(u, critical_circle(ZetaKind::ihara, k)) <= tolerance;
            pole.annotation.on_modified_circle = circle_residue(u, critical_circle(ZetaKind::modified, k)) <= tolerance;
        }
        pole.annotation.real = is_real && !pole.annotation.trivial;
        set.poles.push_back(pole);
    }
    return set;
}

bool is_ramanujan(const Spectrum& s, std::size_t k, double tolerance) {
    const double kd = static_cast<double>(k);
    const double bound = 2.0 * std::sqrt(kd - 1.0);
    for (const auto& ev : s.eigenvalues) {
        if (std::abs(std::abs(ev.value) - kd) <= tolerance) continue;
        if (std::abs(ev.value) > bound + tolerance) return false;
    }
    return true;
}

PoleGeometry pole_geometry(const Graph& g, ZetaKind kind, Execution exec, double tolerance) {
    const std::size_t k = require_regular(g);
    const double kd = static_cast<double>(k);
    const ZetaReciprocal z = kind == ZetaKind::ihara ? ihara_reciprocal_edge(g, exec) : modified_reciprocal(g, exec);

    PoleGeometry geo{poles(z, k, tolerance), {}};
    geo.report.ramanujan = is_ramanujan(adjacency_spectrum(g), k, tolerance);
    geo.report.rh_analogue_holds = true;
    geo.report.real_band_holds = true;

    for (const auto& pole : geo.poles.poles) {
        const auto& a = pole.annotation;
        if (a.trivial) continue;
        const bool on_circle = kind == ZetaKind::ihara ? a.on_ihara_circle : a.on_modified_circle;
        if (!on_circle) {
            geo.report.rh_analogue_holds = false;
            geo.report.offending.push_back(pole);
        }
        if (a.real) {
            const double u = pole.root.real;
            bool in_band = false;
            if (kind == ZetaKind::ihara) {
                in_band = std::abs(u) >= 1.0 / (kd - 1.0) - tolerance && std::abs(u) <= 1.0 + tolerance;
            } else {
                in_band = (u >= 1.0 / (kd * kd - 2.0 * kd + 2.0) - tolerance && u <= 0.5 + tolerance) ||
                          std::abs(u + 1.0 / (kd - 2.0)) <= tolerance;
            }
            if (!in_band) geo.report.real_band_holds = false;
        }
    }
    return geo;
}

RadiusReport radius_of_convergence_check(const Graph& g, Execution exec) {
    require_modified_eligible(g);
    const auto cls = classify(g);
    const ZetaReciprocal z = modified_reciprocal(g, exec);
    const auto roots = poly_roots(z.polynomial);

    RadiusReport r{};
    auto reciprocal_bound = [](std::size_t d) {
        const long v = static_cast<long>(d) - 1;
        return Rational(1, static_cast<unsigned long>(v * v + 1));
    };
    r.lower_bound = reciprocal_bound(cls.max_degree);
    r.upper_bound = reciprocal_bound(cls.min_degree);
    r.expected_multiplicity = cls.bipartite ? 2 : 1;

    const ComplexRoot* nearest = nullptr;
    for (const auto& root : roots)
        if (root.imag == 0.0 && root.real > 0.0 && (!nearest || root.real < nearest->real)) nearest = &root;
    if (!nearest) throw TheoremViolation("modified reciprocal has no positive real root");
    r.rho = nearest->real;
    r.alpha = 1.0 / r.rho;
    r.multiplicity = nearest->multiplicity;

    r.nearest_to_origin = true;
    for (const auto& root : roots)
        if (std::abs(root.value()) < r.rho * (1.0 - 1e-9)) r.nearest_to_origin = false;

    if (cls.regular_degree) {
        // Regular graphs: alpha = (k-1)^2 + 1 is a row sum, so rho is rational.
        const Rational candidate = reciprocal_bound(*cls.regular_degree);
        const unsigned mult = rational_root_multiplicity(z.polynomial, candidate);
        if (mult > 0 && std::abs(candidate.get_d() - r.rho) <= 1e-9) {
            r.rho_exact = candidate;
            r.multiplicity = mult;
        }
    }

    if (r.rho_exact) {
        r.bounds_hold = r.lower_bound <= *r.rho_exact && *r.rho_exact <= r.upper_bound;
    } else {
        r.bounds_hold = r.lower_bound.get_d() - 1e-12 <= r.rho && r.rho <= r.upper_bound.get_d() + 1e-12;
    }

    const BinaryMatrix sq = squared_support(g).matrix;
    r.min_row_sum = std::numeric_limits<std::size_t>::max();
    r.max_row_sum = 0;
    for (std::size_t i = 0; i < sq.dim(); ++i) {
        r.min_row_sum = std::min(r.min_row_sum, sq.row_sum(i));
        r.max_row_sum = std::max(r.max_row_sum, sq.row_sum(i));
    }
    r.row_sums_bracket = static_cast<double>(r.min_row_sum) - 1e-9 <= r.alpha &&
                         r.alpha <= static_cast<double>(r.max_row_sum) + 1e-9;
    return r;
}

} // namespace gzeta
