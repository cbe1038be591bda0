#pragma once

#include "gzeta/exact.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/zeta.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace gzeta {

/// Tolerance for on-circle and trivial-pole predicates.
inline constexpr double kGeometryTolerance = 1e-7;

struct Eigenvalue {
    double value;
    unsigned multiplicity;
};

/// Real spectrum of the symmetric adjacency matrix, largest first.
struct Spectrum {
    std::vector<Eigenvalue> eigenvalues;
    double tolerance;  ///< clustering tolerance
    /// Cluster multiplicities equal the exact multiplicities from the
    /// square-free decomposition of char_poly(A).
    bool exact_multiplicities_agree;
};

/// Numeric eigenvalues (self-adjoint solver), clustered at `tolerance`, and
/// cross-checked against the exact characteristic polynomial.
Spectrum adjacency_spectrum(const Graph& g, double tolerance = 1e-6);

struct LiftedEigenvalue {
    std::complex<double> value;
    unsigned multiplicity;
};

/// Spectrum of (U^2)+ for a k-regular graph from the adjacency spectrum:
/// a conjugate pair per adjacency eigenvalue plus 2(m-n) copies of 2.
std::vector<LiftedEigenvalue> lifted_spectrum(const Graph& g);

struct CharpolyCheck {
    IntPolynomial direct;    ///< characteristic polynomial of the walk support
    IntPolynomial factored;  ///< the closed-form side built from A and D
    bool pass() const { return direct == factored; }
};

/// char_poly((U^2)+) against (x-2)^(2(m-n)) det(x^2 I - x(A^2 - (2k-4)I) + A^2 + (k-2)^2 I).
CharpolyCheck lifted_charpoly_check(const Graph& g, Execution exec = Execution::parallel);

/// char_poly((U)+) against (x^2-1)^(m-n) det((x^2-1)I - xA + D). Requires min degree >= 2.
CharpolyCheck uplus_charpoly_check(const Graph& g, Execution exec = Execution::parallel);

struct PoleAnnotation {
    bool trivial = false;
    bool real = false;  ///< a real pole that is not trivial
    bool on_ihara_circle = false;
    bool on_modified_circle = false;
};

struct Pole {
    ComplexRoot root;
    PoleAnnotation annotation;
};

struct Circle {
    double center;  ///< on the real axis
    double radius;
};

struct PoleSet {
    ZetaKind kind;
    std::vector<Pole> poles;
    std::optional<std::size_t> regular_degree;
    std::optional<Circle> circle;  ///< the critical circle for `kind` when regular

    unsigned total_multiplicity() const;
    /// Multiplicity of the pole within `tol` of `u`, 0 if none.
    unsigned multiplicity_near(std::complex<double> u, double tol = kGeometryTolerance) const;
};

/// Ihara: |u|^2 = 1/(k-1). Modified: center -1/(k^2-2k), radius (k-1)/(k^2-2k).
Circle critical_circle(ZetaKind kind, std::size_t k);

/// Trivial poles for a k-regular graph: Ihara u = +-1, +-1/(k-1) (those
/// present); modified u = 1/(k^2-2k+2), 1/2.
std::vector<double> trivial_pole_values(ZetaKind kind, std::size_t k);

/// Roots of the reciprocal polynomial; annotated when `regular_degree` is given.
PoleSet poles(const ZetaReciprocal& z, std::optional<std::size_t> regular_degree = std::nullopt,
              double tolerance = kGeometryTolerance);

struct RiemannReport {
    bool ramanujan;
    /// Every non-trivial pole lies on the critical circle.
    bool rh_analogue_holds;
    /// Every non-trivial real pole lies in the real band for `kind`.
    bool real_band_holds;
    std::vector<Pole> offending;
};

struct PoleGeometry {
    PoleSet poles;
    RiemannReport report;
};

/// Ramanujan iff every |lambda| != k satisfies |lambda| <= 2 sqrt(k-1).
bool is_ramanujan(const Spectrum& s, std::size_t k, double tolerance = kGeometryTolerance);

PoleGeometry pole_geometry(const Graph& g, ZetaKind kind, Execution exec = Execution::parallel,
                           double tolerance = kGeometryTolerance);

struct RadiusReport {
    Rational lower_bound;  ///< 1/((Delta-1)^2 + 1)
    Rational upper_bound;  ///< 1/((delta-1)^2 + 1)
    double rho;
    double alpha;
    /// rho as an exact rational when it is one (regular graphs).
    std::optional<Rational> rho_exact;
    unsigned multiplicity;
    unsigned expected_multiplicity;  ///< 2 if bipartite else 1
    std::size_t min_row_sum;
    std::size_t max_row_sum;
    bool bounds_hold;
    bool nearest_to_origin;
    bool row_sums_bracket;

    bool pass() const {
        return bounds_hold && nearest_to_origin && row_sums_bracket && multiplicity == expected_multiplicity;
    }
};

RadiusReport radius_of_convergence_check(const Graph& g, Execution exec = Execution::parallel);

} // namespace gzeta
