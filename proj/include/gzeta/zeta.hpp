#pragma once

#include "gzeta/exact.hpp"
#include "gzeta/graph.hpp"

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gzeta {

enum class ZetaKind { ihara, modified };
enum class ZetaForm { edge_determinant, vertex_factored };

const char* to_string(ZetaKind kind);
const char* to_string(ZetaForm form);

/// h(u) * l(u) evaluated on one square-root branch, compared with the exact core.
struct BranchSpotCheck {
    std::complex<double> u;
    std::complex<double> product;     ///< h(u) * l(u)
    std::complex<double> core_value;  ///< p(u) from the exact coefficients
    double relative_error;  ///< |hl - p| / max(|hl|, |p|, sum |c_i| |u|^i)
    bool pass;
};

/// Reciprocal of a zeta function as an exact polynomial in u, together with
/// its factorization polynomial = cofactor^exponent * core, where the
/// cofactor base is (1 - u^2) for Ihara and (1 - 2u) for the modified zeta.
struct ZetaReciprocal {
    IntPolynomial polynomial;
    ZetaKind kind;
    ZetaForm form;
    long cofactor_exponent;
    IntPolynomial core;
    std::vector<BranchSpotCheck> branch_checks;  ///< modified kind only

    /// Base of the extracted factor: 1 - u^2 or 1 - 2u.
    IntPolynomial cofactor_base() const;
    /// e.g. "(1-u^2)^5" or "(1-2u)^4".
    std::string cofactor_string() const;
};

/// det(I - u (U)+) by evaluation/interpolation; core f(u) recovered by exact
/// division by (1 - u^2)^(m-n).
ZetaReciprocal ihara_reciprocal_edge(const Graph& g, Execution exec = Execution::parallel);

/// (1 - u^2)^(m-n) * det(I - uA + u^2 (D - I)).
ZetaReciprocal ihara_reciprocal_bass(const Graph& g, Execution exec = Execution::parallel);

/// det(I - u (U^2)+) with core p(u) = polynomial / (1 - 2u)^(2(m-n)).
/// Throws HypothesisError if the graph is not eligible and TheoremViolation
/// if the division leaves a remainder.
ZetaReciprocal modified_reciprocal(const Graph& g, Execution exec = Execution::parallel);

/// Sample points used by modified_reciprocal for the h*l spot check.
std::span<const std::complex<double>> default_branch_points();

std::vector<BranchSpotCheck> branch_spot_check(const Graph& g, const IntPolynomial& core,
                                               std::span<const std::complex<double>> points,
                                               double tolerance = 1e-8);

/// Number of spanning trees (Laplacian cofactor).
BigInt complexity(const Graph& g);

/// det(D + A); std::nullopt for bipartite graphs, where it vanishes.
/// Requires a simple connected graph.
std::optional<BigInt> iota(const Graph& g);

/// Sum of 4^(components) over odd-unicyclic spanning subgraphs, by
/// enumerating all 2^m edge subsets. Requires a simple graph with m <= 20.
BigInt iota_bruteforce(const Graph& g, Execution exec = Execution::parallel);

/// t_r = trace(F^r) for r = 1..order, read off the log-derivative of the
/// reciprocal det(I - uF): sum_r t_r u^r = -u P'(u) / P(u). Needs P(0) = 1.
std::vector<BigInt> power_sums_from_reciprocal(const IntPolynomial& reciprocal, unsigned order);

struct IdentityCheck {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool pass;
};

struct InvariantReport {
    BigInt kappa;
    std::optional<BigInt> iota;
    std::optional<BigInt> iota_bruteforce;
    std::vector<IdentityCheck> identities;

    bool pass() const;
    const IdentityCheck* find(const std::string& name) const;
};

/// Identity names used in InvariantReport.
namespace identity {
inline constexpr const char* f_prime_one = "f_prime_one";
inline constexpr const char* p_half = "p_half";
inline constexpr const char* p_prime_half = "p_prime_half";
inline constexpr const char* p_second_half = "p_second_half";
inline constexpr const char* iota_enumeration = "iota_enumeration";
} // namespace identity

/// Special values of f at 1 and p at 1/2 compared against their closed forms.
/// The modified-side identities are included only for eligible graphs.
InvariantReport derivative_identities(const Graph& g, Execution exec = Execution::parallel);

/// Largest m accepted by iota_bruteforce.
inline constexpr std::size_t kIotaEnumerationMaxEdges = 20;

} // namespace gzeta
