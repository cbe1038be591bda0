#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gzeta {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Selects the OpenMP kernel or the serial reference loop for operations that
/// evaluate many independent nodes. Both produce bit-identical results.
enum class Execution { serial, parallel };

// ---------------------------------------------------------------------------
// Polynomials

/// Univariate polynomial with big-integer coefficients, lowest degree first.
/// Canonical: no trailing zero coefficient; the zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const BigInt& c);
    /// (c0 + c1 u)^power
    static IntPolynomial binomial_power(long c0, long c1, unsigned long power);

    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of u^i, zero past the degree.
    BigInt coeff(std::size_t i) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    BigInt operator()(const BigInt& x) const;
    Rational operator()(const Rational& x) const;
    std::complex<double> operator()(std::complex<double> x) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const BigInt& rhs);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& b) { return a *= b; }
    IntPolynomial operator-() const;

    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

    IntPolynomial pow(unsigned long e) const;
    /// Gcd of the coefficients (non-negative); zero for the zero polynomial.
    BigInt content() const;
    /// Divided by content, sign chosen so the leading coefficient is positive.
    IntPolynomial primitive_part() const;

    /// e.g. "1 - 3u + 2u^2"; `var` names the indeterminate.
    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Polynomial over the rationals; used for division results and gcd work.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);
    explicit RationalPolynomial(const IntPolynomial& p);

    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;

    RationalPolynomial derivative() const;
    RationalPolynomial monic() const;
    RationalPolynomial operator-(const RationalPolynomial& rhs) const;
    RationalPolynomial operator*(const RationalPolynomial& rhs) const;
    bool operator==(const RationalPolynomial& other) const { return coeffs_ == other.coeffs_; }

    /// The same polynomial if every coefficient is an integer.
    std::optional<IntPolynomial> to_integer() const;
    /// Denominators cleared, then the primitive part.
    IntPolynomial primitive_integer() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct PolynomialDivision {
    RationalPolynomial quotient;
    RationalPolynomial remainder;
};

/// num = den * quotient + remainder with deg(remainder) < deg(den), over Q.
/// Throws std::domain_error if den is zero.
PolynomialDivision poly_divide(const RationalPolynomial& num, const RationalPolynomial& den);
PolynomialDivision poly_exact_divide(const IntPolynomial& num, const IntPolynomial& den);

/// Quotient num/den when the remainder is zero and the quotient is integral;
/// std::nullopt otherwise.
std::optional<IntPolynomial> divide_if_exact(const IntPolynomial& num, const IntPolynomial& den);

IntPolynomial poly_derivative(const IntPolynomial& p, unsigned order = 1);
Rational poly_eval_rational(const IntPolynomial& p, const Rational& x);

/// Monic gcd over Q.
RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b);

struct SquareFreeFactor {
    IntPolynomial factor;   ///< primitive, square-free, degree >= 1
    unsigned multiplicity;
};

/// Yun's decomposition: p = c * prod factor_i^i with pairwise coprime factors.
/// Constants are dropped, so the factors describe the roots of p exactly.
std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p);

/// Exact multiplicity of the rational root x of p (0 if not a root).
unsigned rational_root_multiplicity(const IntPolynomial& p, const Rational& x);

struct ComplexRoot {
    double real;
    double imag;
    unsigned multiplicity;

    std::complex<double> value() const { return {real, imag}; }
};

/// All complex roots with exact multiplicities (from the square-free
/// decomposition) and values polished to about 1e-12 relative.
/// Sorted by (real, imag). Requires degree >= 1.
std::vector<ComplexRoot> poly_roots(const IntPolynomial& p);

// ---------------------------------------------------------------------------
// Matrices

/// Dense square matrix of big integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator*(const BigInt& s) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transpose() const;
    BigInt trace() const;
    IntMatrix pow(unsigned e) const;
    /// Matrix with row and column `k` removed.
    IntMatrix minor(std::size_t k) const;

private:
    std::size_t dim_ = 0;
    std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The determinant of the 0x0 matrix is 1.
BigInt det_bareiss(IntMatrix m);

/// Matrix polynomial sum_j u^j coeffs[j]; all coefficient matrices share one
/// dimension.
using MatrixPencil = std::vector<IntMatrix>;

/// det of the pencil as a polynomial in u, by exact evaluation at the
/// integer nodes 0..degree_bound and Lagrange interpolation over Q.
/// `degree_bound` must be at least the true degree. Throws std::logic_error
/// if an interpolated coefficient is not an integer.
IntPolynomial det_pencil(std::span<const IntMatrix> coeffs, std::size_t degree_bound,
                         Execution exec = Execution::parallel);

enum class PencilSign { minus, plus };

/// det(I - u F) (or det(I + u F)) as a polynomial of degree <= dim.
IntPolynomial det_poly_linear(const IntMatrix& f, PencilSign sign = PencilSign::minus,
                              Execution exec = Execution::parallel);

/// Monic characteristic polynomial det(x I - m).
IntPolynomial char_poly(const IntMatrix& m, Execution exec = Execution::parallel);

namespace kernels {

/// det(sum_j x^j coeffs[j]) at x = 0..nodes-1. The serial version is the
/// reference the parallel one is tested against.
std::vector<BigInt> evaluate_pencil_serial(std::span<const IntMatrix> coeffs, std::size_t nodes);
std::vector<BigInt> evaluate_pencil_parallel(std::span<const IntMatrix> coeffs, std::size_t nodes);

/// Coefficients of the unique polynomial of degree < values.size() through
/// (i, values[i]).
RationalPolynomial interpolate_integer_nodes(std::span<const BigInt> values);

} // namespace kernels

} // namespace gzeta
