#include "gzeta/exact.hpp"

#include <omp.h>

#include <stdexcept>
#include <utility>

namespace gzeta {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != dim_) throw std::invalid_argument("IntMatrix rows must all have length dim");
        std::size_t j = 0;
        for (long v : row) (*this)(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    IntMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += rhs.data_[k];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    IntMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= rhs.data_[k];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    IntMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) r(i, j) += a * rhs(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator*(const BigInt& s) const {
    IntMatrix r = *this;
    for (auto& v : r.data_) v *= s;
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r = *this;
    for (auto& v : r.data_) v = -v;
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

IntMatrix IntMatrix::pow(unsigned e) const {
    IntMatrix result = identity(dim_);
    IntMatrix base = *this;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

IntMatrix IntMatrix::minor(std::size_t k) const {
    if (k >= dim_) throw std::out_of_range("IntMatrix::minor index");
    IntMatrix r(dim_ - 1);
    for (std::size_t i = 0, ri = 0; i < dim_; ++i) {
        if (i == k) continue;
        for (std::size_t j = 0, rj = 0; j < dim_; ++j) {
            if (j == k) continue;
            r(ri, rj++) = (*this)(i, j);
        }
        ++ri;
    }
    return r;
}

BigInt det_bareiss(IntMatrix m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        mpz_srcptr pivot = m(k, k).get_mpz_t();
        const bool unit_prev = prev == 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            mpz_srcptr lead = m(i, k).get_mpz_t();
            const bool zero_lead = mpz_sgn(lead) == 0;
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_ptr target = m(i, j).get_mpz_t();
                mpz_mul(target, target, pivot);
                if (!zero_lead) mpz_submul(target, lead, m(k, j).get_mpz_t());
                // Sylvester's identity: every division here is exact.
                if (!unit_prev) mpz_divexact(target, target, prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    BigInt det = m(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

namespace kernels {

namespace {

IntMatrix pencil_at(std::span<const IntMatrix> coeffs, long x) {
    // Horner over the matrix coefficients.
    IntMatrix acc = coeffs.back();
    const BigInt bx = x;
    for (std::size_t j = coeffs.size() - 1; j-- > 0;) acc = acc * bx + coeffs[j];
    return acc;
}

void check_pencil(std::span<const IntMatrix> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("empty matrix pencil");
    for (const auto& c : coeffs)
        if (c.dim() != coeffs.front().dim()) throw std::invalid_argument("pencil coefficient dimensions differ");
}

} // namespace

std::vector<BigInt> evaluate_pencil_serial(std::span<const IntMatrix> coeffs, std::size_t nodes) {
    check_pencil(coeffs);
    std::vector<BigInt> values(nodes);
    for (std::size_t i = 0; i < nodes; ++i) values[i] = det_bareiss(pencil_at(coeffs, static_cast<long>(i)));
    return values;
}

std::vector<BigInt> evaluate_pencil_parallel(std::span<const IntMatrix> coeffs, std::size_t nodes) {
    check_pencil(coeffs);
    std::vector<BigInt> values(nodes);
    const long count = static_cast<long>(nodes);
    // Larger nodes produce larger entries; dynamic scheduling balances that.
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) values[static_cast<std::size_t>(i)] = det_bareiss(pencil_at(coeffs, i));
    return values;
}

RationalPolynomial interpolate_integer_nodes(std::span<const BigInt> values) {
    const std::size_t count = values.size();
    if (count == 0) return {};
    // Forward differences at x = 0; Newton coefficient k is diff_k / k!.
    std::vector<BigInt> diff(values.begin(), values.end());
    std::vector<Rational> newton(count);
    BigInt factorial = 1;
    for (std::size_t k = 0; k < count; ++k) {
        if (k > 0) factorial *= static_cast<unsigned long>(k);
        newton[k] = Rational(diff[0], factorial);
        newton[k].canonicalize();
        for (std::size_t i = 0; i + 1 < count - k; ++i) diff[i] = diff[i + 1] - diff[i];
    }
    // Horner on the Newton basis: P = c_{d} ; P = P * (x - k) + c_k.
    std::vector<Rational> poly{newton[count - 1]};
    for (std::size_t k = count - 1; k-- > 0;) {
        std::vector<Rational> next(poly.size() + 1);
        const Rational shift(static_cast<long>(k));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * shift;
        }
        next[0] += newton[k];
        poly = std::move(next);
    }
    return RationalPolynomial(std::move(poly));
}

} // namespace kernels

IntPolynomial det_pencil(std::span<const IntMatrix> coeffs, std::size_t degree_bound, Execution exec) {
    const auto values = exec == Execution::parallel ? kernels::evaluate_pencil_parallel(coeffs, degree_bound + 1)
                                                    : kernels::evaluate_pencil_serial(coeffs, degree_bound + 1);
    auto poly = kernels::interpolate_integer_nodes(values).to_integer();
    if (!poly) throw std::logic_error("det_pencil: interpolated determinant has a non-integer coefficient");
    return *poly;
}

IntPolynomial det_poly_linear(const IntMatrix& f, PencilSign sign, Execution exec) {
    const MatrixPencil pencil{IntMatrix::identity(f.dim()), sign == PencilSign::minus ? -f : f};
    return det_pencil(pencil, f.dim(), exec);
}

IntPolynomial char_poly(const IntMatrix& m, Execution exec) {
    const MatrixPencil pencil{-m, IntMatrix::identity(m.dim())};
    return det_pencil(pencil, m.dim(), exec);
}

} // namespace gzeta
