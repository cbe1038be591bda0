#include "gzeta/exact.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gzeta {

namespace {

using cld = std::complex<long double>;

long double to_long_double(const BigInt& v) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

// Parlett-Reinsch balancing: diagonal similarity that equalizes row and
// column norms, which the companion matrix of a badly scaled polynomial needs.
void balance(Eigen::MatrixXd& m) {
    const long n = m.rows();
    constexpr double radix = 2.0;
    bool converged = false;
    while (!converged) {
        converged = true;
        for (long i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (long j = 0; j < n; ++j)
                if (j != i) {
                    c += std::abs(m(j, i));
                    r += std::abs(m(i, j));
                }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix, f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                converged = false;
                m.row(i) /= f;
                m.col(i) *= f;
            }
        }
    }
}

// Roots of a square-free integer polynomial, each appearing once.
std::vector<std::complex<double>> simple_roots(const IntPolynomial& q) {
    const long d = q.degree();
    std::vector<long double> c(static_cast<std::size_t>(d + 1));
    for (long i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = to_long_double(q.coeff(static_cast<std::size_t>(i)));

    if (d == 1) return {std::complex<double>(static_cast<double>(-c[0] / c[1]), 0.0)};

    // Starting points: eigenvalues of the balanced companion matrix.
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (long i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (long i = 0; i < d; ++i) comp(i, d - 1) = static_cast<double>(-c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(d)]);
    balance(comp);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("poly_roots: companion eigensolver failed");

    auto eval = [&](cld x, cld& value, cld& deriv) {
        value = c[static_cast<std::size_t>(d)];
        deriv = 0;
        for (long i = d - 1; i >= 0; --i) {
            deriv = deriv * x + value;
            value = value * x + c[static_cast<std::size_t>(i)];
        }
    };

    std::vector<cld> z(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] = cld(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    // Separate coincident starts so the Aberth correction is defined.
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (z[i] == z[j]) z[i] += cld(0, 1e-6L * (1.0L + std::abs(z[i])) * static_cast<long double>(i + 1));

    // Aberth-Ehrlich: Newton with mutual repulsion, so no two approximations
    // settle on the same root.
    std::vector<bool> done(z.size(), false);
    for (int it = 0; it < 500; ++it) {
        bool all_done = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i]) continue;
            cld value, deriv;
            eval(z[i], value, deriv);
            if (value == cld(0)) {
                done[i] = true;
                continue;
            }
            const cld ratio = value / deriv;
            cld repel = 0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) repel += cld(1) / (z[i] - z[j]);
            const cld step = ratio / (cld(1) - ratio * repel);
            z[i] -= step;
            if (std::abs(step) <= 1e-18L * std::max<long double>(1.0L, std::abs(z[i])))
                done[i] = true;
            else
                all_done = false;
        }
        if (all_done) break;
    }

    std::vector<std::complex<double>> roots;
    roots.reserve(z.size());
    for (const auto& x : z) roots.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));

    // Real coefficients: snap numerically-real roots onto the axis.
    for (auto& r : roots)
        if (std::abs(r.imag()) <= 1e-10 * std::max(1.0, std::abs(r.real()))) r = {r.real(), 0.0};
    return roots;
}

} // namespace

std::vector<ComplexRoot> poly_roots(const IntPolynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("poly_roots requires degree >= 1");
    std::vector<ComplexRoot> out;
    for (const auto& [factor, mult] : square_free_decomposition(p)) {
        for (const auto& r : simple_roots(factor)) out.push_back({r.real(), r.imag(), mult});
    }
    std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        return a.real != b.real ? a.real < b.real : a.imag < b.imag;
    });
    return out;
}

} // namespace gzeta
