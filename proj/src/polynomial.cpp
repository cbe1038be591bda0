#include "gzeta/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gzeta {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::binomial_power(long c0, long c1, unsigned long power) {
    return IntPolynomial{c0, c1}.pow(power);
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    acc.canonicalize();
    return acc;
}

std::complex<double> IntPolynomial::operator()(std::complex<double> x) const {
    std::complex<long double> acc = 0;
    const std::complex<long double> xl(x.real(), x.imag());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        // mpz -> long double via the double conversion with exponent split.
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, it->get_mpz_t());
        acc = acc * xl + std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial IntPolynomial::pow(unsigned long e) const {
    IntPolynomial result{1};
    IntPolynomial base = *this;
    while (e) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (coeffs_.back() < 0) g = -g;
    std::vector<BigInt> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RationalPolynomial::RationalPolynomial(const IntPolynomial& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::monic() const {
    if (is_zero()) return {};
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / coeffs_.back();
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return RationalPolynomial(std::move(out));
}

std::optional<IntPolynomial> RationalPolynomial::to_integer() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) return std::nullopt;
        out.push_back(c.get_num());
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial RationalPolynomial::primitive_integer() const {
    BigInt l = 1;
    for (const auto& c : coeffs_) l = lcm(l, c.get_den());
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_num() * (l / c.get_den()));
    return IntPolynomial(std::move(out)).primitive_part();
}

// ---------------------------------------------------------------------------
// Division, derivatives, evaluation

PolynomialDivision poly_divide(const RationalPolynomial& num, const RationalPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
    const long dd = den.degree();
    const long qd = num.degree() - dd;
    std::vector<Rational> quot(qd >= 0 ? static_cast<std::size_t>(qd + 1) : 0);
    const auto dc = den.coeffs();
    for (long k = qd; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + dd)] / den.leading();
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * dc[static_cast<std::size_t>(j)];
    }
    if (dd >= 0 && rem.size() > static_cast<std::size_t>(dd)) rem.resize(static_cast<std::size_t>(dd));
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

PolynomialDivision poly_exact_divide(const IntPolynomial& num, const IntPolynomial& den) {
    return poly_divide(RationalPolynomial(num), RationalPolynomial(den));
}

std::optional<IntPolynomial> divide_if_exact(const IntPolynomial& num, const IntPolynomial& den) {
    auto d = poly_exact_divide(num, den);
    if (!d.remainder.is_zero()) return std::nullopt;
    return d.quotient.to_integer();
}

IntPolynomial poly_derivative(const IntPolynomial& p, unsigned order) {
    std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
    for (unsigned k = 0; k < order && !c.empty(); ++k) {
        for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * static_cast<unsigned long>(i);
        c.pop_back();
    }
    return IntPolynomial(std::move(c));
}

Rational poly_eval_rational(const IntPolynomial& p, const Rational& x) { return p(x); }

RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto r = poly_divide(a, b).remainder;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
}

std::vector<SquareFreeFactor> square_free_decomposition(const IntPolynomial& p) {
    std::vector<SquareFreeFactor> out;
    if (p.degree() < 1) return out;

    const RationalPolynomial f(p);
    const RationalPolynomial fp = f.derivative();
    const RationalPolynomial a0 = poly_gcd(f, fp);
    RationalPolynomial b = poly_divide(f, a0).quotient;
    RationalPolynomial c = poly_divide(fp, a0).quotient;
    RationalPolynomial d = c - b.derivative();
    for (unsigned i = 1; b.degree() >= 1; ++i) {
        const RationalPolynomial a = poly_gcd(b, d);
        if (a.degree() >= 1) out.push_back({a.primitive_integer(), i});
        b = poly_divide(b, a).quotient;
        c = poly_divide(d, a).quotient;
        d = c - b.derivative();
    }
    return out;
}

unsigned rational_root_multiplicity(const IntPolynomial& p, const Rational& x) {
    if (p.is_zero()) throw std::domain_error("multiplicity of a root of the zero polynomial");
    Rational xc = x;
    xc.canonicalize();
    // Linear factor den*u - num is primitive, so exact division stays integral.
    const IntPolynomial linear(std::vector<BigInt>{-xc.get_num(), xc.get_den()});
    unsigned mult = 0;
    IntPolynomial q = p;
    while (q.degree() >= 1) {
        auto next = divide_if_exact(q, linear);
        if (!next) break;
        q = std::move(*next);
        ++mult;
    }
    return mult;
}

} // namespace gzeta
