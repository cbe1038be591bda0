#pragma once

#include "gzeta/exact.hpp"
#include "gzeta/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gzeta {

/// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    std::size_t dim() const noexcept { return dim_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix transpose() const;
    bool is_identity() const;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> data_;
};

/// 0/1 matrix indexed by arcs.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0) {}

    std::size_t dim() const noexcept { return dim_; }
    bool operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) { data_[i * dim_ + j] = v ? 1 : 0; }
    bool operator==(const BinaryMatrix& other) const = default;

    std::size_t row_sum(std::size_t i) const;
    IntMatrix to_int() const;

    /// One line per row, characters '0'/'1', no separators.
    std::string to_text_grid() const;
    static BinaryMatrix from_text_grid(std::string_view text);

private:
    std::size_t dim_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Grover matrix: U(e,f) = 2/deg o(e) if t(f) = o(e) and f != e^-1,
/// 2/deg o(e) - 1 if f = e^-1, 0 otherwise. Throws HypothesisError when a
/// vertex is isolated.
RationalMatrix grover_matrix(const Graph& g);

/// 1 where the entry is strictly positive.
BinaryMatrix positive_support(const RationalMatrix& m);

/// (U)+ directly from the graph (identical to positive_support(grover_matrix(g))).
BinaryMatrix grover_support(const Graph& g);

struct SupportIdentityViolation {
    ArcIndex row;
    ArcIndex col;
    BigInt square_plus_identity;  ///< ((U+)^2 + I)(row, col)
    bool support_entry;           ///< (U^2)+(row, col)
};

struct SquaredSupport {
    BinaryMatrix matrix;  ///< positive support of the exact U^2
    /// Entries where (U^2)+ != (U+)^2 + I, empty when the identity holds.
    std::vector<SupportIdentityViolation> identity_violations;

    bool identity_holds() const noexcept { return identity_violations.empty(); }
};

/// (U^2)+ from the exact rational square of U, checked entrywise against
/// (U+)^2 + I. Requires a simple connected graph with minimum degree >= 3.
SquaredSupport squared_support(const Graph& g);

/// (e, f) is a 2-step-identity (e == f) or a 2-step-arc: some arc g with
/// o(g) = t(e), t(g) = o(f), g != e^-1, g != f^-1.
bool two_step_related(const Graph& g, ArcIndex e, ArcIndex f);

/// Closed non-backtracking arc sequences of length k (cyclically reduced,
/// counted with a distinguished starting arc). 1 <= k <= 10.
std::uint64_t count_reduced_cycles(const Graph& g, unsigned k, Execution exec = Execution::parallel);

/// Closed sequences of length r whose consecutive pairs (cyclically) are
/// two_step_related. 1 <= r <= 6, graph eligible for the modified zeta.
std::uint64_t count_two_step_cycles(const Graph& g, unsigned r, Execution exec = Execution::parallel);

} // namespace gzeta
