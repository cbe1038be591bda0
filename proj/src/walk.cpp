#include "gzeta/walk.hpp"

#include "gzeta/errors.hpp"

#include <omp.h>

#include <sstream>

namespace gzeta {

// ---------------------------------------------------------------------------
// Matrix types

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    RationalMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                const Rational& b = rhs(k, j);
                if (b != 0) r(i, j) += a * b;
            }
        }
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool RationalMatrix::is_identity() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::size_t BinaryMatrix::row_sum(std::size_t i) const {
    std::size_t s = 0;
    for (std::size_t j = 0; j < dim_; ++j) s += data_[i * dim_ + j];
    return s;
}

IntMatrix BinaryMatrix::to_int() const {
    IntMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if ((*this)(i, j)) m(i, j) = 1;
    return m;
}

std::string BinaryMatrix::to_text_grid() const {
    std::string s;
    s.reserve(dim_ * (dim_ + 1));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) s.push_back((*this)(i, j) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

BinaryMatrix BinaryMatrix::from_text_grid(std::string_view text) {
    std::vector<std::string_view> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto row = text.substr(pos, eol - pos);
        if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
        if (!row.empty()) rows.push_back(row);
        pos = eol + 1;
    }
    BinaryMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw ParseError("binary grid is not square", i + 1);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            const char c = rows[i][j];
            if (c != '0' && c != '1') throw ParseError("binary grid entry must be 0 or 1", i + 1);
            m.set(i, j, c == '1');
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Operators

RationalMatrix grover_matrix(const Graph& g) {
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (g.degree(x) == 0) throw HypothesisError({"vertex " + std::to_string(x) + " is isolated"});

    const std::size_t dim = g.arc_count();
    RationalMatrix u(dim);
    for (ArcIndex e = 0; e < dim; ++e) {
        const Vertex x = g.arc(e).origin;
        const Rational two_over_deg(2, static_cast<unsigned long>(g.degree(x)));
        for (ArcIndex f : g.in_arcs(x)) {
            Rational v = two_over_deg;
            if (f == g.inverse(e)) v -= 1;
            v.canonicalize();
            u(e, f) = v;
        }
    }
    return u;
}

BinaryMatrix positive_support(const RationalMatrix& m) {
    BinaryMatrix s(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) s.set(i, j, sgn(m(i, j)) > 0);
    return s;
}

BinaryMatrix grover_support(const Graph& g) {
    BinaryMatrix s(g.arc_count());
    for (ArcIndex e = 0; e < g.arc_count(); ++e) {
        const Vertex x = g.arc(e).origin;
        for (ArcIndex f : g.in_arcs(x)) {
            // The inverse entry 2/deg - 1 is positive only at degree 1.
            if (f != g.inverse(e) || g.degree(x) == 1) s.set(e, f, true);
        }
    }
    return s;
}

SquaredSupport squared_support(const Graph& g) {
    require_modified_eligible(g);
    const RationalMatrix u = grover_matrix(g);
    SquaredSupport result{positive_support(u * u), {}};

    const IntMatrix up = positive_support(u).to_int();
    const IntMatrix expected = up * up + IntMatrix::identity(up.dim());
    for (std::size_t i = 0; i < up.dim(); ++i)
        for (std::size_t j = 0; j < up.dim(); ++j) {
            const bool entry = result.matrix(i, j);
            if (expected(i, j) != (entry ? 1 : 0)) result.identity_violations.push_back({i, j, expected(i, j), entry});
        }
    return result;
}

bool two_step_related(const Graph& g, ArcIndex e, ArcIndex f) {
    if (e == f) return true;
    const Vertex target = g.arc(f).origin;
    for (ArcIndex c : g.out_arcs(g.arc(e).terminus)) {
        if (c == g.inverse(e) || c == g.inverse(f)) continue;
        if (g.arc(c).terminus == target) return true;
    }
    return false;
}

namespace {

using Successors = std::vector<std::vector<ArcIndex>>;

std::uint64_t closed_walks_from(const Successors& next, ArcIndex start, unsigned length) {
    // Iterative DFS over walks start = a_0, a_1, ..., a_{length-1}, closing back to start.
    struct Frame {
        ArcIndex arc;
        std::size_t child;
    };
    std::vector<Frame> stack{{start, 0}};
    std::uint64_t count = 0;
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (stack.size() == length) {
            for (ArcIndex s : next[top.arc])
                if (s == start) ++count;
            stack.pop_back();
            continue;
        }
        if (top.child == next[top.arc].size()) {
            stack.pop_back();
            continue;
        }
        const ArcIndex child = next[top.arc][top.child++];
        stack.push_back({child, 0});
    }
    return count;
}

std::uint64_t count_closed(const Successors& next, unsigned length, Execution exec) {
    const long arcs = static_cast<long>(next.size());
    std::uint64_t total = 0;
    if (exec == Execution::serial) {
        for (long s = 0; s < arcs; ++s) total += closed_walks_from(next, static_cast<ArcIndex>(s), length);
        return total;
    }
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long s = 0; s < arcs; ++s) total += closed_walks_from(next, static_cast<ArcIndex>(s), length);
    return total;
}

} // namespace

std::uint64_t count_reduced_cycles(const Graph& g, unsigned k, Execution exec) {
    if (k < 1 || k > 10) throw InputError("reduced-cycle length must be in 1..10, got " + std::to_string(k));
    Successors next(g.arc_count());
    for (ArcIndex e = 0; e < g.arc_count(); ++e)
        for (ArcIndex f : g.out_arcs(g.arc(e).terminus))
            if (f != g.inverse(e)) next[e].push_back(f);
    return count_closed(next, k, exec);
}

std::uint64_t count_two_step_cycles(const Graph& g, unsigned r, Execution exec) {
    if (r < 1 || r > 6) throw InputError("2-step-cycle length must be in 1..6, got " + std::to_string(r));
    require_modified_eligible(g);
    Successors next(g.arc_count());
    for (ArcIndex e = 0; e < g.arc_count(); ++e)
        for (ArcIndex f = 0; f < g.arc_count(); ++f)
            if (two_step_related(g, e, f)) next[e].push_back(f);
    return count_closed(next, r, exec);
}

} // namespace gzeta
