#include "gzeta/errors.hpp"
#include "gzeta/walk.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace gzeta;

namespace {

ArcIndex find_arc(const Graph& g, Vertex from, Vertex to) {
    for (ArcIndex e = 0; e < g.arc_count(); ++e)
        if (g.arc(e).origin == from && g.arc(e).terminus == to) return e;
    throw std::logic_error("no such arc");
}

} // namespace

TEST_SUITE("walk") {

TEST_CASE("Grover matrix entries on K4") {
    const Graph g = generate_from_spec("k4");
    const RationalMatrix u = grover_matrix(g);
    CHECK(u.dim() == 12);
    for (ArcIndex e = 0; e < 12; ++e) {
        Rational row = 0;
        for (ArcIndex f = 0; f < 12; ++f) {
            row += u(e, f);
            const bool feeds = g.arc(f).terminus == g.arc(e).origin;
            if (f == g.inverse(e)) {
                CHECK(u(e, f) == Rational(-1, 3));
            } else if (feeds) {
                CHECK(u(e, f) == Rational(2, 3));
            } else {
                CHECK(u(e, f) == 0);
            }
        }
        CHECK(row == 1);
    }
}

TEST_CASE("Grover matrix is orthogonal") {
    for (const char* name : {"k4", "petersen", "k33", "cube"}) {
        const RationalMatrix u = grover_matrix(generate_from_spec(name));
        CHECK((u * u.transpose()).is_identity());
    }
    // Irregular, with a leaf.
    const RationalMatrix u = grover_matrix(Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
    CHECK((u * u.transpose()).is_identity());
}

TEST_CASE("isolated vertex has no Grover matrix") {
    CHECK_THROWS_AS(grover_matrix(Graph(3, {{0, 1}})), HypothesisError);
}

TEST_CASE("(U)+ of K4 has two ones per row") {
    const Graph g = generate_from_spec("k4");
    const BinaryMatrix s = grover_support(g);
    CHECK(s == positive_support(grover_matrix(g)));
    for (ArcIndex e = 0; e < 12; ++e) {
        CHECK(s.row_sum(e) == 2);
        CHECK_FALSE(s(e, g.inverse(e)));
    }
}

TEST_CASE("(U)+ keeps the inverse entry at a leaf") {
    const Graph g(3, {{0, 1}, {1, 2}});
    const BinaryMatrix s = grover_support(g);
    CHECK(s == positive_support(grover_matrix(g)));
    const ArcIndex into_leaf = find_arc(g, 0, 1);  // arc whose origin 0 has degree 1
    CHECK(s(into_leaf, g.inverse(into_leaf)));
}

TEST_CASE("support identity (U^2)+ = (U+)^2 + I") {
    for (const char* name : {"k4", "k5", "petersen", "k33", "cube"}) {
        const Graph g = generate_from_spec(name);
        const SquaredSupport sq = squared_support(g);
        CHECK(sq.identity_holds());
        const IntMatrix s = grover_support(g).to_int();
        CHECK(sq.matrix.to_int() == s * s + IntMatrix::identity(s.dim()));
    }
    CHECK_THROWS_AS(squared_support(generate_from_spec("cycle:5")), HypothesisError);
}

TEST_CASE("two-step relation matches the definition") {
    const Graph k4 = generate_from_spec("k4");
    CHECK(two_step_related(k4, find_arc(k4, 0, 1), find_arc(k4, 3, 2)));
    CHECK(two_step_related(k4, find_arc(k4, 0, 1), find_arc(k4, 0, 1)));
    // Connector would be (1 -> 0) = e^-1.
    CHECK_FALSE(two_step_related(k4, find_arc(k4, 0, 1), find_arc(k4, 0, 2)));

    for (const char* name : {"k4", "petersen", "k33"}) {
        const Graph g = generate_from_spec(name);
        std::set<oracle::Pair> arcs;
        for (const auto& a : g.arcs()) arcs.insert({a.origin, a.terminus});
        const SquaredSupport sq = squared_support(g);
        for (ArcIndex e = 0; e < g.arc_count(); ++e)
            for (ArcIndex f = 0; f < g.arc_count(); ++f) {
                const oracle::Pair pe{g.arc(e).origin, g.arc(e).terminus};
                const oracle::Pair pf{g.arc(f).origin, g.arc(f).terminus};
                const bool expected = oracle::two_step(arcs, pe, pf);
                CHECK(two_step_related(g, e, f) == expected);
                // The relation is the transpose of the support pattern.
                CHECK(sq.matrix(f, e) == expected);
            }
    }
}

TEST_CASE("reduced cycle counts") {
    const Graph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(count_reduced_cycles(triangle, 3) == 6);
    CHECK(count_reduced_cycles(triangle, 2) == 0);
    CHECK(count_reduced_cycles(generate_named("petersen"), 3) == 0);
    CHECK(count_reduced_cycles(generate_named("petersen"), 5) == 120);
    CHECK_THROWS_AS(count_reduced_cycles(triangle, 11), InputError);

    for (const char* name : {"k4", "petersen", "k33", "cube", "k5"})
        for (unsigned k = 1; k <= 7; ++k) {
            const Graph g = generate_from_spec(name);
            const std::uint64_t c = count_reduced_cycles(g, k);
            CHECK(c == oracle::reduced_closed_walks(g, k));
            const IntMatrix s = grover_support(g).to_int();
            CHECK(BigInt(std::to_string(c)) == s.pow(k).trace());
        }
}

TEST_CASE("two-step cycle counts") {
    for (const char* name : {"k4", "petersen"})
        for (unsigned r = 1; r <= 4; ++r) {
            const Graph g = generate_from_spec(name);
            const std::uint64_t c = count_two_step_cycles(g, r);
            CHECK(c == oracle::two_step_closed_sequences(g, r));
            CHECK(BigInt(std::to_string(c)) == squared_support(g).matrix.to_int().pow(r).trace());
        }
    CHECK_THROWS_AS(count_two_step_cycles(generate_from_spec("k4"), 7), InputError);
}

TEST_CASE("serial and parallel cycle counts agree") {
    const Graph g = generate_named("petersen");
    for (unsigned k = 1; k <= 8; ++k)
        CHECK(count_reduced_cycles(g, k, Execution::serial) == count_reduced_cycles(g, k, Execution::parallel));
    const Graph k4 = generate_from_spec("k4");
    for (unsigned r = 1; r <= 5; ++r)
        CHECK(count_two_step_cycles(k4, r, Execution::serial) == count_two_step_cycles(k4, r, Execution::parallel));
}

TEST_CASE("binary matrix text grid round trip") {
    const BinaryMatrix s = grover_support(generate_from_spec("k4"));
    CHECK(BinaryMatrix::from_text_grid(s.to_text_grid()) == s);
}

} // TEST_SUITE
