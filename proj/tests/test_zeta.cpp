#include "gzeta/errors.hpp"
#include "gzeta/walk.hpp"
#include "gzeta/zeta.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace gzeta;

namespace {

struct Fixture {
    const char* name;
    long k;
    std::map<long, unsigned> spectrum;
};

const std::vector<Fixture>& regular_fixtures() {
    static const std::vector<Fixture> f{
        {"k4", 3, {{3, 1}, {-1, 3}}},
        {"k5", 4, {{4, 1}, {-1, 4}}},
        {"petersen", 3, {{3, 1}, {1, 5}, {-2, 4}}},
        {"k33", 3, {{3, 1}, {0, 4}, {-3, 1}}},
        {"cube", 3, {{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}},
    };
    return f;
}

} // namespace

TEST_SUITE("zeta") {

TEST_CASE("Ihara core of K4 is (1-3u+2u^2)(1+u+2u^2)^3") {
    const Graph g = generate_from_spec("k4");
    const IntPolynomial expect = IntPolynomial{1, -3, 2} * IntPolynomial{1, 1, 2}.pow(3);
    const ZetaReciprocal bass = ihara_reciprocal_bass(g);
    const ZetaReciprocal edge = ihara_reciprocal_edge(g);
    CHECK(bass.core == expect);
    CHECK(edge.core == expect);
    CHECK(edge.polynomial.degree() == 12);
    CHECK(edge.polynomial == IntPolynomial{1, 0, -1}.pow(2) * expect);
    CHECK(edge.cofactor_string() == "(1-u^2)^2");
    CHECK(edge.polynomial.coeff(0) == 1);
}

TEST_CASE("Ihara and modified cores match the spectral products") {
    for (const auto& fx : regular_fixtures()) {
        CAPTURE(fx.name);
        const Graph g = generate_from_spec(fx.name);
        CHECK(ihara_reciprocal_bass(g).core == oracle::ihara_core_from_spectrum(fx.spectrum, fx.k));
        CHECK(ihara_reciprocal_edge(g).core == oracle::ihara_core_from_spectrum(fx.spectrum, fx.k));
        CHECK(modified_reciprocal(g).core == oracle::modified_core_from_spectrum(fx.spectrum, fx.k));
    }
}

TEST_CASE("frozen symbolic values") {
    // sympy: det(I - uA + u^2(D - I)) for the Petersen graph.
    const IntPolynomial f_petersen{1,   0,    5,   0,    15,   -24, 15,   -120, -60, -400, -168,
                                   -800, -240, -960, 240, -768, 960, 0,    1280, 0,    1024};
    CHECK(ihara_reciprocal_bass(generate_named("petersen")).core == f_petersen);
    // sympy: h*l with s^2 = u(1-u).
    CHECK(modified_reciprocal(generate_from_spec("k4")).core == IntPolynomial{1, -4, -2, -20, 17, 16, 104, 64, 80});
    CHECK(modified_reciprocal(generate_from_spec("k33")).core ==
          IntPolynomial{1, -6, -15, 76, 198, -180, -966, -720, 981, 2218, 1749, 660, 100});
}

TEST_CASE("triangle: both Ihara forms agree") {
    const Graph g(3, {{0, 1}, {1, 2}, {2, 0}});
    const ZetaReciprocal edge = ihara_reciprocal_edge(g);
    CHECK(edge.polynomial == ihara_reciprocal_bass(g).polynomial);
    CHECK(edge.polynomial == IntPolynomial{1, 0, 0, -1}.pow(2));
    CHECK(edge.cofactor_exponent == 0);
}

TEST_CASE("Bass form handles m < n") {
    const Graph path(3, {{0, 1}, {1, 2}});
    const ZetaReciprocal z = ihara_reciprocal_bass(path);
    CHECK(z.cofactor_exponent == -1);
    // A tree has no reduced cycles.
    CHECK(z.polynomial == IntPolynomial{1});
}

TEST_CASE("modified factorization on Petersen") {
    const Graph g = generate_named("petersen");
    const ZetaReciprocal z = modified_reciprocal(g);
    CHECK(z.cofactor_exponent == 10);
    CHECK(z.polynomial.degree() == 30);
    CHECK(z.polynomial == IntPolynomial{1, -2}.pow(10) * z.core);
    CHECK(poly_exact_divide(z.polynomial, IntPolynomial{1, -2}.pow(10)).remainder.is_zero());
    for (const auto& b : z.branch_checks) CHECK(b.pass);
}

TEST_CASE("modified K4 cofactor") {
    const ZetaReciprocal z = modified_reciprocal(generate_from_spec("k4"));
    CHECK(z.cofactor_string() == "(1-2u)^4");
    CHECK(z.core.degree() == 8);
}

TEST_CASE("modified reciprocal requires eligibility") {
    try {
        modified_reciprocal(generate_from_spec("cycle:5"));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(std::string(e.what()).find("δ(G) ≥ 3 required") != std::string::npos);
    }
}

TEST_CASE("branch spot check at a root of p") {
    // u = 1/10 is a pole for K5, so p(0.1) = 0 and the check must still pass.
    const Graph g = generate_from_spec("k5");
    const ZetaReciprocal z = modified_reciprocal(g);
    CHECK(z.core(Rational(1, 10)) == 0);
    for (const auto& b : z.branch_checks) CHECK(b.pass);
    // A wrong core is caught.
    const auto bad = branch_spot_check(g, z.core + IntPolynomial{0, 1}, default_branch_points());
    bool any_fail = false;
    for (const auto& b : bad) any_fail = any_fail || !b.pass;
    CHECK(any_fail);
}

TEST_CASE("complexity") {
    CHECK(complexity(generate_from_spec("k4")) == 16);
    CHECK(complexity(generate_named("petersen")) == 2000);
    CHECK(complexity(generate_from_spec("k33")) == 81);
    CHECK(complexity(generate_named("cube")) == 384);
    CHECK(complexity(generate_from_spec("cycle:7")) == 7);
}

TEST_CASE("iota against the odd-unicyclic oracle") {
    CHECK(iota(generate_from_spec("k4")) == BigInt(48));
    CHECK(iota(generate_named("petersen")) == BigInt(6144));
    CHECK_FALSE(iota(generate_from_spec("k33")));
    for (const char* name : {"k4", "k5", "petersen"}) {
        const Graph g = generate_from_spec(name);
        const BigInt expect = oracle::odd_unicyclic_sum(g);
        CHECK(iota_bruteforce(g, Execution::serial) == expect);
        CHECK(iota_bruteforce(g, Execution::parallel) == expect);
        CHECK(*iota(g) == expect);
    }
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = oracle::random_connected(rng, 7, 2, 2);
        const auto c = classify(g);
        if (c.bipartite) continue;
        CHECK(det_bareiss(g.degree_matrix() + g.adjacency_matrix()) == oracle::odd_unicyclic_sum(g));
        CHECK(iota_bruteforce(g) == oracle::odd_unicyclic_sum(g));
    }
    CHECK_THROWS_AS(iota(Graph(2, {{0, 1}, {0, 1}})), HypothesisError);
}

TEST_CASE("power sums from the reciprocal are traces") {
    const Graph g = generate_named("petersen");
    const IntMatrix s = grover_support(g).to_int();
    const auto sums = power_sums_from_reciprocal(ihara_reciprocal_edge(g).polynomial, 8);
    for (unsigned r = 1; r <= 8; ++r) CHECK(sums[r - 1] == s.pow(r).trace());
    const auto two = power_sums_from_reciprocal(modified_reciprocal(g).polynomial, 4);
    const IntMatrix sq = squared_support(g).matrix.to_int();
    for (unsigned r = 1; r <= 4; ++r) CHECK(two[r - 1] == sq.pow(r).trace());
}

TEST_CASE("derivative identities") {
    SUBCASE("K4") {
        const InvariantReport r = derivative_identities(generate_from_spec("k4"));
        CHECK(r.pass());
        CHECK(r.kappa == 16);
        CHECK(r.iota == BigInt(48));
        CHECK(r.iota_bruteforce == BigInt(48));
        CHECK(r.find(identity::f_prime_one)->lhs == 64);
        CHECK(r.find(identity::p_half)->lhs == 0);
        CHECK(r.find(identity::p_prime_half)->lhs == 24);
        CHECK(r.find(identity::p_second_half) == nullptr);
    }
    SUBCASE("Petersen") {
        const InvariantReport r = derivative_identities(generate_named("petersen"));
        CHECK(r.pass());
        CHECK(r.find(identity::f_prime_one)->lhs == 20000);
        CHECK(r.find(identity::p_prime_half)->lhs == Rational(1875, 8));
        CHECK(r.find(identity::p_prime_half)->rhs == Rational(1875, 8));
    }
    SUBCASE("K3,3") {
        const InvariantReport r = derivative_identities(generate_from_spec("k33"));
        CHECK(r.pass());
        CHECK(r.kappa == 81);
        CHECK_FALSE(r.iota);
        CHECK(r.find(identity::p_prime_half)->lhs == 0);
        CHECK(r.find(identity::p_second_half)->lhs == Rational(59049, 128));
    }
    SUBCASE("cycle: Ihara side only") {
        const InvariantReport r = derivative_identities(generate_from_spec("cycle:6"));
        CHECK(r.pass());
        CHECK(r.find(identity::p_half) == nullptr);
    }
}

TEST_CASE("serial and parallel reciprocals agree") {
    for (const char* name : {"k4", "petersen", "cube"}) {
        const Graph g = generate_from_spec(name);
        CHECK(modified_reciprocal(g, Execution::serial).polynomial ==
              modified_reciprocal(g, Execution::parallel).polynomial);
        CHECK(ihara_reciprocal_edge(g, Execution::serial).polynomial ==
              ihara_reciprocal_edge(g, Execution::parallel).polynomial);
    }
}

} // TEST_SUITE
