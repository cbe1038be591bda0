#include "gzeta/verify.hpp"

#include "gzeta/errors.hpp"
#include "gzeta/serialize.hpp"
#include "gzeta/spectra.hpp"
#include "gzeta/walk.hpp"
#include "gzeta/zeta.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace gzeta {

const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

bool VerificationReport::pass() const {
    return std::none_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == CheckStatus::fail; });
}

const CheckRecord* VerificationReport::find(const std::string& identity) const {
    for (const auto& r : records)
        if (r.identity == identity) return &r;
    return nullptr;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& c : r.records)
        records.push_back({{"identity", c.identity},
                           {"anchor", c.anchor},
                           {"status", to_string(c.status)},
                           {"lhs", c.lhs},
                           {"rhs", c.rhs},
                           {"elapsed_ms", c.elapsed_ms}});
    return {{"pass", r.pass()}, {"records", records}};
}

namespace {

struct Outcome {
    CheckStatus status;
    std::string lhs;
    std::string rhs;
};

Outcome compare(const std::string& lhs, const std::string& rhs) {
    return {lhs == rhs ? CheckStatus::pass : CheckStatus::fail, lhs, rhs};
}

Outcome truth(bool ok, std::string lhs, std::string rhs = "true") {
    return {ok ? CheckStatus::pass : CheckStatus::fail, std::move(lhs), std::move(rhs)};
}

std::string describe(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& i : items) s += (s.empty() ? "" : ", ") + i;
    return s;
}

// Multisets of complex numbers with multiplicities, matched greedily at `tol`.
bool multisets_match(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j) {
            if (!used[j] && std::abs(b[j] - x) <= tol) used[j] = found = true;
        }
        if (!found) return false;
    }
    return true;
}

class Runner {
public:
    Runner(VerificationReport& report) : report_(report) {}

    void run(const std::string& identity, const std::string& anchor, bool applicable, const std::string& why_not,
             const std::function<Outcome()>& check) {
        const auto start = std::chrono::steady_clock::now();
        CheckRecord rec{identity, anchor, CheckStatus::not_applicable, "", why_not, 0.0};
        if (applicable) {
            try {
                auto o = check();
                rec.status = o.status;
                rec.lhs = std::move(o.lhs);
                rec.rhs = std::move(o.rhs);
            } catch (const std::exception& e) {
                rec.status = CheckStatus::fail;
                rec.lhs = std::string("exception: ") + e.what();
                rec.rhs.clear();
            }
        }
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report_.records.push_back(std::move(rec));
    }

private:
    VerificationReport& report_;
};

} // namespace

VerificationReport verify_all(const Graph& g, Execution exec) {
    VerificationReport report;
    Runner runner(report);

    const auto cls = classify(g);
    const long n = static_cast<long>(g.vertex_count());
    const long m = static_cast<long>(g.edge_count());
    const bool no_isolated = cls.min_degree >= 1;
    const bool ihara_ok = cls.connected && cls.min_degree >= 2;
    const std::string ihara_why = "requires connected G with \xCE\xB4(G) \xE2\x89\xA5 2";
    const auto eligibility = validate_for_modified_zeta(g);
    const bool modified_ok = eligibility.ok();
    const std::string modified_why = describe(eligibility.violations);
    const bool regular_ok = modified_ok && cls.regular_degree.has_value();
    const std::string regular_why = modified_ok ? "requires a regular graph" : modified_why;

    // Grover matrix.
    runner.run("grover.row_sums", "every row of U sums to 1", no_isolated, "requires no isolated vertex", [&] {
        const auto u = grover_matrix(g);
        for (std::size_t i = 0; i < u.dim(); ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < u.dim(); ++j) s += u(i, j);
            if (s != 1) return Outcome{CheckStatus::fail, "row " + std::to_string(i) + " sums to " + rational_string(s), "1"};
        }
        return Outcome{CheckStatus::pass, "all rows sum to 1", "1"};
    });
    runner.run("grover.orthogonality", "U U^T = I exactly", no_isolated, "requires no isolated vertex", [&] {
        const auto u = grover_matrix(g);
        return truth((u * u.transpose()).is_identity(), (u * u.transpose()).is_identity() ? "I" : "not I", "I");
    });
    runner.run("grover.support_rule", "(U)+ (e,f) = 1 iff t(f) = o(e) and f != e^-1", cls.min_degree >= 2,
               "requires \xCE\xB4(G) \xE2\x89\xA5 2", [&] {
                   const auto s = positive_support(grover_matrix(g));
                   std::size_t bad = 0;
                   for (ArcIndex e = 0; e < g.arc_count(); ++e)
                       for (ArcIndex f = 0; f < g.arc_count(); ++f) {
                           const bool rule = g.arc(f).terminus == g.arc(e).origin && f != g.inverse(e);
                           if (s(e, f) != rule) ++bad;
                       }
                   return compare(std::to_string(bad) + " mismatches", "0 mismatches");
               });

    // Ihara side.
    runner.run("ihara.determinant_forms", "det(I - u(U)+) = (1-u^2)^(m-n) det(I - uA + u^2(D-I))", ihara_ok, ihara_why,
               [&] {
                   const auto edge = ihara_reciprocal_edge(g, exec);
                   const auto bass = ihara_reciprocal_bass(g, exec);
                   return compare(edge.polynomial.to_string(), bass.polynomial.to_string());
               });
    // On a cycle f'(1) = 0 and u = 1 is a double root of f, so the order
    // formula needs m > n.
    const bool order_ok = ihara_ok && m > n;
    const std::string order_why = ihara_ok ? "requires m > n" : ihara_why;
    runner.run("ihara.pole_order_at_one", "u = 1 is a pole of order m-n+1", order_ok, order_why, [&] {
        const auto z = ihara_reciprocal_edge(g, exec);
        return compare(std::to_string(rational_root_multiplicity(z.polynomial, 1)), std::to_string(m - n + 1));
    });
    runner.run("ihara.f_prime_one", "f'(1) = 2(m-n) kappa", cls.connected, "requires connected G", [&] {
        const auto r = derivative_identities(g, exec);
        const auto* c = r.find(identity::f_prime_one);
        return compare(rational_string(c->lhs), rational_string(c->rhs));
    });
    runner.run("ihara.reduced_cycle_counts", "N_k = trace((U+)^k) for k <= 6", ihara_ok, ihara_why, [&] {
        const IntMatrix up = grover_support(g).to_int();
        std::string lhs, rhs;
        IntMatrix power = IntMatrix::identity(up.dim());
        for (unsigned k = 1; k <= 6; ++k) {
            power = power * up;
            lhs += (k > 1 ? "," : "") + std::to_string(count_reduced_cycles(g, k, exec));
            rhs += (k > 1 ? "," : "") + power.trace().get_str();
        }
        return compare(lhs, rhs);
    });
    runner.run("uplus.charpoly", "det(xI - (U)+) = (x^2-1)^(m-n) det((x^2-1)I - xA + D)", ihara_ok, ihara_why, [&] {
        const auto c = uplus_charpoly_check(g, exec);
        return compare(c.direct.to_string("x"), c.factored.to_string("x"));
    });

    // Modified zeta.
    runner.run("support.square_identity", "(U^2)+ = (U+)^2 + I", modified_ok, modified_why, [&] {
        const auto sq = squared_support(g);
        return compare(std::to_string(sq.identity_violations.size()) + " violations", "0 violations");
    });
    runner.run("support.two_step_relation", "(U^2)+ (f,e) = 1 iff (e,f) is a 2-step-arc or 2-step-identity",
               modified_ok, modified_why, [&] {
                   const auto sq = squared_support(g);
                   std::size_t bad = 0;
                   for (ArcIndex e = 0; e < g.arc_count(); ++e)
                       for (ArcIndex f = 0; f < g.arc_count(); ++f)
                           if (sq.matrix(f, e) != two_step_related(g, e, f)) ++bad;
                   return compare(std::to_string(bad) + " mismatches", "0 mismatches");
               });
    runner.run("modified.factorization", "(1-2u)^(2(m-n)) divides det(I - u(U^2)+)", modified_ok, modified_why, [&] {
        const auto z = modified_reciprocal(g, exec);  // throws on a nonzero remainder
        const auto rem = poly_exact_divide(z.polynomial, z.cofactor_base().pow(static_cast<unsigned long>(z.cofactor_exponent)));
        return compare(rem.remainder.is_zero() ? "0" : "nonzero", "0");
    });
    runner.run("modified.branch_spot_check", "p(u) = h(u) l(u) on a common sqrt branch, rel. tol 1e-8", modified_ok,
               modified_why, [&] {
                   const auto z = modified_reciprocal(g, exec);
                   double worst = 0.0;
                   bool ok = true;
                   for (const auto& c : z.branch_checks) {
                       worst = std::max(worst, c.relative_error);
                       ok = ok && c.pass;
                   }
                   std::ostringstream os;
                   os << "max relative error " << worst;
                   return truth(ok, os.str(), "<= 1e-08");
               });

    std::optional<InvariantReport> invariants;
    auto get_invariants = [&]() -> const InvariantReport& {
        if (!invariants) invariants = derivative_identities(g, exec);
        return *invariants;
    };
    auto identity_check = [&](const char* name) {
        const auto* c = get_invariants().find(name);
        if (!c) return Outcome{CheckStatus::fail, "identity missing", name};
        return compare(rational_string(c->lhs), rational_string(c->rhs));
    };
    runner.run("modified.p_half", "p(1/2) = 0", modified_ok, modified_why, [&] { return identity_check(identity::p_half); });
    runner.run("modified.p_prime_half",
               cls.bipartite ? "bipartite: p'(1/2) = 0" : "p'(1/2) = (m-n) kappa iota / 2^(2n-2)", modified_ok,
               modified_why, [&] { return identity_check(identity::p_prime_half); });
    runner.run("modified.p_second_half", "bipartite: p''(1/2) = (m-n)^2 kappa^2 / 2^(2n-5)",
               modified_ok && cls.bipartite, modified_ok ? "requires a bipartite graph" : modified_why,
               [&] { return identity_check(identity::p_second_half); });
    runner.run("modified.pole_order_at_half", "u = 1/2 has order 2(m-n+1) if bipartite, 2(m-n)+1 otherwise",
               modified_ok, modified_why, [&] {
                   const auto z = modified_reciprocal(g, exec);
                   const long expected = cls.bipartite ? 2 * (m - n + 1) : 2 * (m - n) + 1;
                   return compare(std::to_string(rational_root_multiplicity(z.polynomial, Rational(1, 2))),
                                  std::to_string(expected));
               });
    runner.run("modified.radius_of_convergence",
               "1/((Delta-1)^2+1) <= rho <= 1/((delta-1)^2+1), order 2 iff bipartite", modified_ok, modified_why, [&] {
                   const auto r = radius_of_convergence_check(g, exec);
                   std::ostringstream os;
                   os << "rho=" << (r.rho_exact ? rational_string(*r.rho_exact) : format_double(r.rho))
                      << " order=" << r.multiplicity << " bounds=" << (r.bounds_hold ? "ok" : "violated")
                      << " row_sums=[" << r.min_row_sum << "," << r.max_row_sum << "]";
                   std::ostringstream expect;
                   expect << "rho in [" << rational_string(r.lower_bound) << "," << rational_string(r.upper_bound)
                          << "] order=" << r.expected_multiplicity;
                   return truth(r.pass(), os.str(), expect.str());
               });
    runner.run("modified.two_step_cycle_series", "-u d/du log det(I - u(U^2)+) = sum N~_r u^r for r <= 4", modified_ok,
               modified_why, [&] {
                   const auto z = modified_reciprocal(g, exec);
                   const auto sums = power_sums_from_reciprocal(z.polynomial, 4);
                   std::string lhs, rhs;
                   for (unsigned r = 1; r <= 4; ++r) {
                       lhs += (r > 1 ? "," : "") + sums[r - 1].get_str();
                       rhs += (r > 1 ? "," : "") + std::to_string(count_two_step_cycles(g, r, exec));
                   }
                   return compare(lhs, rhs);
               });
    runner.run("modified.bipartite_even_multiplicities", "bipartite: every root of det(I - u(U^2)+) has even order",
               modified_ok && cls.bipartite, modified_ok ? "requires a bipartite graph" : modified_why, [&] {
                   const auto z = modified_reciprocal(g, exec);
                   std::string odd;
                   for (const auto& [factor, mult] : square_free_decomposition(z.polynomial))
                       if (mult % 2) odd += (odd.empty() ? "" : "; ") + factor.to_string() + "^" + std::to_string(mult);
                   return compare(odd.empty() ? "all even" : odd, "all even");
               });

    const bool iota_ok = cls.simple && cls.connected && !cls.bipartite && g.edge_count() <= kIotaEnumerationMaxEdges;
    runner.run("iota.determinant_vs_enumeration", "det(D + A) = sum over odd-unicyclic factors of 4^components", iota_ok,
               "requires a simple connected non-bipartite graph with m <= 20", [&] {
                   return compare(iota(g)->get_str(), iota_bruteforce(g, exec).get_str());
               });

    // Regular graphs.
    runner.run("lifted.charpoly",
               "det(xI - (U^2)+) = (x-2)^(2(m-n)) det(x^2 I - x(A^2-(2k-4)I) + A^2 + (k-2)^2 I)", regular_ok,
               regular_why, [&] {
                   const auto c = lifted_charpoly_check(g, exec);
                   return compare(c.direct.to_string("x"), c.factored.to_string("x"));
               });
    runner.run("lifted.poles_match", "poles of the modified zeta are 1/lambda over the lifted spectrum", regular_ok,
               regular_why, [&] {
                   const auto z = modified_reciprocal(g, exec);
                   std::vector<std::complex<double>> from_poles, from_lift;
                   for (const auto& r : poly_roots(z.polynomial))
                       for (unsigned i = 0; i < r.multiplicity; ++i) from_poles.push_back(r.value());
                   for (const auto& l : lifted_spectrum(g))
                       for (unsigned i = 0; i < l.multiplicity; ++i) from_lift.push_back(1.0 / l.value);
                   return truth(multisets_match(from_poles, from_lift, kGeometryTolerance),
                                std::to_string(from_poles.size()) + " poles", std::to_string(from_lift.size()) + " inverses");
               });
    runner.run("geometry.ihara", "Ramanujan iff all non-trivial Ihara poles lie on |u|^2 = 1/(k-1)", regular_ok,
               regular_why, [&] {
                   const auto geo = pole_geometry(g, ZetaKind::ihara, exec);
                   const bool ok = geo.report.ramanujan == geo.report.rh_analogue_holds && geo.report.real_band_holds;
                   return truth(ok,
                                std::string("ramanujan=") + (geo.report.ramanujan ? "true" : "false") +
                                    " rh=" + (geo.report.rh_analogue_holds ? "true" : "false") +
                                    " real_band=" + (geo.report.real_band_holds ? "true" : "false"),
                                "ramanujan == rh, real_band=true");
               });
    runner.run("geometry.modified",
               "Ramanujan implies non-trivial modified poles on the circle; real poles in the band, "
               "-1/(k-2) iff 0 in Spec(A)",
               regular_ok, regular_why, [&] {
                   const auto geo = pole_geometry(g, ZetaKind::modified, exec);
                   const double k = static_cast<double>(*cls.regular_degree);
                   bool zero_eigen = false;
                   for (const auto& ev : adjacency_spectrum(g).eigenvalues)
                       if (std::abs(ev.value) <= 1e-6) zero_eigen = true;
                   const bool has_pole = geo.poles.multiplicity_near({-1.0 / (k - 2.0), 0.0}) > 0;
                   const bool ok = (!geo.report.ramanujan || geo.report.rh_analogue_holds) && geo.report.real_band_holds &&
                                   zero_eigen == has_pole;
                   return truth(ok,
                                std::string("ramanujan=") + (geo.report.ramanujan ? "true" : "false") +
                                    " rh=" + (geo.report.rh_analogue_holds ? "true" : "false") +
                                    " real_band=" + (geo.report.real_band_holds ? "true" : "false") +
                                    " pole_-1/(k-2)=" + (has_pole ? "true" : "false"),
                                std::string("rh if ramanujan, real_band=true, pole_-1/(k-2)=") +
                                    (zero_eigen ? "true" : "false"));
               });

    return report;
}

} // namespace gzeta
