#include "gzeta/serialize.hpp"

#include "gzeta/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gzeta {

using nlohmann::json;

json to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return json{{"coeffs", coeffs}};
}

IntPolynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError("polynomial JSON must be {\"coeffs\": [...]}");
    std::vector<BigInt> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw ParseError("polynomial coefficients must be decimal strings");
        BigInt v;
        if (v.set_str(c.get<std::string>(), 10) != 0) throw ParseError("bad coefficient '" + c.get<std::string>() + "'");
        coeffs.push_back(v);
    }
    return IntPolynomial(std::move(coeffs));
}

std::string rational_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

json to_json(const ZetaReciprocal& z) {
    json j{{"kind", to_string(z.kind)},
           {"form", to_string(z.form)},
           {"degree", z.polynomial.degree()},
           {"polynomial", to_json(z.polynomial)},
           {"cofactor", z.cofactor_string()},
           {"cofactor_exponent", z.cofactor_exponent},
           {"core", to_json(z.core)},
           {"core_degree", z.core.degree()}};
    if (!z.branch_checks.empty()) {
        json checks = json::array();
        for (const auto& c : z.branch_checks)
            checks.push_back({{"u", {{"re", c.u.real()}, {"im", c.u.imag()}}},
                              {"relative_error", c.relative_error},
                              {"pass", c.pass}});
        j["branch_checks"] = checks;
    }
    return j;
}

json to_json(const InvariantReport& r) {
    json j{{"kappa", r.kappa.get_str()}, {"pass", r.pass()}};
    j["iota"] = r.iota ? json(r.iota->get_str()) : json(nullptr);
    j["iota_bruteforce"] = r.iota_bruteforce ? json(r.iota_bruteforce->get_str()) : json(nullptr);
    json ids = json::array();
    for (const auto& c : r.identities) {
        ids.push_back({{"name", c.name}, {"lhs", rational_string(c.lhs)}, {"rhs", rational_string(c.rhs)}, {"pass", c.pass}});
        j[c.name] = rational_string(c.lhs);
    }
    j["identities"] = ids;
    return j;
}

json to_json(const RadiusReport& r) {
    json j{{"rho", r.rho},
           {"alpha", r.alpha},
           {"lower_bound", rational_string(r.lower_bound)},
           {"upper_bound", rational_string(r.upper_bound)},
           {"multiplicity", r.multiplicity},
           {"expected_multiplicity", r.expected_multiplicity},
           {"min_row_sum", r.min_row_sum},
           {"max_row_sum", r.max_row_sum},
           {"bounds_hold", r.bounds_hold},
           {"nearest_to_origin", r.nearest_to_origin},
           {"row_sums_bracket", r.row_sums_bracket},
           {"pass", r.pass()}};
    j["rho_exact"] = r.rho_exact ? json(rational_string(*r.rho_exact)) : json(nullptr);
    return j;
}

std::string format_double(double v) {
    if (v == 0.0 || std::abs(v) < 1e-15) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string annotation_string(const PoleAnnotation& a) {
    std::string s;
    auto add = [&](bool flag, const char* name) {
        if (!flag) return;
        if (!s.empty()) s += ';';
        s += name;
    };
    add(a.trivial, "trivial");
    add(a.real, "real");
    add(a.on_ihara_circle, "ihara_circle");
    add(a.on_modified_circle, "modified_circle");
    return s.empty() ? "none" : s;
}

std::string poles_to_csv(const PoleSet& set) {
    std::ostringstream os;
    os << "re,im,multiplicity,annotation\n";
    for (const auto& p : set.poles)
        os << format_double(p.root.real) << ',' << format_double(p.root.imag) << ',' << p.root.multiplicity << ','
           << annotation_string(p.annotation) << '\n';
    return os.str();
}

} // namespace gzeta
