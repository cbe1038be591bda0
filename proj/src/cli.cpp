#include "gzeta/cli.hpp"

#include "gzeta/errors.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/plot.hpp"
#include "gzeta/serialize.hpp"
#include "gzeta/spectra.hpp"
#include "gzeta/verify.hpp"
#include "gzeta/zeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gzeta::cli {

namespace {

struct Config {
    std::string edges_file;
    std::string graph6;
    std::string named;
    bool json = false;
    bool text = false;
    std::string csv_path;
    std::string svg_path;
    bool modified = false;
    double tolerance = kGeometryTolerance;
    bool verbose = false;
    std::string gen_name;
    std::string gen_format = "edges";
};

/// Exit with a specific code and message from deep inside a command.
struct CommandExit {
    int code;
    std::string message;
};

void add_graph_source(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--edges", cfg.edges_file, "Edge-list file ('-' for stdin)");
    cmd->add_option("--graph6", cfg.graph6, "graph6 string");
    cmd->add_option("--named", cfg.named, "Named graph: petersen, cube, k4, k33, cycle:5, complete:6, ...");
    cmd->add_flag("-v,--verbose", cfg.verbose, "Diagnostics on stderr");
}

void add_output_flags(CLI::App* cmd, Config& cfg) {
    cmd->add_flag("--json", cfg.json, "JSON output");
    cmd->add_flag("--text", cfg.text, "Aligned text output (default)");
}

Graph load_graph(const Config& cfg, std::istream& in) {
    const int sources = !cfg.edges_file.empty() + !cfg.graph6.empty() + !cfg.named.empty();
    if (sources != 1) throw CommandExit{kInputError, "exactly one of --edges, --graph6, --named is required"};
    try {
        if (!cfg.named.empty()) return generate_from_spec(cfg.named);
        if (!cfg.graph6.empty()) return parse_graph6(cfg.graph6);
        std::string text;
        if (cfg.edges_file == "-") {
            text.assign(std::istreambuf_iterator<char>(in), {});
        } else {
            std::ifstream file(cfg.edges_file);
            if (!file) throw CommandExit{kInputError, "cannot open '" + cfg.edges_file + "'"};
            text.assign(std::istreambuf_iterator<char>(file), {});
        }
        try {
            return parse_edge_list(text);
        } catch (const ParseError& e) {
            throw CommandExit{kInputError, cfg.edges_file + ": " + e.what()};
        }
    } catch (const ParseError& e) {
        throw CommandExit{kInputError, e.what()};
    } catch (const InputError& e) {
        throw CommandExit{kInputError, e.what()};
    }
}

void write_to(const std::string& path, const std::string& data, std::ostream& out) {
    if (path == "-") {
        out << data;
        return;
    }
    std::ofstream file(path);
    if (!file) throw CommandExit{kInputError, "cannot write '" + path + "'"};
    file << data;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_kv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) out << k << std::string(width - k.size(), ' ') << " = " << v << '\n';
}

// Ihara reciprocal from the edge determinant when (U)+ is the
// non-backtracking operator (min degree >= 2), otherwise the vertex form.
ZetaReciprocal ihara_for(const Graph& g) {
    if (!classify(g).connected) throw HypothesisError({"G must be connected"});
    return classify(g).min_degree >= 2 ? ihara_reciprocal_edge(g) : ihara_reciprocal_bass(g);
}

int cmd_info(const Config& cfg, const Graph& g, std::ostream& out) {
    const auto c = classify(g);
    const auto elig = validate_for_modified_zeta(g);
    if (cfg.json) {
        nlohmann::json j{{"n", g.vertex_count()},
                         {"m", g.edge_count()},
                         {"min_degree", c.min_degree},
                         {"max_degree", c.max_degree},
                         {"connected", c.connected},
                         {"bipartite", c.bipartite},
                         {"simple", c.simple},
                         {"modified_eligible", elig.ok()},
                         {"violations", elig.violations}};
        j["k"] = c.regular_degree ? nlohmann::json(*c.regular_degree) : nlohmann::json(nullptr);
        out << j.dump(2) << '\n';
        return kSuccess;
    }
    out << "n=" << g.vertex_count() << " m=" << g.edge_count() << " k="
        << (c.regular_degree ? std::to_string(*c.regular_degree) : std::string("-")) << " bipartite=" << yes_no(c.bipartite)
        << '\n';
    print_kv(out, {{"vertices", std::to_string(g.vertex_count())},
                   {"edges", std::to_string(g.edge_count())},
                   {"min_degree", std::to_string(c.min_degree)},
                   {"max_degree", std::to_string(c.max_degree)},
                   {"regular", c.regular_degree ? std::to_string(*c.regular_degree) : "no"},
                   {"connected", yes_no(c.connected)},
                   {"bipartite", yes_no(c.bipartite)},
                   {"simple", yes_no(c.simple)},
                   {"modified_eligible", yes_no(elig.ok())}});
    for (const auto& v : elig.violations) out << "  violation: " << v << '\n';
    return kSuccess;
}

int cmd_zeta(const Config& cfg, const Graph& g, std::ostream& out) {
    const ZetaReciprocal z = cfg.modified ? modified_reciprocal(g) : ihara_for(g);
    if (cfg.json) {
        out << to_json(z).dump(2) << '\n';
        return kSuccess;
    }
    print_kv(out, {{"kind", to_string(z.kind)},
                   {"form", to_string(z.form)},
                   {"degree", std::to_string(z.polynomial.degree())},
                   {"reciprocal", z.polynomial.to_string()},
                   {"cofactor", z.cofactor_string()},
                   {"core_degree", std::to_string(z.core.degree())},
                   {"core", z.core.to_string()}});
    return kSuccess;
}

PoleSet pole_set_for(const Graph& g, ZetaKind kind, double tolerance) {
    const auto c = classify(g);
    const ZetaReciprocal z = kind == ZetaKind::modified ? modified_reciprocal(g) : ihara_for(g);
    const bool annotate = c.simple && c.connected && c.regular_degree && *c.regular_degree >= 3;
    return poles(z, annotate ? c.regular_degree : std::nullopt, tolerance);
}

int cmd_poles(const Config& cfg, const Graph& g, std::ostream& out) {
    const ZetaKind kind = cfg.modified ? ZetaKind::modified : ZetaKind::ihara;
    const PoleSet set = pole_set_for(g, kind, cfg.tolerance);
    bool wrote = false;
    if (!cfg.svg_path.empty()) {
        const char* title = kind == ZetaKind::ihara ? "(i) poles of the Ihara zeta function"
                                                    : "(ii) poles of the modified zeta function";
        write_to(cfg.svg_path, render_pole_plot({{title, set}}), out);
        wrote = true;
    }
    if (!cfg.csv_path.empty()) {
        write_to(cfg.csv_path, poles_to_csv(set), out);
        wrote = true;
    }
    if (cfg.json) {
        nlohmann::json poles_json = nlohmann::json::array();
        for (const auto& p : set.poles)
            poles_json.push_back({{"re", p.root.real},
                                  {"im", p.root.imag},
                                  {"multiplicity", p.root.multiplicity},
                                  {"annotation", annotation_string(p.annotation)}});
        nlohmann::json j{{"kind", to_string(kind)}, {"poles", poles_json}, {"total_multiplicity", set.total_multiplicity()}};
        if (set.circle) j["circle"] = {{"center", set.circle->center}, {"radius", set.circle->radius}};
        out << j.dump(2) << '\n';
        wrote = true;
    }
    if (!wrote) out << poles_to_csv(set);
    return kSuccess;
}

int cmd_plot(const Config& cfg, const Graph& g, std::ostream& out) {
    if (cfg.svg_path.empty()) throw CommandExit{kInputError, "plot requires --svg PATH"};
    std::vector<PlotPanel> panels{{"(i) poles of the Ihara zeta function", pole_set_for(g, ZetaKind::ihara, cfg.tolerance)}};
    if (validate_for_modified_zeta(g).ok())
        panels.push_back({"(ii) poles of the modified zeta function", pole_set_for(g, ZetaKind::modified, cfg.tolerance)});
    write_to(cfg.svg_path, render_pole_plot(panels), out);
    return kSuccess;
}

int cmd_invariants(const Config& cfg, const Graph& g, std::ostream& out) {
    const InvariantReport r = derivative_identities(g);
    if (cfg.json) {
        out << to_json(r).dump(2) << '\n';
    } else {
        std::ostringstream line;
        line << "kappa=" << r.kappa.get_str();
        if (r.iota) line << " iota=" << r.iota->get_str();
        for (const auto& c : r.identities)
            if (c.name != identity::iota_enumeration) line << ' ' << c.name << '=' << rational_string(c.lhs);
        line << " pass=" << (r.pass() ? "true" : "false");
        out << line.str() << '\n';
        for (const auto& c : r.identities)
            out << "  " << std::left << std::setw(18) << c.name << rational_string(c.lhs)
                << (c.pass ? " == " : " != ") << rational_string(c.rhs) << '\n';
    }
    return r.pass() ? kSuccess : kVerificationFailure;
}

int cmd_verify(const Config& cfg, const Graph& g, std::ostream& out) {
    const VerificationReport r = verify_all(g);
    if (cfg.json) {
        out << to_json(r).dump(2) << '\n';
    } else {
        for (const auto& rec : r.records) {
            out << '[' << std::setw(14) << std::left << to_string(rec.status) << "] " << std::setw(40) << rec.identity;
            if (rec.status == CheckStatus::not_applicable) {
                out << rec.rhs;
            } else {
                out << std::fixed << std::setprecision(1) << rec.elapsed_ms << " ms";
                if (rec.status == CheckStatus::fail) out << "  lhs=" << rec.lhs << "  rhs=" << rec.rhs;
            }
            out << '\n';
        }
        out << "overall: " << (r.pass() ? "pass" : "FAIL") << '\n';
    }
    return r.pass() ? kSuccess : kVerificationFailure;
}

int cmd_gen(const Config& cfg, std::ostream& out) {
    Graph g = [&] {
        try {
            return generate_from_spec(cfg.gen_name);
        } catch (const InputError& e) {
            throw CommandExit{kInputError, e.what()};
        }
    }();
    if (cfg.gen_format == "graph6") {
        out << emit_graph6(g) << '\n';
    } else {
        out << emit_edge_list(g);
    }
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Ihara and modified zeta functions of graphs from Grover-walk positive supports", "gzeta"};
    app.require_subcommand(1);

    auto* info = app.add_subcommand("info", "Graph summary and modified-zeta eligibility");
    auto* zeta = app.add_subcommand("zeta", "Reciprocal zeta polynomial with its factorization");
    auto* poles_cmd = app.add_subcommand("poles", "Poles as CSV, JSON or an SVG scatter plot");
    auto* plot = app.add_subcommand("plot", "Two-panel SVG of Ihara and modified poles");
    auto* inv = app.add_subcommand("invariants", "Spanning trees, iota and the special-value identities");
    auto* verify = app.add_subcommand("verify", "Run every applicable identity check");
    auto* gen = app.add_subcommand("gen", "Emit a named graph as an edge list or graph6");

    for (auto* cmd : {info, zeta, poles_cmd, plot, inv, verify}) add_graph_source(cmd, cfg);
    for (auto* cmd : {info, zeta, poles_cmd, inv, verify}) add_output_flags(cmd, cfg);
    zeta->add_flag("--modified", cfg.modified, "Modified zeta (positive support of U^2)");
    poles_cmd->add_flag("--modified", cfg.modified, "Modified zeta (positive support of U^2)");
    poles_cmd->add_option("--csv", cfg.csv_path, "Write CSV to PATH ('-' for stdout)");
    for (auto* cmd : {poles_cmd, plot}) {
        cmd->add_option("--svg", cfg.svg_path, "Write SVG to PATH ('-' for stdout)");
        cmd->add_option("--tolerance", cfg.tolerance, "Tolerance for circle and trivial-pole tests")
            ->check(CLI::PositiveNumber);
    }
    gen->add_option("name", cfg.gen_name, "Graph name, e.g. petersen, k4, cycle:5")->required();
    gen->add_option("--format", cfg.gen_format, "edges or graph6")->check(CLI::IsMember({"edges", "graph6"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        // Subcommand help lands here too.
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kSuccess;
        }
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (gen->parsed()) return cmd_gen(cfg, out);
        const Graph g = load_graph(cfg, in);
        if (cfg.verbose)
            err << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
        if (info->parsed()) return cmd_info(cfg, g, out);
        if (zeta->parsed()) return cmd_zeta(cfg, g, out);
        if (poles_cmd->parsed()) return cmd_poles(cfg, g, out);
        if (plot->parsed()) return cmd_plot(cfg, g, out);
        if (inv->parsed()) return cmd_invariants(cfg, g, out);
        if (verify->parsed()) return cmd_verify(cfg, g, out);
    } catch (const CommandExit& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const HypothesisError& e) {
        err << "error: hypothesis violated: " << e.what() << '\n';
        return kHypothesisViolation;
    } catch (const TheoremViolation& e) {
        err << "error: identity violated: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace gzeta::cli
