#include "gzeta/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = gzeta::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("gzeta_test_" + name);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("info") {
    const Result p = run({"info", "--named", "petersen"});
    CHECK(p.code == 0);
    CHECK(contains(p.out, "n=10 m=15 k=3 bipartite=no"));
    CHECK(contains(run({"info", "--named", "k33"}).out, "bipartite=yes"));

    const auto j = nlohmann::json::parse(run({"info", "--named", "cycle:5", "--json"}).out);
    CHECK(j["modified_eligible"] == false);
    CHECK(j["k"] == 2);
}

TEST_CASE("info reports parse errors with the line") {
    const auto path = temp_file("bad.txt");
    std::ofstream(path) << "0 1\n1 2\nthree 4\n";
    const Result r = run({"info", "--edges", path.string()});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "line 3"));
    std::filesystem::remove(path);

    CHECK(run({"info", "--edges", "/nonexistent/file"}).code == 2);
}

TEST_CASE("edges from stdin") {
    const Result r = run({"info", "--edges", "-"}, "0 1\n1 2\n2 0\n");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "n=3 m=3 k=2"));
}

TEST_CASE("exactly one graph source") {
    CHECK(run({"info"}).code == 2);
    CHECK(run({"info", "--named", "k4", "--graph6", "C~"}).code == 2);
}

TEST_CASE("zeta") {
    const auto ihara = nlohmann::json::parse(run({"zeta", "--named", "k4", "--json"}).out);
    CHECK(ihara["degree"] == 12);
    CHECK(ihara["polynomial"]["coeffs"][0] == "1");
    CHECK(ihara["polynomial"]["coeffs"].size() == 13);

    const Result m = run({"zeta", "--named", "k4", "--modified", "--json"});
    CHECK(m.code == 0);
    const auto mod = nlohmann::json::parse(m.out);
    CHECK(mod["cofactor"] == "(1-2u)^4");
    CHECK(mod["core_degree"] == 8);

    const Result bad = run({"zeta", "--named", "cycle:5", "--modified"});
    CHECK(bad.code == 3);
    CHECK(contains(bad.err, "δ(G) ≥ 3 required"));

    const Result text = run({"zeta", "--named", "k4"});
    CHECK(contains(text.out, "(1-u^2)^2"));
}

TEST_CASE("JSON output is deterministic") {
    CHECK(run({"zeta", "--named", "petersen", "--modified", "--json"}).out ==
          run({"zeta", "--named", "petersen", "--modified", "--json"}).out);
}

TEST_CASE("poles") {
    const Result csv = run({"poles", "--named", "petersen", "--modified", "--csv", "-"});
    CHECK(csv.code == 0);
    CHECK(contains(csv.out, "\n0.2,0,1,trivial\n"));
    CHECK(contains(csv.out, "\n0.5,0,11,trivial\n"));

    std::istringstream rows(run({"poles", "--named", "k33", "--modified"}).out);
    std::string line;
    std::getline(rows, line);
    int count = 0;
    while (std::getline(rows, line)) {
        std::stringstream ss(line);
        std::string re, im, mult;
        std::getline(ss, re, ',');
        std::getline(ss, im, ',');
        std::getline(ss, mult, ',');
        CHECK(std::stoi(mult) % 2 == 0);
        ++count;
    }
    CHECK(count > 0);
}

TEST_CASE("poles --svg") {
    const auto path = temp_file("petersen.svg");
    CHECK(run({"poles", "--named", "petersen", "--svg", path.string()}).code == 0);
    std::ifstream file(path);
    const std::string svg((std::istreambuf_iterator<char>(file)), {});
    CHECK(contains(svg, "<svg"));
    std::size_t circles = 0;
    for (std::size_t at = svg.find("reference-circle"); at != std::string::npos; at = svg.find("reference-circle", at + 1))
        ++circles;
    CHECK(circles == 1);
    CHECK(contains(svg, "data-radius=\"0.707106781187\""));
    std::filesystem::remove(path);
}

TEST_CASE("plot") {
    const Result r = run({"plot", "--named", "petersen", "--svg", "-"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Ihara"));
    CHECK(contains(r.out, "modified"));
    CHECK(run({"plot", "--named", "petersen"}).code == 2);
}

TEST_CASE("invariants") {
    const Result k4 = run({"invariants", "--named", "k4"});
    CHECK(k4.code == 0);
    CHECK(contains(k4.out, "kappa=16"));
    CHECK(contains(k4.out, "iota=48"));
    CHECK(contains(k4.out, "p_prime_half=24"));
    CHECK(contains(k4.out, "pass=true"));

    const Result k33 = run({"invariants", "--named", "k33"});
    CHECK(contains(k33.out, "p_prime_half=0"));
    CHECK(contains(k33.out, "p_second_half=59049/128"));
    CHECK(contains(k33.out, "pass=true"));

    CHECK(contains(run({"invariants", "--named", "petersen"}).out, "f_prime_one=20000"));

    const auto j = nlohmann::json::parse(run({"invariants", "--named", "petersen", "--json"}).out);
    CHECK(j["kappa"] == "2000");
    CHECK(j["pass"] == true);
}

TEST_CASE("verify") {
    const Result p = run({"verify", "--named", "petersen"});
    CHECK(p.code == 0);
    CHECK(contains(p.out, "overall: pass"));
    CHECK_FALSE(contains(p.out, "[fail"));

    const Result k33 = run({"verify", "--named", "k33"});
    CHECK(k33.code == 0);
    CHECK(contains(k33.out, "[not-applicable] iota.determinant_vs_enumeration"));

    // graph6 "C~" is K4; timings differ, so compare statuses only.
    auto statuses = [](const std::string& json) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& r : nlohmann::json::parse(json)["records"]) out.emplace_back(r["identity"], r["status"]);
        return out;
    };
    CHECK(statuses(run({"verify", "--graph6", "C~", "--json"}).out) ==
          statuses(run({"verify", "--named", "k4", "--json"}).out));

    // A 4-cycle is not eligible for the modified checks; they are skipped.
    CHECK(run({"verify", "--named", "cycle:4"}).code == 0);
}

TEST_CASE("gen") {
    CHECK(run({"gen", "k4", "--format", "graph6"}).out == "C~\n");
    const std::string edges = run({"gen", "petersen", "--format", "edges"}).out;
    CHECK(std::count(edges.begin(), edges.end(), '\n') == 15);
    CHECK(run({"gen", "nosuch"}).code == 2);
    CHECK(run({"gen", "k4", "--format", "xml"}).code == 2);
}

TEST_CASE("help and usage errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"poles", "--named", "k4", "--tolerance", "-1"}).code == 2);
}

} // TEST_SUITE
