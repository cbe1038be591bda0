#pragma once

#include "gzeta/exact.hpp"
#include "gzeta/graph.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gzeta {

enum class CheckStatus { pass, fail, not_applicable };

const char* to_string(CheckStatus s);

struct CheckRecord {
    std::string identity;  ///< stable dotted name, e.g. "ihara.determinant_forms"
    std::string anchor;    ///< short description of the statement checked
    CheckStatus status;
    std::string lhs;
    std::string rhs;
    double elapsed_ms;
};

struct VerificationReport {
    std::vector<CheckRecord> records;

    /// True iff no record failed.
    bool pass() const;
    const CheckRecord* find(const std::string& identity) const;
};

/// Runs every identity whose hypotheses `g` satisfies; the rest are recorded
/// as not-applicable. Never stops at the first failure.
VerificationReport verify_all(const Graph& g, Execution exec = Execution::parallel);

nlohmann::json to_json(const VerificationReport& r);

} // namespace gzeta
