#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzeta {

/// Malformed textual input (edge list, graph6, named-graph spec).
/// `line` is 1-based; 0 when the format has no line structure.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed but unusable input: unknown generator, bad parameter, size cap.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The graph does not satisfy the hypotheses an operation requires.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s;
        for (const auto& item : v) {
            if (!s.empty()) s += "; ";
            s += item;
        }
        return s;
    }

    std::vector<std::string> violations_;
};

/// An identity that must hold for every admissible graph failed to hold.
class TheoremViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gzeta
