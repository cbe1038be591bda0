#pragma once

#include "gzeta/exact.hpp"
#include "gzeta/spectra.hpp"
#include "gzeta/zeta.hpp"

#include <json.hpp>

#include <string>

namespace gzeta {

/// {"coeffs": ["1", "-2", "1"]}, lowest degree first.
nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

/// "num/den", or just "num" for integers.
std::string rational_string(const Rational& q);

nlohmann::json to_json(const ZetaReciprocal& z);
nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const RadiusReport& r);

/// Shortest round-trippable-enough decimal (%.12g), with -0 printed as 0.
std::string format_double(double v);

/// Header "re,im,multiplicity,annotation"; annotation joins the set flags
/// with ';' (trivial, real, ihara_circle, modified_circle) or is "none".
std::string poles_to_csv(const PoleSet& set);
std::string annotation_string(const PoleAnnotation& a);

} // namespace gzeta
