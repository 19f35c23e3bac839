#pragma once

#include <string>

#include "json.hpp"
#include "psmono/mobius.hpp"

namespace psmono {

// Text format: terms `c`, `c*e<k>`, `c*e<k1><k2>...` with ascending indices,
// joined by ` + ` / ` - `, e.g. "2 + 6*e2 - 3*e12". The parser accepts any
// index order and duplicate indices and normalizes through blade products.
// Indices above 9 are comma-separated ("e2,10") in both directions.
std::string to_text(const Multivector& m);
Multivector multivector_from_text(const std::string& text, int n);

/// JSON object mapping blade key strings ("" scalar, "12" for e_1 e_2).
nlohmann::json to_json(const Multivector& m);
Multivector multivector_from_json(const nlohmann::json& j, int n);

/// Points serialize as plain coordinate arrays.
nlohmann::json to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CliffordPolynomial& p);
CliffordPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StemPolynomial& s);
StemPolynomial stem_from_json(const nlohmann::json& j);

DomainDescriptor domain_from_json(const SliceContext& ctx, const nlohmann::json& j);

nlohmann::json to_json(const SliceContext& ctx, const VahlenMatrix& m);
VahlenMatrix vahlen_from_json(const SliceContext& ctx, const nlohmann::json& j);

/// Parse a 1-vector expression such as "e2" or "0.6*e2 + 0.8*e3" into an
/// element of the sphere of the context.
Omega omega_from_text(const SliceContext& ctx, const std::string& text);

}  // namespace psmono
