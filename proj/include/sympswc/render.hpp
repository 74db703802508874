#pragma once

// Text, LaTeX and JSON forms of a GradedPoly, plus the parsers used to read
// them back. All three share one canonical term order: ascending weighted
// degree, and within a degree descending lexicographic exponents
// (so e1 precedes e2, and E1^2 precedes E2).

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sympswc/poly.hpp"

namespace sympswc {

std::vector<std::pair<Monomial, mpz_class>> canonical_terms(const GradedPoly& p);

std::string to_text(const GradedPoly& p);
std::string to_latex(const GradedPoly& p);

// LaTeX symbol for a ring variable: e3 -> \mathfrak{e}_{3}, E2 -> \mathcal{E}_{2},
// Ex1 -> \mathcal{E}_{1}(\mathbf{x}), v4 -> v_{4}.
std::string latex_symbol(const std::string& name);

// {"n":..,"cap":..,"weights":[..],"terms":[{"exp":[..],"coeff":".."}]}
nlohmann::ordered_json to_json(const GradedPoly& p, std::size_t n);
std::string to_json_string(const GradedPoly& p, std::size_t n);

// Inverse of to_json into the given ring (weights must agree).
GradedPoly from_json(const nlohmann::json& j, const RingPtr& ring);

// Inverses of to_text / to_latex for the given ring. Throw ErrorKind::Parse.
GradedPoly parse_text(const std::string& s, const RingPtr& ring, Cap cap = std::nullopt);
GradedPoly parse_latex(const std::string& s, const RingPtr& ring, Cap cap = std::nullopt);

}  // namespace sympswc
