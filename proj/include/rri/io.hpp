#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rri/isolator.hpp"
#include "rri/poly.hpp"

namespace rri {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* One line of whitespace-separated decimal integers, ascending degree. */
BigIntPoly parse_coeff_list(const std::string& text);
std::string serialize_coeff_list(const BigIntPoly& f);

/* {"degree": n, "coefficients": ["c0", ..., "cn"]} with exact decimal
 * strings; the degree field must match the canonical degree. */
BigIntPoly parse_poly_json(const std::string& text);
std::string serialize_poly_json(const BigIntPoly& f);

/* {"m": "<odd mantissa>", "e": <exponent>}, always the canonical form */
nlohmann::ordered_json dyadic_to_json(const Dyadic& d);

nlohmann::ordered_json descriptor_to_json(const RootDescriptor& r);

nlohmann::ordered_json result_to_json(int degree, bool square_free_applied,
                                      const IsolationResult& result, bool with_stats);

std::string render_result_text(int degree, bool square_free_applied,
                               const IsolationResult& result, bool with_stats);

}  // namespace rri
