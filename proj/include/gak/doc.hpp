#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gak/algebra.hpp"
#include "gak/multivector.hpp"

namespace gak {

// A multivector with the algebra it lives in, as read from or written to JSON:
//   {"algebra": "r301", "coeffs": {"1": 1, "e31": 0.5}}
//   {"algebra": "r4", "coeffs": [1, 0, 0, 0, 0, 0, 0, 0]}
// A bare coefficient map or array is accepted when the algebra comes from
// elsewhere. Dense arrays are read in the even packed order, the bivector
// packed order (r301) or canonical blade order, told apart by length.
struct MultivectorDoc {
  Algebra algebra;
  Multivector value;
};

// Throws invalid_argument on malformed input, unknown labels, or when
// algebra_tag contradicts the document's own tag.
MultivectorDoc parse_doc(std::string_view text, std::optional<std::string> algebra_tag = std::nullopt);
MultivectorDoc parse_doc_json(const nlohmann::json& j,
                              std::optional<std::string> algebra_tag = std::nullopt);

// Coefficient map under the algebra's preferred labels. Coefficients with
// |c| <= chop are left out (exact zeros always are).
nlohmann::json coeffs_to_json(const Algebra& alg, const Multivector& x, double chop = 0.0);
nlohmann::json to_json(const MultivectorDoc& doc, double chop = 0.0);

nlohmann::json error_json(ErrorKind kind, std::string_view message);

}  // namespace gak
