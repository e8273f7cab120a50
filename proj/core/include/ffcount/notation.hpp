#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "ffcount/equations.hpp"
#include "ffcount/gf.hpp"

namespace ffcount {

/// Parses "p^s" (or bare "p", meaning s = 1) into (p, s). Primality and the
/// size bound are checked later by make_field.
std::pair<std::uint64_t, unsigned> parse_field_notation(const std::string& text);

/// Inverse of parse_field_notation: "7" or "5^2".
std::string field_notation(const Field& field);

/// An equation read from JSON together with the field it lives in. `eq`
/// points into `field`, which is heap-held so the struct can be moved.
struct ParsedEquation {
  std::unique_ptr<Field> field;
  std::optional<EquationSpec> eq;
};

/// Reads {"field": "p^s", "c": <element>, "terms": [{"b": <element>,
/// "m": int, "a": <element>}, ...]}. Elements are integers (reduced into the
/// prime subfield) or coefficient arrays, constant term first; a term's "a"
/// may be omitted and defaults to zero. Malformed input throws
/// std::invalid_argument.
ParsedEquation parse_equation_json(const std::string& json_text,
                                   std::uint64_t max_order = kDefaultMaxFieldOrder);

}  // namespace ffcount
