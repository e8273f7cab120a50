#include "ffcount/notation.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace ffcount {

namespace {

using nlohmann::json;

Element element_from_json(const Field& field, const json& value, const std::string& what) {
  if (value.is_number_integer()) {
    return field.element(field.from_integer(value.get<std::int64_t>()));
  }
  if (value.is_array()) {
    std::vector<std::uint32_t> coeffs;
    coeffs.reserve(value.size());
    for (const auto& entry : value) {
      if (!entry.is_number_integer()) {
        throw std::invalid_argument(what + ": coefficients must be integers");
      }
      const auto c = entry.get<std::int64_t>();
      if (c < 0 || static_cast<std::uint64_t>(c) >= field.p()) {
        throw std::invalid_argument(what + ": coefficient out of range [0, p)");
      }
      coeffs.push_back(static_cast<std::uint32_t>(c));
    }
    return field.element(field.from_coeffs(coeffs));
  }
  throw std::invalid_argument(what + ": expected an integer or a coefficient array");
}

}  // namespace

std::pair<std::uint64_t, unsigned> parse_field_notation(const std::string& text) {
  const auto parse_part = [&](const std::string& part,
                              const char* what) -> std::uint64_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument(std::string("field notation: ") + what +
                                  " must be a positive integer, got \"" + text + "\"");
    }
    try {
      return std::stoull(part);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument(std::string("field notation: ") + what +
                                  " out of range in \"" + text + "\"");
    }
  };

  const auto caret = text.find('^');
  const std::uint64_t p = parse_part(text.substr(0, caret), "characteristic");
  std::uint64_t s = 1;
  if (caret != std::string::npos) {
    s = parse_part(text.substr(caret + 1), "degree");
  }
  if (p == 0 || s == 0 || s > 64) {
    throw std::invalid_argument("field notation: \"" + text + "\" is not a prime power");
  }
  return {p, static_cast<unsigned>(s)};
}

std::string field_notation(const Field& field) {
  std::string out = std::to_string(field.p());
  if (field.degree() > 1) {
    out += "^" + std::to_string(field.degree());
  }
  return out;
}

ParsedEquation parse_equation_json(const std::string& json_text, std::uint64_t max_order) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("equation JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("equation JSON: top level must be an object");
  }
  if (!doc.contains("field") || !doc["field"].is_string()) {
    throw std::invalid_argument("equation JSON: missing \"field\" string");
  }
  if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty()) {
    throw std::invalid_argument("equation JSON: \"terms\" must be a non-empty array");
  }

  const auto [p, s] = parse_field_notation(doc["field"].get<std::string>());

  ParsedEquation parsed;
  parsed.field = std::make_unique<Field>(p, s, max_order);
  const Field& field = *parsed.field;

  Element c = field.zero();
  if (doc.contains("c")) {
    c = element_from_json(field, doc["c"], "\"c\"");
  }

  std::vector<Term> terms;
  terms.reserve(doc["terms"].size());
  for (const auto& entry : doc["terms"]) {
    if (!entry.is_object()) {
      throw std::invalid_argument("equation JSON: each term must be an object");
    }
    if (!entry.contains("b") || !entry.contains("m")) {
      throw std::invalid_argument("equation JSON: each term needs \"b\" and \"m\"");
    }
    if (!entry["m"].is_number_integer()) {
      throw std::invalid_argument("equation JSON: \"m\" must be an integer");
    }
    const auto m = entry["m"].get<std::int64_t>();
    if (m < 1) {
      throw std::invalid_argument("equation JSON: \"m\" must be at least 1");
    }
    Term term{element_from_json(field, entry["b"], "\"b\""),
              static_cast<std::uint64_t>(m), field.zero()};
    if (entry.contains("a")) {
      term.a = element_from_json(field, entry["a"], "\"a\"");
    }
    terms.push_back(term);
  }

  parsed.eq.emplace(field, std::move(terms), c);
  return parsed;
}

}  // namespace ffcount
