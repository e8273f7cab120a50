#include "ffcount/valueset.hpp"

#include <numeric>
#include <stdexcept>

#include "ffcount/polys.hpp"

namespace ffcount {

ValueSetReport value_set(const Field& field,
                         const std::function<std::uint32_t(std::uint32_t)>& f,
                         const std::optional<std::vector<std::uint32_t>>& domain) {
  if (domain && domain->empty()) {
    throw std::invalid_argument("value_set: restriction set must be nonempty");
  }
  const std::uint64_t q = field.q();
  std::vector<char> seen(q, 0);
  std::uint64_t count = 0;
  auto visit = [&](std::uint32_t x) {
    const std::uint32_t v = f(x);
    if (v >= q) throw std::invalid_argument("value_set: map produced an out-of-range index");
    if (!seen[v]) {
      seen[v] = 1;
      ++count;
    }
  };
  if (domain) {
    for (std::uint32_t x : *domain) {
      if (x >= q) throw std::invalid_argument("value_set: restriction element out of range");
      visit(x);
    }
  } else {
    for (std::uint64_t x = 0; x < q; ++x) visit(static_cast<std::uint32_t>(x));
  }

  ValueSetReport report;
  report.cardinality = count;
  if (q <= kValueRetentionLimit) {
    std::vector<std::uint32_t> values;
    values.reserve(count);
    for (std::uint64_t v = 0; v < q; ++v) {
      if (seen[v]) values.push_back(static_cast<std::uint32_t>(v));
    }
    report.values = std::move(values);
  }
  return report;
}

std::uint64_t power_value_count(std::uint64_t q, std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("power_value_count: exponent must be >= 1");
  return (q - 1) / std::gcd(m, q - 1) + 1;
}

ValueSetReport dickson_value_count(const Field& field, std::uint64_t m, const Element& a) {
  if (&a.field() != &field && a.field() != field) {
    throw std::invalid_argument("dickson_value_count: parameter from a different field");
  }
  if (a.is_zero()) {
    throw std::invalid_argument(
        "dickson_value_count: zero parameter gives a power map; use power_value_count");
  }
  if (m < 1) throw std::invalid_argument("dickson_value_count: degree must be >= 1");

  const std::uint64_t q = field.q();
  const std::uint32_t a_index = a.index();
  ValueSetReport report =
      value_set(field, [&](std::uint32_t x) { return dickson_eval_index(field, m, x, a_index); });

  Rational delta = 0;
  if (q % 2 == 1) {
    const unsigned r = two_adic_valuation(q * q - 1);
    const unsigned v2m = two_adic_valuation(m);
    if (v2m == r - 1 && !a.is_square()) {
      delta = 1;
    } else if (v2m >= 1 && v2m < r - 1) {
      delta = Rational(1, 2);
    }
  }
  const Rational total = Rational(q - 1, 2 * std::gcd(m, q - 1)) +
                         Rational(q + 1, 2 * std::gcd(m, q + 1)) + delta;
  if (boost::multiprecision::denominator(total) != 1) {
    throw std::logic_error("dickson_value_count: formula total is not an integer");
  }
  report.formula_cardinality =
      boost::multiprecision::numerator(total).convert_to<std::uint64_t>();
  report.delta = delta;
  return report;
}

std::uint64_t floor_image_lower_bound(std::uint64_t q, std::uint64_t degree) {
  if (degree < 1) throw std::invalid_argument("floor_image_lower_bound: degree must be >= 1");
  return (q - 1) / degree + 1;
}

}  // namespace ffcount
