#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ffcount/gf.hpp"
#include "ffcount/numeric.hpp"

namespace ffcount {

/// Fields up to this order keep the explicit value list in reports.
inline constexpr std::uint64_t kValueRetentionLimit = std::uint64_t{1} << 12;

/// Image of a univariate map. `cardinality` always comes from enumeration;
/// `formula_cardinality` is filled by the closed-form routes and must agree
/// (the two are computed independently so disagreement is detectable).
/// `delta` is the half-integer correction term of the Dickson cardinality
/// formula; it is present only for Dickson value sets with nonzero parameter.
struct ValueSetReport {
  std::uint64_t cardinality = 0;
  std::optional<std::vector<std::uint32_t>> values;  // increasing element index
  std::optional<std::uint64_t> formula_cardinality;
  std::optional<Rational> delta;  // in {0, 1/2, 1}
};

/// Exact image of f over the field, or over a nonempty subset of it when
/// `domain` is given. f maps an element index to an element index.
ValueSetReport value_set(const Field& field,
                         const std::function<std::uint32_t(std::uint32_t)>& f,
                         const std::optional<std::vector<std::uint32_t>>& domain = std::nullopt);

/// |{x^m : x in F_q}| = (q-1)/gcd(m, q-1) + 1. Requires m >= 1.
std::uint64_t power_value_count(std::uint64_t q, std::uint64_t m);

/// Cardinality of the value set of D_m(X, a) for a != 0, by two routes at
/// once: enumeration (cardinality) and the closed formula
///   (q-1)/(2 gcd(m, q-1)) + (q+1)/(2 gcd(m, q+1)) + delta
/// (formula_cardinality), where, with 2^r exactly dividing q^2-1,
///   delta = 1    if q is odd, 2^{r-1} exactly divides m, a is a nonsquare,
///   delta = 1/2  if q is odd, m is even and 2^{r-1} does not divide m,
///   delta = 0    otherwise.
/// For even q the formula never consults r-1 (delta is 0 outright). The sum
/// is carried as an exact rational; a non-integral total throws
/// std::logic_error since it can only mean a bug. Requires m >= 1, a != 0
/// (power maps go through power_value_count instead).
ValueSetReport dickson_value_count(const Field& field, std::uint64_t m, const Element& a);

/// floor((q-1)/degree) + 1: any nonconstant polynomial map of this degree
/// has at least this many values, since each value has at most `degree`
/// preimages. Requires degree >= 1.
std::uint64_t floor_image_lower_bound(std::uint64_t q, std::uint64_t degree);

}  // namespace ffcount
