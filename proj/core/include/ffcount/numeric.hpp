#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffcount {

// Exact arithmetic used throughout: solution counts can exceed 64 bits and
// the condition checkers compare sums of unit fractions, so no floating
// point appears anywhere on a formula path.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n >= 2, in increasing order.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Exact 2-adic valuation: the r with 2^r || n. Requires n >= 1.
unsigned two_adic_valuation(std::uint64_t n);

/// Writes q as p^s with p prime and s >= 1, when such a form exists.
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q);

BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt bigint_pow(BigInt base, std::uint64_t exp);

/// Thrown when an exhaustive operation would exceed its configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ffcount
