#include "ffcount/numeric.hpp"

namespace ffcount {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t d : distinct_prime_factors(n)) {
    result -= result / d;
  }
  return result;
}

std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned s = 0;
  while (q % p == 0) {
    q /= p;
    ++s;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, s);
}

unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("two_adic_valuation: n must be positive");
  unsigned r = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++r;
  }
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt bigint_pow(BigInt base, std::uint64_t exp) {
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace ffcount
