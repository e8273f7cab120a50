#include "ffcount/gf.hpp"

#include "ffcount/numeric.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ffcount {

namespace {

// q <= 2^20, so s <= 20 for any p.
constexpr unsigned kMaxDegree = 24;
// Extension fields up to this order get exp/log multiplication tables.
constexpr std::uint64_t kMulTableLimit = std::uint64_t{1} << 16;

// Remainder of a mod b over Z_p, dense coefficient vectors, constant first.
// b is monic. Used only by the irreducibility search at construction time.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i < db; ++i) {
        const std::uint64_t sub = lead * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool is_zero_poly(const std::vector<std::uint32_t>& a) { return a.empty(); }

// Exhaustive trial division by every monic polynomial of degree 1..s/2.
bool is_irreducible(const std::vector<std::uint32_t>& candidate, std::uint64_t p) {
  const std::size_t s = candidate.size() - 1;
  for (std::size_t d = 1; 2 * d <= s; ++d) {
    std::uint64_t num_divisors = 1;
    for (std::size_t i = 0; i < d; ++i) num_divisors *= p;
    for (std::uint64_t k = 0; k < num_divisors; ++k) {
      std::vector<std::uint32_t> divisor(d + 1);
      std::uint64_t rest = k;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      divisor[d] = 1;
      if (is_zero_poly(poly_mod(candidate, divisor, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint64_t p, unsigned s, std::uint64_t max_order) : p_(p), s_(s) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
  if (s < 1) throw std::invalid_argument("make_field: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) {
    if (q > max_order / p) {
      throw std::invalid_argument("make_field: p^s exceeds the field order bound");
    }
    q *= p;
  }
  q_ = q;

  if (s_ == 1) {
    modulus_ = {0, 1};  // X
  } else {
    // First irreducible in index order over the non-leading coefficients.
    for (std::uint64_t k = 0;; ++k) {
      if (k == q_) throw std::logic_error("make_field: no irreducible modulus found");
      std::vector<std::uint32_t> candidate(s_ + 1);
      std::uint64_t rest = k;
      for (unsigned i = 0; i < s_; ++i) {
        candidate[i] = static_cast<std::uint32_t>(rest % p_);
        rest /= p_;
      }
      candidate[s_] = 1;
      if (is_irreducible(candidate, p_)) {
        modulus_ = std::move(candidate);
        break;
      }
    }
  }

  q1_prime_factors_ = q_ > 2 ? distinct_prime_factors(q_ - 1) : std::vector<std::uint64_t>{};

  // Least element of order q-1; the prime-factor test keeps this cheap even
  // without tables.
  generator_ = 0;
  for (std::uint32_t x = 1; x < q_; ++x) {
    bool ok = true;
    for (std::uint64_t r : q1_prime_factors_) {
      if (pow_nonzero(x, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = x;
      break;
    }
  }

  if (s_ > 1 && q_ <= kMulTableLimit) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t acc = 1;
    for (std::uint64_t k = 0; k + 1 < q_; ++k) {
      exp_[k] = acc;
      log_[acc] = static_cast<std::uint32_t>(k);
      acc = mul_poly(acc, generator_);
    }
  }
}

Field make_field(std::uint64_t p, unsigned s, std::uint64_t max_order) {
  return Field(p, s, max_order);
}

void Field::decode(std::uint32_t x, std::uint32_t* digits) const {
  for (unsigned i = 0; i < s_; ++i) {
    digits[i] = static_cast<std::uint32_t>(x % p_);
    x = static_cast<std::uint32_t>(x / p_);
  }
}

std::uint32_t Field::encode(const std::uint32_t* digits) const {
  std::uint64_t value = 0;
  for (unsigned i = s_; i-- > 0;) value = value * p_ + digits[i];
  return static_cast<std::uint32_t>(value);
}

std::uint32_t Field::add(std::uint32_t x, std::uint32_t y) const {
  if (s_ == 1) {
    const std::uint64_t sum = std::uint64_t{x} + y;
    return static_cast<std::uint32_t>(sum >= p_ ? sum - p_ : sum);
  }
  if (p_ == 2) return x ^ y;
  std::array<std::uint32_t, kMaxDegree> a{}, b{};
  decode(x, a.data());
  decode(y, b.data());
  for (unsigned i = 0; i < s_; ++i) {
    a[i] += b[i];
    if (a[i] >= p_) a[i] -= static_cast<std::uint32_t>(p_);
  }
  return encode(a.data());
}

std::uint32_t Field::neg(std::uint32_t x) const {
  if (s_ == 1) return x == 0 ? 0 : static_cast<std::uint32_t>(p_ - x);
  if (p_ == 2) return x;
  std::array<std::uint32_t, kMaxDegree> a{};
  decode(x, a.data());
  for (unsigned i = 0; i < s_; ++i) {
    if (a[i] != 0) a[i] = static_cast<std::uint32_t>(p_ - a[i]);
  }
  return encode(a.data());
}

std::uint32_t Field::sub(std::uint32_t x, std::uint32_t y) const {
  return add(x, neg(y));
}

std::uint32_t Field::mul_poly(std::uint32_t x, std::uint32_t y) const {
  std::array<std::uint32_t, kMaxDegree> a{}, b{};
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  decode(x, a.data());
  decode(y, b.data());
  for (unsigned i = 0; i < s_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < s_; ++j) {
      prod[i + j] += std::uint64_t{a[i]} * b[j];
    }
  }
  // X^s = -(mod_{s-1} X^{s-1} + ... + mod_0), applied from the top down.
  for (unsigned i = 2 * s_ - 2; i >= s_ && i < 2 * s_; --i) {
    const std::uint64_t c = prod[i] % p_;
    if (c != 0) {
      for (unsigned j = 0; j < s_; ++j) {
        prod[i - s_ + j] += c * ((p_ - modulus_[j]) % p_);
      }
    }
    prod[i] = 0;
    if (i == s_) break;
  }
  std::array<std::uint32_t, kMaxDegree> out{};
  for (unsigned i = 0; i < s_; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p_);
  return encode(out.data());
}

std::uint32_t Field::mul(std::uint32_t x, std::uint32_t y) const {
  if (s_ == 1) return static_cast<std::uint32_t>(std::uint64_t{x} * y % p_);
  if (x == 0 || y == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t k = std::uint64_t{log_[x]} + log_[y];
    return exp_[k >= q_ - 1 ? k - (q_ - 1) : k];
  }
  return mul_poly(x, y);
}

std::uint32_t Field::inv(std::uint32_t x) const {
  if (x == 0) throw std::domain_error("inv: zero has no inverse");
  if (!exp_.empty()) {
    const std::uint32_t k = log_[x];
    return exp_[k == 0 ? 0 : q_ - 1 - k];
  }
  return pow_nonzero(x, q_ - 2);
}

std::uint32_t Field::pow_nonzero(std::uint32_t x, std::uint64_t e) const {
  std::uint32_t result = 1;
  std::uint32_t base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::pow(std::uint32_t x, std::int64_t e) const {
  if (e == 0) return 1;  // includes 0^0 = 1
  if (x == 0) {
    if (e < 0) throw std::domain_error("pow: negative exponent of zero");
    return 0;
  }
  // x^{q-1} = 1, so reduce the exponent into [0, q-2].
  const std::int64_t order = static_cast<std::int64_t>(q_ - 1);
  std::int64_t r = e % order;
  if (r < 0) r += order;
  return pow_nonzero(x, static_cast<std::uint64_t>(r));
}

bool Field::is_square(std::uint32_t x) const {
  if (p_ == 2) return true;
  if (x == 0) return true;
  return pow_nonzero(x, (q_ - 1) / 2) == 1;
}

bool Field::in_subfield(std::uint32_t x, unsigned ell) const {
  if (ell == 0 || s_ % ell != 0) {
    throw std::invalid_argument("in_subfield: ell must divide the extension degree");
  }
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < ell; ++i) pe *= p_;
  return pow(x, static_cast<std::int64_t>(pe)) == x;
}

std::uint32_t Field::from_integer(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r);
}

std::uint32_t Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > s_) {
    throw std::invalid_argument("from_coeffs: more coefficients than the extension degree");
  }
  std::array<std::uint32_t, kMaxDegree> digits{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_) throw std::invalid_argument("from_coeffs: coefficient not reduced mod p");
    digits[i] = coeffs[i];
  }
  return encode(digits.data());
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t x) const {
  std::array<std::uint32_t, kMaxDegree> digits{};
  decode(x, digits.data());
  return std::vector<std::uint32_t>(digits.begin(), digits.begin() + s_);
}

std::uint64_t Field::element_order(std::uint32_t x) const {
  if (x == 0) throw std::domain_error("element_order: zero is not in the multiplicative group");
  std::uint64_t order = q_ - 1;
  for (std::uint64_t r : q1_prime_factors_) {
    while (order % r == 0 && pow_nonzero(x, order / r) == 1) order /= r;
  }
  return order;
}

std::vector<std::uint32_t> Field::all_generators() const {
  std::vector<std::uint32_t> result;
  for (std::uint32_t x = 1; x < q_; ++x) {
    if (element_order(x) == q_ - 1) result.push_back(x);
  }
  return result;
}

std::vector<std::uint32_t> Field::subfield_elements(unsigned ell) const {
  std::vector<std::uint32_t> result;
  for (std::uint32_t x = 0; x < q_; ++x) {
    if (in_subfield(x, ell)) result.push_back(x);
  }
  return result;
}

Element Field::element(std::uint32_t index) const { return Element(*this, index); }

std::vector<Element> Field::enumerate() const {
  std::vector<Element> all;
  all.reserve(q_);
  for (std::uint32_t x = 0; x < q_; ++x) all.push_back(element(x));
  return all;
}

std::string Field::element_str(std::uint32_t x) const {
  if (s_ == 1) return std::to_string(x);
  std::string out;
  const auto digits = coeffs(x);
  for (unsigned i = 0; i < s_; ++i) {
    if (i > 0) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

std::uint32_t Field::element_from_str(const std::string& text) const {
  std::vector<std::uint32_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("element_from_str: bad element '" + text + "'");
    parts.push_back(static_cast<std::uint32_t>(v));
  }
  if (parts.empty()) throw std::invalid_argument("element_from_str: empty element");
  if (parts.size() == 1) {
    if (parts[0] >= q_) throw std::invalid_argument("element_from_str: index out of range");
    return parts[0];
  }
  return from_coeffs(parts);
}

bool operator==(const Field& a, const Field& b) {
  return a.p_ == b.p_ && a.s_ == b.s_ && a.modulus_ == b.modulus_;
}

bool operator!=(const Field& a, const Field& b) { return !(a == b); }

namespace {

const Field& check_same_field(const Element& x, const Element& y) {
  const Field& fx = x.field();
  const Field& fy = y.field();
  if (&fx != &fy && fx != fy) {
    throw std::invalid_argument("operands belong to different fields");
  }
  return fx;
}

}  // namespace

Element::Element(const Field& field, std::uint32_t index) : field_(&field), index_(index) {
  if (index >= field.q()) throw std::invalid_argument("element index out of range");
}

const Field& Element::field() const {
  if (field_ == nullptr) throw std::logic_error("default-constructed element has no field");
  return *field_;
}

std::vector<std::uint32_t> Element::coeffs() const { return field().coeffs(index_); }

Element Element::operator-() const { return Element(field(), field().neg(index_)); }

Element Element::inverse() const { return Element(field(), field().inv(index_)); }

Element Element::pow(std::int64_t e) const { return Element(field(), field().pow(index_, e)); }

bool Element::is_square() const { return field().is_square(index_); }

bool Element::in_subfield(unsigned ell) const { return field().in_subfield(index_, ell); }

std::string Element::str() const { return field().element_str(index_); }

Element operator+(const Element& x, const Element& y) {
  const Field& f = check_same_field(x, y);
  return Element(f, f.add(x.index_, y.index_));
}

Element operator-(const Element& x, const Element& y) {
  const Field& f = check_same_field(x, y);
  return Element(f, f.sub(x.index_, y.index_));
}

Element operator*(const Element& x, const Element& y) {
  const Field& f = check_same_field(x, y);
  return Element(f, f.mul(x.index_, y.index_));
}

Element operator/(const Element& x, const Element& y) {
  const Field& f = check_same_field(x, y);
  return Element(f, f.mul(x.index_, f.inv(y.index_)));
}

bool operator==(const Element& x, const Element& y) {
  check_same_field(x, y);
  return x.index_ == y.index_;
}

bool operator!=(const Element& x, const Element& y) { return !(x == y); }

}  // namespace ffcount
