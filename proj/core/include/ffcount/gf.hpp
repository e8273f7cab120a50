#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ffcount {

class Field;

/// Element of a finite field, carried as a reference to its field plus a
/// canonical index. The index packs the reduced coefficient vector
/// c_0..c_{s-1} of the representative as c_0 + c_1*p + ... + c_{s-1}*p^{s-1},
/// so index 0 is zero, index 1 is one, and enumeration order is index order.
///
/// Elements are immutable values; the field must outlive them. Operators on
/// elements of distinct fields throw std::invalid_argument.
class Element {
 public:
  Element() = default;
  Element(const Field& field, std::uint32_t index);

  const Field& field() const;
  std::uint32_t index() const { return index_; }
  std::vector<std::uint32_t> coeffs() const;
  bool is_zero() const { return index_ == 0; }

  Element operator-() const;
  Element inverse() const;
  /// x^e with the 0^0 = 1 convention; negative e requires x != 0.
  Element pow(std::int64_t e) const;
  bool is_square() const;
  bool in_subfield(unsigned ell) const;

  std::string str() const;

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator/(const Element& x, const Element& y);
  friend bool operator==(const Element& x, const Element& y);
  friend bool operator!=(const Element& x, const Element& y);

 private:
  const Field* field_ = nullptr;
  std::uint32_t index_ = 0;
};

inline constexpr std::uint64_t kDefaultMaxFieldOrder = std::uint64_t{1} << 20;

/// F_{p^s} with a deterministic representation: the modulus is the first
/// monic irreducible polynomial of degree s over Z_p in index order (indexes
/// taken over the non-leading coefficients, constant term least significant),
/// found by exhaustive trial division. Repeated construction for the same
/// (p, s) therefore yields bit-identical fields.
///
/// Fields are immutable after construction; every operation below is a pure
/// function and safe to call concurrently.
class Field {
 public:
  Field(std::uint64_t p, unsigned s, std::uint64_t max_order = kDefaultMaxFieldOrder);

  std::uint64_t p() const { return p_; }
  unsigned degree() const { return s_; }
  std::uint64_t q() const { return q_; }
  /// Modulus coefficients, constant term first; s+1 entries, leading 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // Index-space arithmetic. Arguments must be < q(); these are the hot-path
  // entry points used by the counting engines.
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t pow(std::uint32_t x, std::int64_t e) const;

  /// True iff x = y^2 for some y. For odd q this is x^{(q-1)/2} in {0, 1};
  /// in characteristic 2 squaring is a bijection, so every element passes.
  bool is_square(std::uint32_t x) const;
  /// True iff x lies in the subfield F_{p^ell}, i.e. x^{p^ell} = x.
  /// Requires ell | s.
  bool in_subfield(std::uint32_t x, unsigned ell) const;

  /// n mod p embedded in the prime subfield.
  std::uint32_t from_integer(std::int64_t n) const;
  std::uint32_t from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(std::uint32_t x) const;

  /// The enumeration-least element of multiplicative order q-1.
  std::uint32_t generator() const { return generator_; }
  /// All phi(q-1) generators, in increasing index order. Each is verified by
  /// an order computation against the factorization of q-1.
  std::vector<std::uint32_t> all_generators() const;
  /// Multiplicative order of x != 0.
  std::uint64_t element_order(std::uint32_t x) const;
  /// Elements of F_{p^ell} inside this field, increasing. Requires ell | s.
  std::vector<std::uint32_t> subfield_elements(unsigned ell) const;

  Element element(std::uint32_t index) const;
  Element zero() const { return element(0); }
  Element one() const { return element(1); }
  /// All q elements in index order, zero first. Stable across runs.
  std::vector<Element> enumerate() const;

  /// "3" for prime fields, "c0,c1,..." (constant first) otherwise.
  std::string element_str(std::uint32_t x) const;
  /// Parses element_str output; a bare integer is taken as an element index,
  /// which for prime fields coincides with the residue.
  std::uint32_t element_from_str(const std::string& text) const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b);

 private:
  void decode(std::uint32_t x, std::uint32_t* digits) const;
  std::uint32_t encode(const std::uint32_t* digits) const;
  std::uint32_t mul_poly(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t pow_nonzero(std::uint32_t x, std::uint64_t e) const;

  std::uint64_t p_ = 0;
  unsigned s_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> q1_prime_factors_;  // distinct primes of q-1
  std::uint32_t generator_ = 0;
  // exp/log tables over the generator, built for extension fields of
  // moderate order; empty means the polynomial path is used.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Builds F_{p^s}. Errors: p not prime, s < 1, p^s > max_order.
Field make_field(std::uint64_t p, unsigned s,
                 std::uint64_t max_order = kDefaultMaxFieldOrder);

}  // namespace ffcount
