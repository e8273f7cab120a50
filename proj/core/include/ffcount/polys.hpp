#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ffcount/gf.hpp"

namespace ffcount {

/// Dense univariate polynomial over a fixed field, index = exponent.
/// Trailing zero coefficients are trimmed, so degree() is the index of the
/// last stored coefficient (-1 for the zero polynomial).
class UniPoly {
 public:
  UniPoly(const Field& field, std::vector<Element> coeffs);

  const Field& field() const { return *field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Element>& coeffs() const { return coeffs_; }

  /// Horner evaluation. Throws std::invalid_argument on field mismatch.
  Element eval(const Element& x) const;

  std::string str() const;

 private:
  const Field* field_;
  std::vector<Element> coeffs_;
};

/// Sparse multivariate polynomial in n variables: exponent vector -> nonzero
/// coefficient. The zero polynomial stores no terms and has total degree -1.
class MultiPoly {
 public:
  MultiPoly(const Field& field, unsigned arity);

  const Field& field() const { return *field_; }
  unsigned arity() const { return arity_; }
  int total_degree() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<unsigned>, Element>& terms() const { return terms_; }

  /// Adds coefficient*X^exponents, merging with an existing term and dropping
  /// it if the merged coefficient is zero.
  void add_term(std::vector<unsigned> exponents, const Element& coefficient);

  /// Value at the point; exponentiation follows the 0^0 = 1 convention.
  Element eval(std::span<const Element> point) const;

 private:
  const Field* field_;
  unsigned arity_;
  std::map<std::vector<unsigned>, Element> terms_;
};

/// Parses "coeff*X1^e1*X2^e2 + ..." into a MultiPoly. Factors in a '*'-joined
/// term are either variable powers X<k> or X<k>^<e> (1-based k <= arity) or
/// field elements in element_from_str notation; '^e' defaults to 1 and a bare
/// variable term has coefficient 1. Whitespace is ignored.
MultiPoly parse_multipoly(const Field& field, unsigned arity, const std::string& text);

/// Degree and parameter of the Dickson polynomial D_m(X, a) of the first
/// kind: D_0 = 2, D_1 = X, D_j = X*D_{j-1} - a*D_{j-2}. With a = 0 this
/// degenerates to the power map X^m.
struct DicksonSpec {
  std::uint64_t m = 1;
  Element a;
};

/// D_m(x, a) by the linear recurrence, O(m) field operations.
/// Requires m >= 1.
Element dickson_eval(const DicksonSpec& spec, const Element& x);

/// Index-space variant for counting loops. x and a are element indexes in f.
std::uint32_t dickson_eval_index(const Field& f, std::uint64_t m, std::uint32_t x,
                                 std::uint32_t a);

/// Coefficients of D_m(X, a) via the closed form
///   sum_{j=0}^{floor(m/2)} m/(m-j) * C(m-j, j) * (-a)^j * X^{m-2j}.
/// Each integer factor m/(m-j)*C(m-j,j) is computed exactly in unbounded
/// integers before reduction mod p, which keeps characteristic-2 and
/// p | (m-j) cases uniform. Requires m >= 1; the result is monic of degree m.
UniPoly dickson_coeffs(const DicksonSpec& spec);

}  // namespace ffcount
