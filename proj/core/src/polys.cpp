#include "ffcount/polys.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ffcount/numeric.hpp"

namespace ffcount {

namespace {

void require_same_field(const Field& f, const Element& x, const char* what) {
  if (&x.field() != &f && x.field() != f) {
    throw std::invalid_argument(std::string(what) + ": element from a different field");
  }
}

}  // namespace

UniPoly::UniPoly(const Field& field, std::vector<Element> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  for (const Element& c : coeffs_) require_same_field(field, c, "UniPoly");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Element UniPoly::eval(const Element& x) const {
  require_same_field(*field_, x, "UniPoly::eval");
  Element acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UniPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || coeffs_[i] != field_->one()) {
      out += field_->degree() == 1 ? coeffs_[i].str() : "(" + coeffs_[i].str() + ")";
      if (i > 0) out += "*";
    }
    if (i == 1) out += "X";
    if (i > 1) out += "X^" + std::to_string(i);
  }
  return out;
}

MultiPoly::MultiPoly(const Field& field, unsigned arity) : field_(&field), arity_(arity) {
  if (arity < 1) throw std::invalid_argument("MultiPoly: arity must be >= 1");
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [exponents, coeff] : terms_) {
    int sum = 0;
    for (unsigned e : exponents) sum += static_cast<int>(e);
    if (sum > best) best = sum;
  }
  return best;
}

void MultiPoly::add_term(std::vector<unsigned> exponents, const Element& coefficient) {
  if (exponents.size() != arity_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
  require_same_field(*field_, coefficient, "MultiPoly");
  if (coefficient.is_zero()) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exponents), coefficient);
    return;
  }
  const Element merged = it->second + coefficient;
  if (merged.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = merged;
  }
}

Element MultiPoly::eval(std::span<const Element> point) const {
  if (point.size() != arity_) throw std::invalid_argument("MultiPoly::eval: arity mismatch");
  for (const Element& x : point) require_same_field(*field_, x, "MultiPoly::eval");
  Element acc = field_->zero();
  for (const auto& [exponents, coeff] : terms_) {
    Element term = coeff;
    for (unsigned i = 0; i < arity_; ++i) {
      if (exponents[i] != 0) term = term * point[i].pow(exponents[i]);
    }
    acc = acc + term;
  }
  return acc;
}

MultiPoly parse_multipoly(const Field& field, unsigned arity, const std::string& text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) throw std::invalid_argument("parse_multipoly: empty expression");
  MultiPoly poly(field, arity);
  std::stringstream terms(compact);
  std::string term;
  while (std::getline(terms, term, '+')) {
    if (term.empty()) throw std::invalid_argument("parse_multipoly: empty term");
    std::vector<unsigned> exponents(arity, 0);
    Element coeff = field.one();
    std::stringstream factors(term);
    std::string factor;
    while (std::getline(factors, factor, '*')) {
      if (factor.empty()) throw std::invalid_argument("parse_multipoly: empty factor");
      if (factor[0] == 'X' || factor[0] == 'x') {
        const std::size_t caret = factor.find('^');
        const std::string var = factor.substr(1, caret == std::string::npos ? caret : caret - 1);
        std::size_t pos = 0;
        const unsigned long index = std::stoul(var, &pos);
        if (pos != var.size() || index < 1 || index > arity) {
          throw std::invalid_argument("parse_multipoly: bad variable '" + factor + "'");
        }
        unsigned long e = 1;
        if (caret != std::string::npos) {
          const std::string exp = factor.substr(caret + 1);
          e = std::stoul(exp, &pos);
          if (pos != exp.size()) {
            throw std::invalid_argument("parse_multipoly: bad exponent '" + factor + "'");
          }
        }
        exponents[index - 1] += static_cast<unsigned>(e);
      } else {
        coeff = coeff * field.element(field.element_from_str(factor));
      }
    }
    poly.add_term(std::move(exponents), coeff);
  }
  return poly;
}

Element dickson_eval(const DicksonSpec& spec, const Element& x) {
  require_same_field(x.field(), spec.a, "dickson_eval");
  if (spec.m < 1) throw std::invalid_argument("dickson_eval: degree must be >= 1");
  return x.field().element(
      dickson_eval_index(x.field(), spec.m, x.index(), spec.a.index()));
}

std::uint32_t dickson_eval_index(const Field& f, std::uint64_t m, std::uint32_t x,
                                 std::uint32_t a) {
  if (m < 1) throw std::invalid_argument("dickson_eval_index: degree must be >= 1");
  if (a == 0) return f.pow(x, static_cast<std::int64_t>(m));
  std::uint32_t prev = f.from_integer(2);
  std::uint32_t cur = x;
  for (std::uint64_t j = 2; j <= m; ++j) {
    const std::uint32_t next = f.sub(f.mul(x, cur), f.mul(a, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

UniPoly dickson_coeffs(const DicksonSpec& spec) {
  if (spec.m < 1) throw std::invalid_argument("dickson_coeffs: degree must be >= 1");
  const Field& f = spec.a.field();
  const std::uint64_t m = spec.m;
  std::vector<Element> coeffs(m + 1, f.zero());
  Element a_power = f.one();  // (-a)^j
  const Element minus_a = -spec.a;
  for (std::uint64_t j = 0; 2 * j <= m; ++j) {
    // m/(m-j) * C(m-j, j) is an integer; multiply before dividing to stay
    // exact, then reduce mod p.
    const BigInt numerator = BigInt(m) * binomial(m - j, j);
    if (numerator % BigInt(m - j) != 0) {
      throw std::logic_error("dickson_coeffs: non-integral coefficient");
    }
    const BigInt reduced = (numerator / BigInt(m - j)) % BigInt(f.p());
    const Element integer_part = f.element(f.from_integer(reduced.convert_to<std::int64_t>()));
    coeffs[m - 2 * j] = integer_part * a_power;
    a_power = a_power * minus_a;
  }
  return UniPoly(f, std::move(coeffs));
}

}  // namespace ffcount
