#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ffcount/gf.hpp"
#include "ffcount/numeric.hpp"

namespace ffcount {

/// Upper bound on the number of points a full enumeration may visit.
inline constexpr std::uint64_t kDefaultNaiveBudget = 100'000'000;

/// One summand b*D_m(X, a) of an equation; a = 0 makes it the power term
/// b*X^m.
struct Term {
  Element b;           // coefficient, must be nonzero
  std::uint64_t m = 1; // degree, must be >= 1
  Element a;           // Dickson parameter
};

/// The equation b_1*D_{m_1}(X_1, a_1) + ... + b_n*D_{m_n}(X_n, a_n) = c over
/// a fixed field. With all a_j = 0 this is the diagonal equation
/// sum b_j X_j^{m_j} = c. Validated at construction: at least one term,
/// every b_j nonzero, every m_j >= 1, all elements from `field`.
class EquationSpec {
 public:
  EquationSpec(const Field& field, std::vector<Term> terms, Element c);

  const Field& field() const { return *field_; }
  const std::vector<Term>& terms() const { return terms_; }
  const Element& c() const { return c_; }
  std::size_t arity() const { return terms_.size(); }
  bool is_diagonal() const;  // all parameters zero

 private:
  const Field* field_;
  std::vector<Term> terms_;
  Element c_;
};

/// Per-variable domains C_1, ..., C_n as element indexes. Each set is
/// deduplicated, sorted and must be nonempty; elements must lie in `field`.
class RestrictionSet {
 public:
  RestrictionSet(const Field& field, std::vector<std::vector<std::uint32_t>> sets);

  std::size_t arity() const { return sets_.size(); }
  const std::vector<std::vector<std::uint32_t>>& sets() const { return sets_; }
  BigInt domain_size() const;

 private:
  std::vector<std::vector<std::uint32_t>> sets_;
};

enum class CountMethod { naive, convolution };

/// Exact solution count plus the divisibility facts the checkers consume.
/// has_nontrivial is present only when the all-zeros vector lies in the
/// domain and actually solves the equation; it then records whether some
/// other solution exists.
struct CountReport {
  BigInt N;
  CountMethod method = CountMethod::naive;
  std::uint64_t q = 0;
  std::size_t n = 0;
  bool divisible_by_p = false;
  std::optional<bool> has_nontrivial;
};

/// Full enumeration of the domain (all of F_q^n, or the restriction sets).
/// Throws BudgetExceeded when the domain has more than `budget` points.
CountReport count_naive(const EquationSpec& eq,
                        const std::optional<RestrictionSet>& restriction = std::nullopt,
                        std::uint64_t budget = kDefaultNaiveBudget);

/// Independent route: per-variable value histograms over (F_q, +) folded by
/// additive convolution, then read off at c. O(n*q^2) after evaluations, no
/// domain-size budget.
CountReport count_convolution(const EquationSpec& eq,
                              const std::optional<RestrictionSet>& restriction = std::nullopt);

/// True iff the equation has at least two solutions in the domain.
bool has_second_solution(const EquationSpec& eq,
                         const std::optional<RestrictionSet>& restriction = std::nullopt);

/// Up to `limit` solutions in lexicographic domain order, each re-checked by
/// direct evaluation before being returned. Same budget rule as count_naive.
std::vector<std::vector<std::uint32_t>> enumerate_solutions(
    const EquationSpec& eq, const std::optional<RestrictionSet>& restriction,
    std::uint64_t limit, std::uint64_t budget = kDefaultNaiveBudget);

/// Count with every variable restricted to the subfield F_{p^ell}, realized
/// as the Frobenius fixed-point set rather than a separately constructed
/// field. Requires ell | s.
CountReport count_in_subfield(const EquationSpec& eq, unsigned ell,
                              std::uint64_t budget = kDefaultNaiveBudget);

}  // namespace ffcount
