#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffcount/equations.hpp"
#include "ffcount/numeric.hpp"
#include "ffcount/polys.hpp"

namespace ffcount {

/// check_l1_instance refuses domains larger than this instead of sampling:
/// the conclusion is about exact counts, so a partial scan proves nothing.
inline constexpr std::uint64_t kL1DomainBudget = 10'000'000;

/// Outcome of evaluating one named solvability condition. The conditions
/// checked by this library are:
///   T1  sum of 1/gcd(m_j, q-1) > 1 for diagonal equations; a solvable
///       instance then has a second solution, and p divides the count.
///   T2  the Dickson generalization of T1: a weighted sum of 1/d_j^- and
///       1/d_j^+ terms against 1 + (n - t - sum delta_j)/(q-1).
///   T3  the subfield variant: sum of 1/gcd(m_j, p^ell - 1) > (q-1)/(p^ell-1)
///       with every variable restricted to F_{p^ell}.
///   EQ4 the weakened subfield condition with right side 1, sufficient only
///       when all coefficients and c lie in the subfield.
///   C2  sum of floor((q-1)/deg f_j) > q - 1 for sums of nonconstant
///       polynomials.
///   L1  the restricted-variable condition (q-1)*sum deg H_i < sum(|C_j|-1),
///       under which the common zero set in C_1 x ... x C_n is never a
///       singleton.
/// lhs and rhs are exact rationals and holds is always lhs > rhs; auxiliary
/// carries the named intermediate quantities (gcds, delta_j, r, t, ...) keyed
/// by 1-based original term position where applicable.
struct ConditionReport {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  std::map<std::string, Rational> auxiliary;
};

/// A condition paired with the exact count that tests it. `count` is absent
/// when there was nothing to check (condition does not hold) or the check
/// was refused (budget); `note` says which. consistent stays true in those
/// cases, so a false value always marks a genuine violation.
struct Verdict {
  ConditionReport condition;
  std::optional<CountReport> count;
  bool consistent = true;
  std::string note;
};

/// T1 for a diagonal equation. Throws std::invalid_argument if some a_j != 0.
ConditionReport check_t1(const EquationSpec& eq);

/// T2 for a general Dickson equation. Terms are partitioned internally
/// (t = number of zero parameters), so callers need not pre-sort. With all
/// parameters zero this degenerates to T1's lhs and rhs exactly. The
/// auxiliary map reports, per original 1-based position j, d_minus_j,
/// d_plus_j and (for nonzero parameters) delta_j, plus t, r, c_is_zero,
/// odd_m_gate (all nonzero-parameter degrees odd) and nontrivial_rhs
/// (1 + (n-t)/(q-1)), since the zero-solution clause needs the parity gate
/// and c = 0 in addition to lhs > nontrivial_rhs.
ConditionReport check_t2(const EquationSpec& eq);

/// T3: variables restricted to the subfield F_{p^ell}. Diagonal only;
/// requires ell | s.
ConditionReport check_t3(const EquationSpec& eq, unsigned ell);

/// EQ4: like T3 but with rhs = 1; sufficient only when every b_j and c lie
/// in F_{p^ell}, which is reported as auxiliary["coefficients_in_subfield"].
ConditionReport check_eq4(const EquationSpec& eq, unsigned ell);

/// C2 for f_1(X_1) + ... + f_n(X_n) = 0 given only the degrees.
ConditionReport check_c2(const std::vector<std::uint64_t>& degrees, std::uint64_t q);

/// L1 on one concrete system: exhaustively counts common zeros of the H_i
/// over C_1 x ... x C_n and flags the verdict inconsistent when the
/// condition holds yet the count is exactly 1. Hypothesis-not-met and
/// budget-refused instances return count-less verdicts with a note.
Verdict check_l1_instance(const std::vector<MultiPoly>& system, const RestrictionSet& sets,
                          std::uint64_t budget = kL1DomainBudget);

/// Exact evaluation of the solution-count lower bound
///   B = q^{n-1} - q^{(n-2)/2} (q-1) prod_j (d_j^+ + d_j^-).
/// For odd n the half power makes B irrational, so the sign is decided by
/// the squared comparison sign(q^n - (q-1)^2 P^2), which is valid for all
/// n >= 1; exact_value is filled only for even n. A nonpositive sign means
/// the bound carries no information (every count N >= 0 satisfies it).
struct BoundReport {
  int sign = 0;                      // sign of B
  std::optional<BigInt> exact_value; // present iff n is even
  BigInt product;                    // P = prod (d_j^+ + d_j^-)
  std::uint64_t q = 0;
  std::size_t n = 0;
};

BoundReport solution_count_lower_bound(const EquationSpec& eq);

/// Decides N >= B exactly (squared comparison; no irrational arithmetic).
bool count_meets_lower_bound(const BoundReport& bound, const BigInt& n_solutions);

/// Assembles the equation family where the closed-form bound B is provably
/// nonpositive while T2 still applies: given divisors e_j of q-1 with
/// n > 4 and (prod e_j)^2 <= q^n (q-1)^2, sets m_j = (q-1)/e_j and
///   c = 2 * sum over even m_j of (-a_j)^{m_j/2} b_j.
/// All a_j, b_j must be nonzero. Throws std::invalid_argument on any
/// precondition violation.
EquationSpec build_example4(const Field& field, const std::vector<std::uint64_t>& e,
                            const std::vector<Element>& a, const std::vector<Element>& b);

/// build_example4 with a_j, b_j drawn from F_q^* by a seeded generator, plus
/// the full evidence chain: T2 report (must hold by construction), the bound
/// report (sign <= 0 for this family), and an exact naive count.
struct Example4Report {
  EquationSpec eq;
  ConditionReport t2;
  BoundReport bound;
  CountReport count;
};

Example4Report run_example4(const Field& field, std::size_t n, std::vector<std::uint64_t> e,
                            std::uint64_t seed, std::uint64_t budget = kDefaultNaiveBudget);

/// The scenario showing EQ4 is not sufficient without the coefficient
/// membership clause: over F_25 with the deterministic modulus, for every
/// generator g of F_25^*, the equation X_1^3 + g X_2^3 = 0 has exactly one
/// solution (0,0), both in F_25^2 and restricted to F_5^2, even though the
/// EQ4 inequality holds for ell = 1. T3's stronger inequality fails, so no
/// checked condition is violated.
struct CounterexampleRow {
  std::uint32_t g = 0;       // generator, element index in F_25
  BigInt full_count;         // solutions in F_25^2
  BigInt subfield_count;     // solutions in F_5^2
};

struct CounterexampleReport {
  std::vector<CounterexampleRow> rows;  // one per generator, index order
  ConditionReport eq4;                  // ell = 1; holds, membership false
  ConditionReport t3;                   // ell = 1; fails
  bool reproduced = false;              // every count is 1 and the reports agree
};

CounterexampleReport run_counterexample5();

/// Statements the sweep engine can verify empirically:
///   t1, t2, t3: holds and N >= 1 imply N >= 2 (for t3, counts restricted
///   to the subfield);
///   mj: the T1 condition implies p | N for diagonal equations.
enum class Statement { t1, t2, t3, mj };

std::string statement_name(Statement statement);
/// Accepts "t1", "t2", "t3", "mj" (case-insensitive).
Statement statement_from_string(const std::string& text);

/// Sweep shape: for each q and each arity, every degree vector in the
/// statement's exhaustive grid is instantiated `draws` times with seeded
/// random coefficients. Ordinal-derived per-instance generators make the
/// result independent of `jobs`.
struct SweepOptions {
  std::vector<std::uint64_t> qs;  // prime powers
  std::vector<std::size_t> ns = {2, 3};
  std::uint64_t seed = 1;
  unsigned draws = 0;  // per grid point; 0 picks the statement default
  unsigned jobs = 1;
};

struct SweepInstance {
  std::uint64_t ordinal = 0;
  std::uint64_t q = 0;
  std::size_t n = 0;
  unsigned ell = 0;  // subfield degree, t3 only (0 otherwise)
  std::vector<std::uint64_t> m;
  std::vector<std::uint32_t> b;  // element indexes
  std::vector<std::uint32_t> a;  // element indexes; empty for diagonal statements
  std::uint32_t c = 0;
  Verdict verdict;
};

/// Runs the statement's sweep and returns every instance in deterministic
/// ordinal order, regardless of how many worker threads evaluated it.
std::vector<SweepInstance> sweep_verify(Statement statement, const SweepOptions& options);

}  // namespace ffcount
