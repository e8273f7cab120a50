#include "ffcount/theorems.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ffcount {

namespace {

std::string position_key(const char* base, std::size_t j) {
  return std::string(base) + "_" + std::to_string(j + 1);
}

void require_diagonal(const EquationSpec& eq, const char* what) {
  if (!eq.is_diagonal()) {
    throw std::invalid_argument(std::string(what) + ": requires zero Dickson parameters");
  }
}

std::uint64_t subfield_order(const Field& f, unsigned ell) {
  if (ell == 0 || f.degree() % ell != 0) {
    throw std::invalid_argument("subfield degree must divide the extension degree");
  }
  std::uint64_t order = 1;
  for (unsigned i = 0; i < ell; ++i) order *= f.p();
  return order;
}

Rational dickson_delta(const Field& f, std::uint64_t m, const Element& a, unsigned r) {
  if (f.q() % 2 == 0) return 0;
  const unsigned v2m = two_adic_valuation(m);
  if (v2m == r - 1 && !a.is_square()) return 1;
  if (v2m >= 1 && v2m < r - 1) return Rational(1, 2);
  return 0;
}

// Sum of lhs-style subfield unit fractions shared by T3 and EQ4.
Rational subfield_lhs(const EquationSpec& eq, std::uint64_t sub_order,
                      std::map<std::string, Rational>& aux) {
  Rational lhs = 0;
  for (std::size_t j = 0; j < eq.arity(); ++j) {
    const std::uint64_t d = std::gcd(eq.terms()[j].m, sub_order - 1);
    aux[position_key("d_sub", j)] = d;
    lhs += Rational(1, d);
  }
  return lhs;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t ordinal) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (ordinal + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

ConditionReport check_t1(const EquationSpec& eq) {
  require_diagonal(eq, "check_t1");
  const std::uint64_t q = eq.field().q();
  ConditionReport report;
  report.name = "T1";
  report.rhs = 1;
  for (std::size_t j = 0; j < eq.arity(); ++j) {
    const std::uint64_t d = std::gcd(eq.terms()[j].m, q - 1);
    report.auxiliary[position_key("d_minus", j)] = d;
    report.lhs += Rational(1, d);
  }
  report.holds = report.lhs > report.rhs;
  return report;
}

ConditionReport check_t2(const EquationSpec& eq) {
  const Field& f = eq.field();
  const std::uint64_t q = f.q();
  const std::size_t n = eq.arity();

  ConditionReport report;
  report.name = "T2";

  std::size_t t = 0;
  for (const Term& term : eq.terms()) t += term.a.is_zero();
  const unsigned r = q % 2 == 1 ? two_adic_valuation(q * q - 1) : 0;

  Rational zero_part = 0;      // sum over a_j = 0 of 1/d_j^-
  Rational minus_part = 0;     // sum over a_j != 0 of 1/d_j^-
  Rational plus_part = 0;      // sum over a_j != 0 of 1/d_j^+
  Rational delta_sum = 0;
  bool all_odd = true;
  for (std::size_t j = 0; j < n; ++j) {
    const Term& term = eq.terms()[j];
    const std::uint64_t d_minus = std::gcd(term.m, q - 1);
    const std::uint64_t d_plus = std::gcd(term.m, q + 1);
    report.auxiliary[position_key("d_minus", j)] = d_minus;
    report.auxiliary[position_key("d_plus", j)] = d_plus;
    if (term.a.is_zero()) {
      zero_part += Rational(1, d_minus);
    } else {
      minus_part += Rational(1, d_minus);
      plus_part += Rational(1, d_plus);
      const Rational delta = dickson_delta(f, term.m, term.a, r);
      report.auxiliary[position_key("delta", j)] = delta;
      delta_sum += delta;
      if (term.m % 2 == 0) all_odd = false;
    }
  }

  report.lhs = zero_part + Rational(1, 2) * minus_part +
               (Rational(1, 2) + Rational(1, q - 1)) * plus_part;
  report.rhs = 1 + (Rational(n - t) - delta_sum) / Rational(q - 1);
  report.holds = report.lhs > report.rhs;

  report.auxiliary["t"] = t;
  report.auxiliary["r"] = r;
  report.auxiliary["c_is_zero"] = eq.c().is_zero() ? 1 : 0;
  report.auxiliary["odd_m_gate"] = all_odd ? 1 : 0;
  report.auxiliary["nontrivial_rhs"] = 1 + Rational(n - t, q - 1);
  return report;
}

ConditionReport check_t3(const EquationSpec& eq, unsigned ell) {
  require_diagonal(eq, "check_t3");
  const std::uint64_t sub = subfield_order(eq.field(), ell);
  ConditionReport report;
  report.name = "T3";
  report.lhs = subfield_lhs(eq, sub, report.auxiliary);
  report.rhs = Rational(eq.field().q() - 1, sub - 1);
  report.holds = report.lhs > report.rhs;
  report.auxiliary["subfield_order"] = sub;
  return report;
}

ConditionReport check_eq4(const EquationSpec& eq, unsigned ell) {
  require_diagonal(eq, "check_eq4");
  const Field& f = eq.field();
  const std::uint64_t sub = subfield_order(f, ell);
  ConditionReport report;
  report.name = "EQ4";
  report.lhs = subfield_lhs(eq, sub, report.auxiliary);
  report.rhs = 1;
  report.holds = report.lhs > report.rhs;
  bool member = f.in_subfield(eq.c().index(), ell);
  for (const Term& term : eq.terms()) {
    member = member && f.in_subfield(term.b.index(), ell);
  }
  report.auxiliary["subfield_order"] = sub;
  report.auxiliary["coefficients_in_subfield"] = member ? 1 : 0;
  return report;
}

ConditionReport check_c2(const std::vector<std::uint64_t>& degrees, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("check_c2: q must be at least 2");
  if (degrees.empty()) throw std::invalid_argument("check_c2: no degrees given");
  ConditionReport report;
  report.name = "C2";
  report.rhs = q - 1;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    if (degrees[j] < 1) throw std::invalid_argument("check_c2: degrees must be >= 1");
    const std::uint64_t share = (q - 1) / degrees[j];
    report.auxiliary[position_key("floor", j)] = share;
    report.lhs += share;
  }
  report.holds = report.lhs > report.rhs;
  return report;
}

Verdict check_l1_instance(const std::vector<MultiPoly>& system, const RestrictionSet& sets,
                          std::uint64_t budget) {
  if (system.empty()) throw std::invalid_argument("check_l1_instance: empty system");
  const Field& f = system.front().field();
  const std::size_t n = sets.arity();
  BigInt degree_sum = 0;
  for (const MultiPoly& h : system) {
    if (&h.field() != &f && h.field() != f) {
      throw std::invalid_argument("check_l1_instance: mixed fields in system");
    }
    if (h.arity() != n) throw std::invalid_argument("check_l1_instance: arity mismatch");
    if (h.is_zero()) throw std::invalid_argument("check_l1_instance: zero polynomial");
    degree_sum += h.total_degree();
  }

  Verdict verdict;
  verdict.condition.name = "L1";
  verdict.condition.rhs = Rational(BigInt(f.q() - 1) * degree_sum);
  for (std::size_t j = 0; j < n; ++j) {
    verdict.condition.lhs += Rational(sets.sets()[j].size() - 1);
  }
  verdict.condition.holds = verdict.condition.lhs > verdict.condition.rhs;
  verdict.condition.auxiliary["degree_sum"] = Rational(degree_sum);
  verdict.condition.auxiliary["domain_size"] = Rational(sets.domain_size());

  if (!verdict.condition.holds) {
    verdict.note = "condition does not hold; nothing to check";
    return verdict;
  }
  if (sets.domain_size() > budget) {
    verdict.note = "domain exceeds budget; unchecked";
    return verdict;
  }

  std::uint64_t zeros = 0;
  std::vector<std::size_t> pos(n, 0);
  std::vector<Element> point;
  point.reserve(n);
  for (std::size_t j = 0; j < n; ++j) point.push_back(f.element(sets.sets()[j][0]));
  for (;;) {
    bool all_vanish = true;
    for (const MultiPoly& h : system) {
      if (!h.eval(point).is_zero()) {
        all_vanish = false;
        break;
      }
    }
    zeros += all_vanish;
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++pos[j] < sets.sets()[j].size()) {
        point[j] = f.element(sets.sets()[j][pos[j]]);
        break;
      }
      pos[j] = 0;
      point[j] = f.element(sets.sets()[j][0]);
      if (j == 0) {
        pos.clear();
        break;
      }
    }
    if (pos.empty()) break;
  }

  CountReport count;
  count.N = zeros;
  count.method = CountMethod::naive;
  count.q = f.q();
  count.n = n;
  count.divisible_by_p = count.N % f.p() == 0;
  verdict.count = std::move(count);
  verdict.consistent = !(verdict.condition.holds && verdict.count->N == 1);
  return verdict;
}

BoundReport solution_count_lower_bound(const EquationSpec& eq) {
  const std::uint64_t q = eq.field().q();
  const std::size_t n = eq.arity();
  BoundReport report;
  report.q = q;
  report.n = n;
  report.product = 1;
  for (const Term& term : eq.terms()) {
    report.product *= BigInt(std::gcd(term.m, q - 1) + std::gcd(term.m, q + 1));
  }
  // B > 0  <=>  q^{n-1} > q^{(n-2)/2} (q-1) P  <=>  q^n > (q-1)^2 P^2.
  const BigInt lhs = bigint_pow(BigInt(q), n);
  const BigInt rhs = BigInt(q - 1) * (q - 1) * report.product * report.product;
  report.sign = lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
  if (n % 2 == 0) {
    report.exact_value = bigint_pow(BigInt(q), n - 1) -
                         bigint_pow(BigInt(q), (n - 2) / 2) * (q - 1) * report.product;
  }
  return report;
}

bool count_meets_lower_bound(const BoundReport& bound, const BigInt& n_solutions) {
  if (bound.sign <= 0) return true;
  // N >= B  <=>  q^{(n-2)/2} (q-1) P >= q^{n-1} - N; when the right side is
  // positive, multiply by q^2 and square to stay in integers.
  const BigInt deficit = bigint_pow(BigInt(bound.q), bound.n - 1) - n_solutions;
  if (deficit <= 0) return true;
  const BigInt lhs = bigint_pow(BigInt(bound.q), bound.n) * BigInt(bound.q - 1) *
                     (bound.q - 1) * bound.product * bound.product;
  const BigInt rhs = BigInt(bound.q) * bound.q * deficit * deficit;
  return lhs >= rhs;
}

EquationSpec build_example4(const Field& field, const std::vector<std::uint64_t>& e,
                            const std::vector<Element>& a, const std::vector<Element>& b) {
  const std::uint64_t q = field.q();
  const std::size_t n = e.size();
  if (n <= 4) throw std::invalid_argument("build_example4: needs more than 4 variables");
  if (a.size() != n || b.size() != n) {
    throw std::invalid_argument("build_example4: parameter and coefficient counts must match");
  }
  BigInt e_product = 1;
  for (std::uint64_t ej : e) {
    if (ej < 1 || (q - 1) % ej != 0) {
      throw std::invalid_argument("build_example4: every e_j must divide q-1");
    }
    e_product *= ej;
  }
  // prod e_j <= q^{n/2} (q-1), compared squared to avoid the half power.
  if (e_product * e_product > bigint_pow(BigInt(q), n) * BigInt(q - 1) * (q - 1)) {
    throw std::invalid_argument("build_example4: e_1*...*e_n exceeds q^{n/2}(q-1)");
  }

  std::vector<Term> terms;
  Element c = field.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j].is_zero() || b[j].is_zero()) {
      throw std::invalid_argument("build_example4: a_j and b_j must be nonzero");
    }
    const std::uint64_t m = (q - 1) / e[j];
    terms.push_back({b[j], m, a[j]});
    if (m % 2 == 0) {
      c = c + (-a[j]).pow(static_cast<std::int64_t>(m / 2)) * b[j];
    }
  }
  c = c + c;
  return EquationSpec(field, std::move(terms), c);
}

Example4Report run_example4(const Field& field, std::size_t n, std::vector<std::uint64_t> e,
                            std::uint64_t seed, std::uint64_t budget) {
  if (e.empty()) e.assign(n, 2);
  if (e.size() != n) {
    throw std::invalid_argument("run_example4: e must have one entry per variable");
  }
  std::mt19937_64 rng(mix_seed(seed, 0));
  std::vector<Element> a, b;
  for (std::size_t j = 0; j < n; ++j) {
    a.push_back(field.element(1 + static_cast<std::uint32_t>(rng() % (field.q() - 1))));
    b.push_back(field.element(1 + static_cast<std::uint32_t>(rng() % (field.q() - 1))));
  }
  EquationSpec eq = build_example4(field, e, a, b);
  ConditionReport t2 = check_t2(eq);
  BoundReport bound = solution_count_lower_bound(eq);
  CountReport count = count_naive(eq, std::nullopt, budget);
  return Example4Report{std::move(eq), std::move(t2), std::move(bound), std::move(count)};
}

CounterexampleReport run_counterexample5() {
  const Field f25 = make_field(5, 2);
  CounterexampleReport report;
  bool all_single = true;
  for (std::uint32_t g : f25.all_generators()) {
    EquationSpec eq(f25, {{f25.one(), 3, f25.zero()}, {f25.element(g), 3, f25.zero()}},
                    f25.zero());
    CounterexampleRow row;
    row.g = g;
    row.full_count = count_naive(eq).N;
    row.subfield_count = count_in_subfield(eq, 1).N;
    all_single = all_single && row.full_count == 1 && row.subfield_count == 1;
    report.rows.push_back(std::move(row));
  }
  EquationSpec representative(
      f25, {{f25.one(), 3, f25.zero()}, {f25.element(f25.generator()), 3, f25.zero()}},
      f25.zero());
  report.eq4 = check_eq4(representative, 1);
  report.t3 = check_t3(representative, 1);
  report.reproduced = all_single && report.eq4.holds &&
                      report.eq4.auxiliary.at("coefficients_in_subfield") == 0 &&
                      !report.t3.holds;
  return report;
}

std::string statement_name(Statement statement) {
  switch (statement) {
    case Statement::t1: return "t1";
    case Statement::t2: return "t2";
    case Statement::t3: return "t3";
    case Statement::mj: return "mj";
  }
  throw std::logic_error("statement_name: bad statement");
}

Statement statement_from_string(const std::string& text) {
  std::string lower;
  for (char ch : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "t1") return Statement::t1;
  if (lower == "t2") return Statement::t2;
  if (lower == "t3") return Statement::t3;
  if (lower == "mj") return Statement::mj;
  throw std::invalid_argument("unknown statement '" + text + "' (expected t1, t2, t3 or mj)");
}

namespace {

struct PlannedInstance {
  std::uint64_t q = 0;
  std::size_t n = 0;
  unsigned ell = 0;
  std::vector<std::uint64_t> m;
};

unsigned default_draws(Statement statement) {
  switch (statement) {
    case Statement::t1:
    case Statement::mj:
      return 12;
    case Statement::t2:
    case Statement::t3:
      return 3;
  }
  return 1;
}

// Every degree vector in [1, limit]^n, odometer order, last index fastest.
void append_degree_grid(std::vector<PlannedInstance>& plan, std::uint64_t q, std::size_t n,
                        unsigned ell, std::uint64_t limit, unsigned draws) {
  std::vector<std::uint64_t> m(n, 1);
  for (;;) {
    for (unsigned d = 0; d < draws; ++d) plan.push_back({q, n, ell, m});
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++m[j] <= limit) break;
      m[j] = 1;
      if (j == 0) return;
    }
  }
}

SweepInstance evaluate_instance(Statement statement, const Field& field,
                                const PlannedInstance& planned, std::uint64_t ordinal,
                                std::uint64_t seed) {
  const std::uint64_t q = field.q();
  SweepInstance instance;
  instance.ordinal = ordinal;
  instance.q = q;
  instance.n = planned.n;
  instance.ell = planned.ell;
  instance.m = planned.m;

  std::mt19937_64 rng(mix_seed(seed, ordinal));
  std::vector<Term> terms;
  for (std::size_t j = 0; j < planned.n; ++j) {
    const auto b = static_cast<std::uint32_t>(1 + rng() % (q - 1));
    std::uint32_t a = 0;
    if (statement == Statement::t2) a = static_cast<std::uint32_t>(rng() % q);
    instance.b.push_back(b);
    if (statement == Statement::t2) instance.a.push_back(a);
    terms.push_back({field.element(b), planned.m[j], field.element(a)});
  }
  instance.c = static_cast<std::uint32_t>(rng() % q);
  EquationSpec eq(field, std::move(terms), field.element(instance.c));

  Verdict& verdict = instance.verdict;
  switch (statement) {
    case Statement::t1:
    case Statement::mj:
      verdict.condition = check_t1(eq);
      break;
    case Statement::t2:
      verdict.condition = check_t2(eq);
      break;
    case Statement::t3:
      verdict.condition = check_t3(eq, planned.ell);
      break;
  }
  if (!verdict.condition.holds) {
    verdict.note = "condition does not hold; nothing to check";
    return instance;
  }
  if (statement == Statement::t3) {
    RestrictionSet subfield(field, std::vector<std::vector<std::uint32_t>>(
                                       planned.n, field.subfield_elements(planned.ell)));
    verdict.count = count_convolution(eq, subfield);
  } else {
    verdict.count = count_convolution(eq);
  }
  if (statement == Statement::mj) {
    verdict.consistent = verdict.count->divisible_by_p;
  } else {
    verdict.consistent = verdict.count->N != 1;
  }
  return instance;
}

}  // namespace

std::vector<SweepInstance> sweep_verify(Statement statement, const SweepOptions& options) {
  if (options.qs.empty()) throw std::invalid_argument("sweep_verify: no field orders given");
  const unsigned draws = options.draws > 0 ? options.draws : default_draws(statement);

  std::map<std::uint64_t, Field> fields;
  for (std::uint64_t q : options.qs) {
    if (fields.contains(q)) continue;
    const auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("sweep_verify: " + std::to_string(q) + " is not a prime power");
    fields.emplace(q, make_field(pp->first, pp->second));
  }

  std::vector<PlannedInstance> plan;
  for (std::uint64_t q : options.qs) {
    const Field& field = fields.at(q);
    for (std::size_t n : options.ns) {
      if (n < 1) throw std::invalid_argument("sweep_verify: arity must be >= 1");
      if (statement == Statement::t3) {
        for (unsigned ell = 1; ell <= field.degree(); ++ell) {
          if (field.degree() % ell != 0) continue;
          append_degree_grid(plan, q, n, ell, q - 1, draws);
        }
      } else {
        const std::uint64_t limit = statement == Statement::t2 ? q + 1 : q - 1;
        append_degree_grid(plan, q, n, 0, limit, draws);
      }
    }
  }

  std::vector<SweepInstance> results(plan.size());
  const unsigned jobs = std::max(1u, options.jobs);
  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      results[i] =
          evaluate_instance(statement, fields.at(plan[i].q), plan[i], i, options.seed);
    }
  };
  if (jobs == 1 || plan.size() < 2 * jobs) {
    run_range(0, plan.size());
  } else {
    const std::size_t chunk = (plan.size() + jobs - 1) / jobs;
    std::vector<std::future<void>> workers;
    for (std::size_t lo = 0; lo < plan.size(); lo += chunk) {
      const std::size_t hi = std::min(lo + chunk, plan.size());
      workers.push_back(std::async(std::launch::async, run_range, lo, hi));
    }
    for (auto& worker : workers) worker.get();
  }
  return results;
}

}  // namespace ffcount
