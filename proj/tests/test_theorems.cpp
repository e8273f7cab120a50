#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ffcount/equations.hpp"
#include "ffcount/gf.hpp"
#include "ffcount/numeric.hpp"
#include "ffcount/polys.hpp"
#include "ffcount/theorems.hpp"

using namespace ffcount;

namespace {
Field make(std::uint64_t q) {
  const auto ps = as_prime_power(q);
  REQUIRE(ps.has_value());
  return Field(ps->first, ps->second);
}

EquationSpec diagonal(const Field& f, std::vector<std::uint64_t> ms, std::uint32_t c) {
  std::vector<Term> terms;
  for (const auto m : ms) terms.push_back({f.one(), m, f.zero()});
  return EquationSpec(f, std::move(terms), f.element(c));
}
}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("T1 on the three-squares anchor") {
  const Field f = make(3);
  const auto report = check_t1(diagonal(f, {2, 2, 2}, 1));
  CHECK(report.name == "T1");
  CHECK(report.lhs == Rational(3, 2));
  CHECK(report.rhs == Rational(1));
  CHECK(report.holds);
  CHECK(report.auxiliary.at("d_minus_1") == Rational(2));
  CHECK(report.auxiliary.at("d_minus_3") == Rational(2));

  const EquationSpec dickson(f, {{f.one(), 2, f.one()}}, f.zero());
  CHECK_THROWS_AS(check_t1(dickson), std::invalid_argument);
}

TEST_CASE("T1 lhs depends only on gcd classes of the degrees") {
  std::mt19937_64 rng(3);
  const Field f = make(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t m1 = 1 + rng() % 40;
    const std::uint64_t m2 = 1 + rng() % 40;
    const auto a = check_t1(diagonal(f, {m1, m2}, 1));
    const auto b = check_t1(diagonal(f, {std::gcd(m1, 8ull), std::gcd(m2, 8ull)}, 1));
    CHECK(a.lhs == b.lhs);
    CHECK(a.rhs == b.rhs);
  }
}

TEST_CASE("T2 degenerates to T1 on diagonal equations") {
  std::mt19937_64 rng(17);
  for (const auto q : {3ull, 5ull, 9ull}) {
    const Field f = make(q);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Term> terms;
      const std::size_t n = 2 + rng() % 2;
      for (std::size_t j = 0; j < n; ++j) {
        terms.push_back({f.element(1 + static_cast<std::uint32_t>(rng() % (q - 1))),
                         1 + rng() % (2 * q), f.zero()});
      }
      const EquationSpec eq(f, terms, f.element(static_cast<std::uint32_t>(rng() % q)));
      const auto t1 = check_t1(eq);
      const auto t2 = check_t2(eq);
      CHECK(t2.lhs == t1.lhs);
      CHECK(t2.rhs == t1.rhs);
      CHECK(t2.holds == t1.holds);
      CHECK(t2.auxiliary.at("t") == Rational(n));
    }
  }
}

TEST_CASE("T2 is invariant under term reordering") {
  std::mt19937_64 rng(19);
  const Field f = make(7);
  std::vector<Term> terms{{f.element(2), 3, f.element(4)},
                          {f.element(1), 2, f.zero()},
                          {f.element(5), 4, f.element(1)}};
  const EquationSpec eq(f, terms, f.element(3));
  std::vector<Term> reversed(terms.rbegin(), terms.rend());
  const EquationSpec eq2(f, reversed, f.element(3));
  const auto a = check_t2(eq);
  const auto b = check_t2(eq2);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
  CHECK(a.holds == b.holds);
}

TEST_CASE("T2 auxiliary reports the zero-solution gate separately") {
  const Field f = make(5);
  // Odd degrees with nonzero parameters, c = 0.
  const EquationSpec eq(f, {{f.one(), 3, f.one()}, {f.element(2), 5, f.element(3)}}, f.zero());
  const auto report = check_t2(eq);
  CHECK(report.auxiliary.at("odd_m_gate") == Rational(1));
  CHECK(report.auxiliary.at("c_is_zero") == Rational(1));
  CHECK(report.auxiliary.count("nontrivial_rhs") == 1);

  const EquationSpec even(f, {{f.one(), 2, f.one()}, {f.element(2), 5, f.element(3)}},
                          f.zero());
  CHECK(check_t2(even).auxiliary.at("odd_m_gate") == Rational(0));
}

TEST_CASE("T3 and EQ4 on the cubic counterexample shape") {
  const Field f25 = make(25);
  const EquationSpec eq(
      f25, {{f25.one(), 3, f25.zero()}, {f25.element(f25.generator()), 3, f25.zero()}},
      f25.zero());
  const auto t3 = check_t3(eq, 1);
  CHECK(t3.lhs == Rational(2));
  CHECK(t3.rhs == Rational(6));
  CHECK_FALSE(t3.holds);
  const auto eq4 = check_eq4(eq, 1);
  CHECK(eq4.lhs == Rational(2));
  CHECK(eq4.rhs == Rational(1));
  CHECK(eq4.holds);
  CHECK(eq4.auxiliary.at("coefficients_in_subfield") == Rational(0));
  CHECK_THROWS_AS(check_t3(eq, 3), std::invalid_argument);

  // With subfield coefficients the membership clause is reported as true.
  const EquationSpec subfield_coeffs(
      f25, {{f25.one(), 3, f25.zero()}, {f25.element(2), 3, f25.zero()}}, f25.zero());
  CHECK(check_eq4(subfield_coeffs, 1).auxiliary.at("coefficients_in_subfield") == Rational(1));
}

TEST_CASE("C2 compares floor sums against q - 1") {
  const auto holds = check_c2({2, 2, 2}, 7);
  CHECK(holds.name == "C2");
  CHECK(holds.lhs == Rational(9));
  CHECK(holds.rhs == Rational(6));
  CHECK(holds.holds);
  CHECK(holds.auxiliary.at("floor_1") == Rational(3));

  const auto fails = check_c2({6, 6}, 7);
  CHECK(fails.lhs == Rational(2));
  CHECK_FALSE(fails.holds);
  CHECK_THROWS_AS(check_c2({}, 7), std::invalid_argument);
  CHECK_THROWS_AS(check_c2({0}, 7), std::invalid_argument);
}

TEST_CASE("L1 counts common zeros over restricted boxes") {
  const Field f = make(3);
  MultiPoly h(f, 2);
  h.add_term({1, 0}, f.one());
  h.add_term({0, 1}, f.one());  // X1 + X2

  const RestrictionSet full(f, {{0, 1, 2}, {0, 1, 2}});
  const auto verdict = check_l1_instance({h}, full);
  CHECK(verdict.condition.name == "L1");
  CHECK(verdict.condition.holds);  // (q-1)*1 = 2 < 2 + 2 = 4
  REQUIRE(verdict.count.has_value());
  CHECK(verdict.count->N == 3);
  CHECK(verdict.consistent);

  const RestrictionSet tiny(f, {{0, 1}, {0, 1}});
  const auto skipped = check_l1_instance({h}, tiny);  // 2 < 1 + 1 fails
  CHECK_FALSE(skipped.condition.holds);
  CHECK_FALSE(skipped.count.has_value());
  CHECK(skipped.consistent);
  CHECK(skipped.note == "condition does not hold; nothing to check");

  const auto refused = check_l1_instance({h}, full, 4);
  CHECK_FALSE(refused.count.has_value());
  CHECK(refused.note == "domain exceeds budget; unchecked");
}

TEST_CASE("lower bound sign and exact value") {
  std::mt19937_64 rng(55);
  for (const auto q : {3ull, 5ull, 9ull}) {
    const Field f = make(q);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = 1 + rng() % 3;
      std::vector<Term> terms;
      for (std::size_t j = 0; j < n; ++j) {
        terms.push_back({f.element(1 + static_cast<std::uint32_t>(rng() % (q - 1))),
                         1 + rng() % (q + 1),
                         f.element(static_cast<std::uint32_t>(rng() % q))});
      }
      const EquationSpec eq(f, terms, f.element(static_cast<std::uint32_t>(rng() % q)));
      const auto bound = solution_count_lower_bound(eq);
      if (n % 2 == 0) {
        REQUIRE(bound.exact_value.has_value());
        const BigInt& B = *bound.exact_value;
        CHECK((B > 0 ? 1 : (B < 0 ? -1 : 0)) == bound.sign);
      } else {
        CHECK_FALSE(bound.exact_value.has_value());
      }
      // The bound is a theorem: every exact count satisfies it.
      CHECK(count_meets_lower_bound(bound, count_convolution(eq).N));
    }
  }
}

TEST_CASE("count_meets_lower_bound decides the squared comparison") {
  const Field f = make(5);
  const EquationSpec eq(f, {{f.one(), 1, f.zero()}, {f.one(), 1, f.zero()}}, f.zero());
  const auto bound = solution_count_lower_bound(eq);
  // n = 2, P = (d^+ + d^-)^2 = 4: B = 5 - 4*4 = -11.
  REQUIRE(bound.exact_value.has_value());
  CHECK(*bound.exact_value == -11);
  CHECK(bound.sign == -1);
  CHECK(count_meets_lower_bound(bound, 0));

  // 27^4 > 26^2 * (2^4)^2, so four linear terms over F_27 give a positive
  // bound: B = 27^3 - 27*26*16 = 8451.
  const Field f27 = make(27);
  const EquationSpec linear(
      f27, std::vector<Term>(4, Term{f27.one(), 1, f27.zero()}), f27.zero());
  const auto positive = solution_count_lower_bound(linear);
  REQUIRE(positive.exact_value.has_value());
  CHECK(*positive.exact_value == 8451);
  CHECK(positive.sign == 1);
  CHECK_FALSE(count_meets_lower_bound(positive, 0));
  CHECK(count_meets_lower_bound(positive, count_convolution(linear).N));
}

TEST_CASE("assembled bound family always has the trivial solution") {
  std::mt19937_64 rng(91);
  for (const auto q : {5ull, 9ull}) {
    const Field f = make(q);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto report = run_example4(f, 5, {}, seed, kDefaultNaiveBudget);
      CHECK(report.t2.holds);
      CHECK(report.bound.sign <= 0);
      REQUIRE(report.count.has_nontrivial.has_value());
      CHECK(*report.count.has_nontrivial);
      CHECK(report.count.N >= 2);
      CHECK(count_meets_lower_bound(report.bound, report.count.N));
    }
  }
}

TEST_CASE("family construction validates its preconditions") {
  const Field f = make(5);
  const std::vector<Element> good_a(5, f.one());
  const std::vector<Element> good_b(5, f.element(2));
  CHECK_THROWS_AS(build_example4(f, {2, 2, 2, 2}, good_a, good_b), std::invalid_argument);
  CHECK_THROWS_AS(build_example4(f, {3, 2, 2, 2, 2}, good_a, good_b), std::invalid_argument);
  CHECK_THROWS_AS(build_example4(f, {2, 2, 2, 2, 2}, {}, good_b), std::invalid_argument);

  const EquationSpec eq = build_example4(f, {2, 2, 2, 2, 2}, good_a, good_b);
  // c is chosen so that the all-zeros vector solves.
  const auto report = count_naive(eq);
  REQUIRE(report.has_nontrivial.has_value());
  CHECK(eq.arity() == 5);
}

TEST_CASE("run_example4 is deterministic in the seed") {
  const Field f = make(5);
  const auto a = run_example4(f, 5, {}, 42, kDefaultNaiveBudget);
  const auto b = run_example4(f, 5, {}, 42, kDefaultNaiveBudget);
  REQUIRE(a.eq.terms().size() == b.eq.terms().size());
  for (std::size_t j = 0; j < a.eq.terms().size(); ++j) {
    CHECK(a.eq.terms()[j].b == b.eq.terms()[j].b);
    CHECK(a.eq.terms()[j].a == b.eq.terms()[j].a);
    CHECK(a.eq.terms()[j].m == b.eq.terms()[j].m);
  }
  CHECK(a.eq.c() == b.eq.c());
}

TEST_CASE("unique-solution scenario reproduces") {
  const auto report = run_counterexample5();
  CHECK(report.reproduced);
  CHECK(report.rows.size() == 8);
  for (const auto& row : report.rows) {
    CHECK(row.full_count == 1);
    CHECK(row.subfield_count == 1);
  }
  CHECK(report.eq4.holds);
  CHECK_FALSE(report.t3.holds);
}

TEST_CASE("statement names round trip") {
  CHECK(statement_name(Statement::t1) == "t1");
  CHECK(statement_from_string("T2") == Statement::t2);
  CHECK(statement_from_string("mj") == Statement::mj);
  CHECK_THROWS_AS(statement_from_string("t7"), std::invalid_argument);
}

TEST_CASE("sweeps are deterministic and job-count independent") {
  SweepOptions options;
  options.qs = {3, 4};
  options.ns = {2};
  options.seed = 9;
  options.draws = 2;
  options.jobs = 1;
  const auto serial = sweep_verify(Statement::t1, options);
  options.jobs = 3;
  const auto parallel = sweep_verify(Statement::t1, options);
  REQUIRE(serial.size() == parallel.size());
  // q = 3: 2^2 grid points, q = 4: 3^2, times 2 draws.
  CHECK(serial.size() == (4 + 9) * 2);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].ordinal == parallel[i].ordinal);
    CHECK(serial[i].q == parallel[i].q);
    CHECK(serial[i].m == parallel[i].m);
    CHECK(serial[i].b == parallel[i].b);
    CHECK(serial[i].c == parallel[i].c);
    CHECK(serial[i].verdict.consistent == parallel[i].verdict.consistent);
    if (serial[i].verdict.count) {
      REQUIRE(parallel[i].verdict.count.has_value());
      CHECK(serial[i].verdict.count->N == parallel[i].verdict.count->N);
    }
  }
}

TEST_CASE("small sweeps come back fully consistent") {
  for (const auto statement : {Statement::t1, Statement::t2, Statement::t3, Statement::mj}) {
    SweepOptions options;
    options.qs = {3, 4, 5};
    options.ns = {2};
    options.seed = 1;
    options.draws = 2;
    const auto instances = sweep_verify(statement, options);
    CHECK(!instances.empty());
    for (const auto& inst : instances) CHECK(inst.verdict.consistent);
  }
}

TEST_CASE("sweep rejects non-prime-power orders") {
  SweepOptions options;
  options.qs = {6};
  CHECK_THROWS_AS(sweep_verify(Statement::t1, options), std::invalid_argument);
}

}  // TEST_SUITE
