#include "ffcount/equations.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffcount/polys.hpp"

namespace ffcount {

namespace {

void require_member(const Field& f, const Element& x, const char* what) {
  if (&x.field() != &f && x.field() != f) {
    throw std::invalid_argument(std::string(what) + ": element from a different field");
  }
}

// Domain of one variable: either an explicit restriction set or all of F_q.
struct VariableDomain {
  const std::vector<std::uint32_t>* subset = nullptr;  // null means full field
  std::uint64_t q = 0;

  std::uint64_t size() const { return subset ? subset->size() : q; }
  std::uint32_t at(std::uint64_t i) const {
    return subset ? (*subset)[i] : static_cast<std::uint32_t>(i);
  }
};

std::vector<VariableDomain> resolve_domains(const EquationSpec& eq,
                                            const std::optional<RestrictionSet>& restriction) {
  const std::size_t n = eq.arity();
  if (restriction && restriction->arity() != n) {
    throw std::invalid_argument("restriction arity does not match the equation");
  }
  std::vector<VariableDomain> domains(n);
  for (std::size_t j = 0; j < n; ++j) {
    domains[j].q = eq.field().q();
    if (restriction) domains[j].subset = &restriction->sets()[j];
  }
  return domains;
}

// Value of term j at every point of its domain, in domain order.
std::vector<std::vector<std::uint32_t>> term_value_tables(
    const EquationSpec& eq, const std::vector<VariableDomain>& domains) {
  const Field& f = eq.field();
  std::vector<std::vector<std::uint32_t>> tables(eq.arity());
  for (std::size_t j = 0; j < eq.arity(); ++j) {
    const Term& term = eq.terms()[j];
    tables[j].resize(domains[j].size());
    for (std::uint64_t i = 0; i < domains[j].size(); ++i) {
      const std::uint32_t x = domains[j].at(i);
      tables[j][i] = f.mul(term.b.index(), dickson_eval_index(f, term.m, x, term.a.index()));
    }
  }
  return tables;
}

bool zero_vector_in_domain(const std::vector<VariableDomain>& domains) {
  for (const VariableDomain& d : domains) {
    if (d.subset && !std::binary_search(d.subset->begin(), d.subset->end(), 0u)) return false;
  }
  return true;
}

bool zero_vector_solves(const EquationSpec& eq) {
  const Field& f = eq.field();
  std::uint32_t sum = 0;
  for (const Term& term : eq.terms()) {
    sum = f.add(sum, f.mul(term.b.index(), dickson_eval_index(f, term.m, 0, term.a.index())));
  }
  return sum == eq.c().index();
}

void check_budget(const std::vector<VariableDomain>& domains, std::uint64_t budget) {
  BigInt points = 1;
  for (const VariableDomain& d : domains) points *= d.size();
  if (points > budget) {
    throw BudgetExceeded("enumeration domain of " + points.str() + " points exceeds budget " +
                         std::to_string(budget));
  }
}

CountReport finish_report(const EquationSpec& eq, BigInt count, CountMethod method,
                          const std::vector<VariableDomain>& domains) {
  CountReport report;
  report.N = std::move(count);
  report.method = method;
  report.q = eq.field().q();
  report.n = eq.arity();
  report.divisible_by_p = report.N % eq.field().p() == 0;
  if (zero_vector_in_domain(domains) && zero_vector_solves(eq)) {
    report.has_nontrivial = report.N >= 2;
  }
  return report;
}

}  // namespace

EquationSpec::EquationSpec(const Field& field, std::vector<Term> terms, Element c)
    : field_(&field), terms_(std::move(terms)), c_(c) {
  if (terms_.empty()) throw std::invalid_argument("EquationSpec: at least one term required");
  require_member(field, c_, "EquationSpec");
  for (const Term& term : terms_) {
    require_member(field, term.b, "EquationSpec");
    require_member(field, term.a, "EquationSpec");
    if (term.b.is_zero()) throw std::invalid_argument("EquationSpec: zero coefficient");
    if (term.m < 1) throw std::invalid_argument("EquationSpec: term degree must be >= 1");
  }
}

bool EquationSpec::is_diagonal() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.a.is_zero(); });
}

RestrictionSet::RestrictionSet(const Field& field,
                               std::vector<std::vector<std::uint32_t>> sets)
    : sets_(std::move(sets)) {
  if (sets_.empty()) throw std::invalid_argument("RestrictionSet: no variable sets");
  for (std::vector<std::uint32_t>& set : sets_) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty()) throw std::invalid_argument("RestrictionSet: empty variable set");
    if (set.back() >= field.q()) {
      throw std::invalid_argument("RestrictionSet: element index out of range");
    }
  }
}

BigInt RestrictionSet::domain_size() const {
  BigInt size = 1;
  for (const auto& set : sets_) size *= set.size();
  return size;
}

CountReport count_naive(const EquationSpec& eq, const std::optional<RestrictionSet>& restriction,
                        std::uint64_t budget) {
  const Field& f = eq.field();
  const std::size_t n = eq.arity();
  const auto domains = resolve_domains(eq, restriction);
  check_budget(domains, budget);
  const auto tables = term_value_tables(eq, domains);
  const std::uint32_t target = eq.c().index();

  // Full nested enumeration with an accumulated prefix sum; the point count
  // is bounded by the budget, so a native accumulator suffices.
  std::uint64_t count = 0;
  auto descend = [&](auto&& self, std::size_t j, std::uint32_t acc) -> void {
    if (j + 1 == n) {
      for (std::uint32_t value : tables[j]) {
        if (f.add(acc, value) == target) ++count;
      }
      return;
    }
    for (std::uint32_t value : tables[j]) self(self, j + 1, f.add(acc, value));
  };
  descend(descend, 0, 0);
  return finish_report(eq, BigInt(count), CountMethod::naive, domains);
}

CountReport count_convolution(const EquationSpec& eq,
                              const std::optional<RestrictionSet>& restriction) {
  const Field& f = eq.field();
  const std::uint64_t q = f.q();
  const auto domains = resolve_domains(eq, restriction);
  const auto tables = term_value_tables(eq, domains);

  // histogram[v] = number of ways the processed prefix of variables sums
  // to v; fold one variable at a time over the additive group.
  std::vector<BigInt> histogram(q, BigInt(0));
  for (std::uint32_t value : tables[0]) ++histogram[value];
  for (std::size_t j = 1; j < eq.arity(); ++j) {
    std::vector<BigInt> var(q, BigInt(0));
    for (std::uint32_t value : tables[j]) ++var[value];
    std::vector<BigInt> folded(q, BigInt(0));
    for (std::uint64_t v = 0; v < q; ++v) {
      if (histogram[v] == 0) continue;
      for (std::uint64_t u = 0; u < q; ++u) {
        if (var[u] == 0) continue;
        folded[f.add(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(u))] +=
            histogram[v] * var[u];
      }
    }
    histogram = std::move(folded);
  }
  return finish_report(eq, histogram[eq.c().index()], CountMethod::convolution, domains);
}

bool has_second_solution(const EquationSpec& eq,
                         const std::optional<RestrictionSet>& restriction) {
  return count_convolution(eq, restriction).N >= 2;
}

std::vector<std::vector<std::uint32_t>> enumerate_solutions(
    const EquationSpec& eq, const std::optional<RestrictionSet>& restriction,
    std::uint64_t limit, std::uint64_t budget) {
  if (limit < 1) throw std::invalid_argument("enumerate_solutions: limit must be >= 1");
  const Field& f = eq.field();
  const std::size_t n = eq.arity();
  const auto domains = resolve_domains(eq, restriction);
  check_budget(domains, budget);
  const auto tables = term_value_tables(eq, domains);
  const std::uint32_t target = eq.c().index();

  std::vector<std::vector<std::uint32_t>> solutions;
  std::vector<std::uint32_t> point(n);
  auto verify = [&]() {
    std::uint32_t sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Term& term = eq.terms()[j];
      sum = f.add(sum, f.mul(term.b.index(),
                             dickson_eval_index(f, term.m, point[j], term.a.index())));
    }
    return sum == target;
  };
  auto descend = [&](auto&& self, std::size_t j, std::uint32_t acc) -> bool {
    for (std::uint64_t i = 0; i < domains[j].size(); ++i) {
      point[j] = domains[j].at(i);
      const std::uint32_t sum = f.add(acc, tables[j][i]);
      if (j + 1 == n) {
        if (sum == target) {
          if (!verify()) throw std::logic_error("enumerate_solutions: witness failed re-check");
          solutions.push_back(point);
          if (solutions.size() == limit) return true;
        }
      } else if (self(self, j + 1, sum)) {
        return true;
      }
    }
    return false;
  };
  descend(descend, 0, 0);
  return solutions;
}

CountReport count_in_subfield(const EquationSpec& eq, unsigned ell, std::uint64_t budget) {
  const Field& f = eq.field();
  const std::vector<std::uint32_t> subfield = f.subfield_elements(ell);
  RestrictionSet restriction(f, std::vector<std::vector<std::uint32_t>>(eq.arity(), subfield));
  return count_naive(eq, restriction, budget);
}

}  // namespace ffcount
