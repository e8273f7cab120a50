#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffcount/equations.hpp"
#include "ffcount/gf.hpp"
#include "ffcount/notation.hpp"
#include "ffcount/numeric.hpp"
#include "ffcount/theorems.hpp"
#include "ffcount/valueset.hpp"

namespace ffcount::cli {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  return Format::text;
}

ojson element_to_json(const Field& field, std::uint32_t x) {
  if (field.degree() == 1) return x;
  return ojson(field.coeffs(x));
}

// Elements in CSV cells: the residue for prime fields, coefficients joined
// by ';' otherwise (cells stay comma-free).
std::string element_to_csv(const Field& field, std::uint32_t x) {
  if (field.degree() == 1) return std::to_string(x);
  std::string out;
  for (const auto c : field.coeffs(x)) {
    if (!out.empty()) out += ';';
    out += std::to_string(c);
  }
  return out;
}

template <typename T>
std::string join(const std::vector<T>& values, char sep) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (const char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

const char* method_name(CountMethod method) {
  return method == CountMethod::naive ? "naive" : "convolution";
}

ojson condition_to_json(const ConditionReport& report) {
  ojson aux = ojson::object();
  for (const auto& [key, value] : report.auxiliary) aux[key] = value.str();
  return ojson{{"name", report.name},
               {"lhs", report.lhs.str()},
               {"rhs", report.rhs.str()},
               {"holds", report.holds},
               {"auxiliary", aux}};
}

ojson count_to_json(const CountReport& report) {
  ojson j{{"method", method_name(report.method)},
          {"q", report.q},
          {"n", report.n},
          {"N", report.N.str()},
          {"divisible_by_p", report.divisible_by_p}};
  j["has_nontrivial"] = report.has_nontrivial ? ojson(*report.has_nontrivial) : ojson(nullptr);
  return j;
}

ojson verdict_to_json(const Verdict& verdict) {
  ojson j{{"condition", condition_to_json(verdict.condition)}};
  j["count"] = verdict.count ? count_to_json(*verdict.count) : ojson(nullptr);
  j["consistent"] = verdict.consistent;
  j["note"] = verdict.note;
  return j;
}

// Same shape the count subcommand accepts as input, so reports round-trip.
ojson equation_to_json(const EquationSpec& eq) {
  const Field& field = eq.field();
  ojson terms = ojson::array();
  for (const auto& term : eq.terms()) {
    terms.push_back(ojson{{"b", element_to_json(field, term.b.index())},
                          {"m", term.m},
                          {"a", element_to_json(field, term.a.index())}});
  }
  return ojson{{"field", field_notation(field)},
               {"c", element_to_json(field, eq.c().index())},
               {"terms", terms}};
}

std::string witness_text(const Field& field, const std::vector<std::uint32_t>& point) {
  std::string out = "(";
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (j > 0) out += ", ";
    if (field.degree() == 1) {
      out += field.element_str(point[j]);
    } else {
      out += "(" + field.element_str(point[j]) + ")";
    }
  }
  out += ")";
  return out;
}

void print_condition_text(const ConditionReport& report, std::ostream& out) {
  out << report.name << ": lhs = " << report.lhs.str() << ", rhs = " << report.rhs.str()
      << ", holds = " << (report.holds ? "yes" : "no") << "\n";
}

// ---------------------------------------------------------------- field --

int run_field(const std::string& field_text, Format format, std::ostream& out) {
  const auto [p, s] = parse_field_notation(field_text);
  const Field field(p, s);
  const std::uint64_t generator_count = euler_phi(field.q() - 1);

  switch (format) {
    case Format::json: {
      ojson j{{"p", p},
              {"s", s},
              {"q", field.q()},
              {"modulus", ojson(field.modulus())},
              {"generator", element_to_json(field, field.generator())},
              {"generator_index", field.generator()},
              {"generator_count", generator_count}};
      out << j.dump() << "\n";
      break;
    }
    case Format::csv: {
      out << "p,s,q,modulus,generator,generator_count\n";
      out << p << "," << s << "," << field.q() << "," << join(field.modulus(), ';') << ","
          << element_to_csv(field, field.generator()) << "," << generator_count << "\n";
      break;
    }
    case Format::text: {
      out << "F_" << field.q() << ": p = " << p << ", s = " << s << "\n";
      out << "modulus coefficients (constant first): " << join(field.modulus(), ',') << "\n";
      out << "least generator: " << field.element_str(field.generator()) << " (index "
          << field.generator() << ")\n";
      out << "generator count: " << generator_count << "\n";
      break;
    }
  }
  return 0;
}

// ------------------------------------------------------------- valueset --

int run_valueset(const std::string& field_text, std::uint64_t m_max, std::uint64_t limit,
                 Format format, std::ostream& out) {
  const auto [p, s] = parse_field_notation(field_text);
  const Field field(p, s);
  const std::uint64_t q = field.q();
  const std::uint64_t power_max = m_max > 0 ? m_max : 2 * (q - 1);
  const std::uint64_t dickson_max = m_max > 0 ? m_max : 2 * (q + 1);

  std::uint64_t rows = 0;
  std::uint64_t mismatches = 0;
  bool truncated = false;

  if (format == Format::csv) {
    out << "q,m,a,formula,enumerated,delta,match\n";
  } else if (format == Format::text) {
    out << std::setw(8) << "q" << std::setw(8) << "m" << std::setw(12) << "a" << std::setw(10)
        << "formula" << std::setw(12) << "enumerated" << std::setw(8) << "delta" << std::setw(8)
        << "match" << "\n";
  }

  const auto emit_row = [&](std::uint64_t m, std::uint32_t a, std::uint64_t formula,
                            std::uint64_t enumerated,
                            const std::optional<Rational>& delta) -> bool {
    if (limit > 0 && rows >= limit) {
      truncated = true;
      return false;
    }
    const bool match = formula == enumerated;
    if (!match) ++mismatches;
    ++rows;
    switch (format) {
      case Format::json: {
        ojson j{{"q", q}, {"m", m}, {"a", element_to_json(field, a)}, {"formula", formula},
                {"enumerated", enumerated}};
        j["delta"] = delta ? ojson(delta->str()) : ojson(nullptr);
        j["match"] = match;
        out << j.dump() << "\n";
        break;
      }
      case Format::csv:
        out << q << "," << m << "," << element_to_csv(field, a) << "," << formula << ","
            << enumerated << "," << (delta ? delta->str() : "") << ","
            << (match ? "true" : "false") << "\n";
        break;
      case Format::text:
        out << std::setw(8) << q << std::setw(8) << m << std::setw(12) << field.element_str(a)
            << std::setw(10) << formula << std::setw(12) << enumerated << std::setw(8)
            << (delta ? delta->str() : "-") << std::setw(8) << (match ? "yes" : "MISMATCH")
            << "\n";
        break;
    }
    return true;
  };

  for (std::uint64_t m = 1; m <= power_max; ++m) {
    const auto report =
        value_set(field, [&](std::uint32_t x) { return field.pow(x, static_cast<std::int64_t>(m)); });
    if (!emit_row(m, 0, power_value_count(q, m), report.cardinality, std::nullopt)) break;
  }
  if (!truncated) {
    for (std::uint32_t a = 1; a < q && !truncated; ++a) {
      for (std::uint64_t m = 1; m <= dickson_max; ++m) {
        const auto report = dickson_value_count(field, m, field.element(a));
        if (!emit_row(m, a, *report.formula_cardinality, report.cardinality, report.delta)) break;
      }
    }
  }

  if (format == Format::text) {
    out << "rows: " << rows << ", mismatches: " << mismatches
        << (truncated ? " (row limit reached)" : "") << "\n";
  }
  return mismatches > 0 ? 1 : 0;
}

// ---------------------------------------------------------------- count --

int run_count(const std::string& eq_path, const std::string& field_text,
              const std::string& method, unsigned restrict_ell, std::uint64_t budget,
              std::uint64_t limit, Format format, std::ostream& out) {
  std::ifstream in(eq_path);
  if (!in) throw std::invalid_argument("cannot open equation file: " + eq_path);
  std::stringstream buffer;
  buffer << in.rdbuf();

  const ParsedEquation parsed = parse_equation_json(buffer.str());
  const Field& field = *parsed.field;
  const EquationSpec& eq = *parsed.eq;
  if (!field_text.empty()) {
    const auto [p, s] = parse_field_notation(field_text);
    if (p != field.p() || s != field.degree()) {
      throw std::invalid_argument("--field disagrees with the equation file's field");
    }
  }

  std::optional<RestrictionSet> restriction;
  if (restrict_ell > 0) {
    restriction.emplace(field, std::vector<std::vector<std::uint32_t>>(
                                   eq.arity(), field.subfield_elements(restrict_ell)));
  }

  std::optional<CountReport> naive;
  std::optional<CountReport> convolution;
  if (method == "naive" || method == "both") naive = count_naive(eq, restriction, budget);
  if (method == "convolution" || method == "both") {
    convolution = count_convolution(eq, restriction);
  }
  const bool match = !naive || !convolution || naive->N == convolution->N;
  const CountReport& primary = naive ? *naive : *convolution;

  std::vector<std::vector<std::uint32_t>> witnesses;
  if (limit > 0) witnesses = enumerate_solutions(eq, restriction, limit, budget);

  switch (format) {
    case Format::json: {
      ojson counts = ojson::object();
      if (naive) counts["naive"] = naive->N.str();
      if (convolution) counts["convolution"] = convolution->N.str();
      ojson j{{"equation", equation_to_json(eq)}, {"q", field.q()}, {"n", eq.arity()}};
      j["restrict_subfield"] = restrict_ell > 0 ? ojson(restrict_ell) : ojson(nullptr);
      j["counts"] = counts;
      j["match"] = match;
      j["divisible_by_p"] = primary.divisible_by_p;
      j["has_nontrivial"] =
          primary.has_nontrivial ? ojson(*primary.has_nontrivial) : ojson(nullptr);
      if (limit > 0) {
        ojson ws = ojson::array();
        for (const auto& point : witnesses) {
          ojson w = ojson::array();
          for (const auto x : point) w.push_back(element_to_json(field, x));
          ws.push_back(w);
        }
        j["witnesses"] = ws;
      }
      out << j.dump() << "\n";
      break;
    }
    case Format::csv: {
      out << "method,q,n,N,divisible_by_p,has_nontrivial,match\n";
      for (const auto* report : {naive ? &*naive : nullptr, convolution ? &*convolution : nullptr}) {
        if (report == nullptr) continue;
        out << method_name(report->method) << "," << report->q << "," << report->n << ","
            << report->N.str() << "," << (report->divisible_by_p ? "true" : "false") << ","
            << (report->has_nontrivial ? (*report->has_nontrivial ? "true" : "false") : "")
            << "," << (match ? "true" : "false") << "\n";
      }
      for (const auto& point : witnesses) {
        std::string cell;
        for (const auto x : point) {
          if (!cell.empty()) cell += '|';
          cell += element_to_csv(field, x);
        }
        out << "witness," << cell << "\n";
      }
      break;
    }
    case Format::text: {
      out << "equation over F_" << field.q() << " in " << eq.arity() << " variables";
      if (restrict_ell > 0) {
        out << ", variables restricted to F_" << field.p();
        if (restrict_ell > 1) out << "^" << restrict_ell;
      }
      out << "\n";
      if (naive) out << "N (naive) = " << naive->N.str() << "\n";
      if (convolution) out << "N (convolution) = " << convolution->N.str() << "\n";
      if (naive && convolution) out << "methods agree: " << (match ? "yes" : "NO") << "\n";
      out << "divisible by p: " << (primary.divisible_by_p ? "yes" : "no") << "\n";
      if (primary.has_nontrivial) {
        out << "zero vector solves; another solution exists: "
            << (*primary.has_nontrivial ? "yes" : "no") << "\n";
      }
      for (const auto& point : witnesses) out << "witness: " << witness_text(field, point) << "\n";
      break;
    }
  }
  return match ? 0 : 1;
}

// --------------------------------------------------------------- verify --

std::vector<std::uint64_t> default_qs(Statement statement) {
  switch (statement) {
    case Statement::t2:
      return {3, 5, 7, 9, 13};
    case Statement::t3:
      return {4, 9, 25};
    default:
      return {3, 4, 5, 7, 9};
  }
}

ojson instance_to_json(Statement statement, const SweepInstance& inst, const Field& field) {
  ojson j{{"ordinal", inst.ordinal}, {"statement", statement_name(statement)}, {"q", inst.q},
          {"n", inst.n}};
  if (statement == Statement::t3) j["ell"] = inst.ell;
  j["m"] = ojson(inst.m);
  ojson b = ojson::array();
  for (const auto x : inst.b) b.push_back(element_to_json(field, x));
  j["b"] = b;
  if (!inst.a.empty()) {
    ojson a = ojson::array();
    for (const auto x : inst.a) a.push_back(element_to_json(field, x));
    j["a"] = a;
  }
  j["c"] = element_to_json(field, inst.c);
  j["verdict"] = verdict_to_json(inst.verdict);
  return j;
}

int run_verify(const std::string& statement_text, std::vector<std::uint64_t> qs,
               std::vector<std::size_t> ns, std::uint64_t seed, unsigned draws, unsigned jobs,
               Format format, std::ostream& out) {
  const Statement statement = statement_from_string(statement_text);
  if (qs.empty()) qs = default_qs(statement);

  SweepOptions options;
  options.qs = qs;
  if (!ns.empty()) options.ns = ns;
  options.seed = seed;
  options.draws = draws;
  options.jobs = jobs;

  const auto instances = sweep_verify(statement, options);

  std::map<std::uint64_t, Field> fields;
  for (const auto q : qs) {
    const auto ps = as_prime_power(q);
    if (ps && fields.find(q) == fields.end()) fields.try_emplace(q, ps->first, ps->second);
  }

  std::uint64_t holding = 0;
  std::uint64_t inconsistent = 0;
  for (const auto& inst : instances) {
    if (inst.verdict.condition.holds) ++holding;
    if (!inst.verdict.consistent) ++inconsistent;
  }

  switch (format) {
    case Format::json: {
      out << "[";
      for (std::size_t i = 0; i < instances.size(); ++i) {
        out << (i == 0 ? "\n" : ",\n")
            << instance_to_json(statement, instances[i], fields.at(instances[i].q)).dump();
      }
      out << "\n]\n";
      break;
    }
    case Format::csv: {
      out << "ordinal,statement,q,n,ell,m,b,a,c,condition,lhs,rhs,holds,N,divisible_by_p,"
             "has_nontrivial,consistent,note\n";
      for (const auto& inst : instances) {
        const Verdict& v = inst.verdict;
        out << inst.ordinal << "," << statement_name(statement) << "," << inst.q << "," << inst.n
            << "," << inst.ell << "," << join(inst.m, ';') << "," << join(inst.b, ';') << ","
            << join(inst.a, ';') << "," << inst.c << "," << v.condition.name << ","
            << v.condition.lhs.str() << "," << v.condition.rhs.str() << ","
            << (v.condition.holds ? "true" : "false") << ","
            << (v.count ? v.count->N.str() : "") << ","
            << (v.count ? (v.count->divisible_by_p ? "true" : "false") : "") << ","
            << (v.count && v.count->has_nontrivial
                    ? (*v.count->has_nontrivial ? "true" : "false")
                    : "")
            << "," << (v.consistent ? "true" : "false") << "," << csv_escape(v.note) << "\n";
      }
      break;
    }
    case Format::text: {
      struct Bucket {
        std::uint64_t total = 0;
        std::uint64_t holds = 0;
        std::uint64_t inconsistent = 0;
      };
      std::map<std::tuple<std::uint64_t, std::size_t, unsigned>, Bucket> buckets;
      for (const auto& inst : instances) {
        auto& bucket = buckets[{inst.q, inst.n, inst.ell}];
        ++bucket.total;
        if (inst.verdict.condition.holds) ++bucket.holds;
        if (!inst.verdict.consistent) ++bucket.inconsistent;
      }
      const bool show_ell = statement == Statement::t3;
      out << "statement: " << statement_name(statement) << " (seed " << seed << ")\n";
      out << std::setw(8) << "q" << std::setw(6) << "n";
      if (show_ell) out << std::setw(6) << "ell";
      out << std::setw(12) << "instances" << std::setw(12) << "holds" << std::setw(14)
          << "inconsistent" << "\n";
      for (const auto& [key, bucket] : buckets) {
        out << std::setw(8) << std::get<0>(key) << std::setw(6) << std::get<1>(key);
        if (show_ell) out << std::setw(6) << std::get<2>(key);
        out << std::setw(12) << bucket.total << std::setw(12) << bucket.holds << std::setw(14)
            << bucket.inconsistent << "\n";
      }
      out << "totals: " << instances.size() << " instances, " << holding << " holding, "
          << inconsistent << " inconsistent\n";
      out << "result: " << (inconsistent == 0 ? "consistent" : "INCONSISTENT") << "\n";
      break;
    }
  }
  return inconsistent > 0 ? 1 : 0;
}

// ------------------------------------------------------------- example4 --

int run_example4_cmd(const std::string& field_text, std::size_t n, std::vector<std::uint64_t> e,
                     std::uint64_t seed, std::uint64_t budget, Format format, std::ostream& out) {
  const auto [p, s] = parse_field_notation(field_text);
  const Field field(p, s);
  const Example4Report report = run_example4(field, n, std::move(e), seed, budget);

  std::vector<std::uint64_t> e_used;
  e_used.reserve(report.eq.terms().size());
  for (const auto& term : report.eq.terms()) e_used.push_back((field.q() - 1) / term.m);

  const bool consistent = report.t2.holds && report.bound.sign <= 0 && report.count.N >= 2 &&
                          count_meets_lower_bound(report.bound, report.count.N);

  switch (format) {
    case Format::json: {
      ojson bound{{"sign", report.bound.sign}};
      bound["exact_value"] =
          report.bound.exact_value ? ojson(report.bound.exact_value->str()) : ojson(nullptr);
      bound["product"] = report.bound.product.str();
      ojson j{{"q", field.q()}, {"n", n}, {"e", ojson(e_used)},
              {"equation", equation_to_json(report.eq)}, {"t2", condition_to_json(report.t2)},
              {"bound", bound}, {"count", count_to_json(report.count)},
              {"consistent", consistent}};
      out << j.dump() << "\n";
      break;
    }
    case Format::csv: {
      out << "q,n,e,c,t2_holds,bound_sign,N,has_nontrivial,consistent\n";
      out << field.q() << "," << n << "," << join(e_used, ';') << ","
          << element_to_csv(field, report.eq.c().index()) << ","
          << (report.t2.holds ? "true" : "false") << "," << report.bound.sign << ","
          << report.count.N.str() << ","
          << (report.count.has_nontrivial && *report.count.has_nontrivial ? "true" : "false")
          << "," << (consistent ? "true" : "false") << "\n";
      break;
    }
    case Format::text: {
      out << "equation over F_" << field.q() << " in " << n << " variables (e = "
          << join(e_used, ',') << ", seed " << seed << "):\n";
      out << "  " << equation_to_json(report.eq).dump() << "\n";
      print_condition_text(report.t2, out);
      out << "lower bound sign: " << report.bound.sign;
      if (report.bound.exact_value) out << " (exact value " << report.bound.exact_value->str() << ")";
      out << "\n";
      out << "N = " << report.count.N.str() << "\n";
      out << "nontrivial solution: "
          << (report.count.has_nontrivial && *report.count.has_nontrivial ? "yes" : "no") << "\n";
      out << "result: " << (consistent ? "consistent" : "INCONSISTENT") << "\n";
      break;
    }
  }
  return consistent ? 0 : 1;
}

// ------------------------------------------------------- counterexample5 --

int run_counterexample5_cmd(Format format, std::ostream& out) {
  const CounterexampleReport report = run_counterexample5();
  const Field field(5, 2);

  switch (format) {
    case Format::json: {
      ojson rows = ojson::array();
      for (const auto& row : report.rows) {
        rows.push_back(ojson{{"g", element_to_json(field, row.g)},
                             {"g_index", row.g},
                             {"full_count", row.full_count.str()},
                             {"subfield_count", row.subfield_count.str()}});
      }
      ojson j{{"rows", rows},
              {"eq4", condition_to_json(report.eq4)},
              {"t3", condition_to_json(report.t3)},
              {"reproduced", report.reproduced}};
      out << j.dump() << "\n";
      break;
    }
    case Format::csv: {
      out << "g,full_count,subfield_count\n";
      for (const auto& row : report.rows) {
        out << element_to_csv(field, row.g) << "," << row.full_count.str() << ","
            << row.subfield_count.str() << "\n";
      }
      break;
    }
    case Format::text: {
      out << "X1^3 + g*X2^3 = 0 over F_25, g ranging over the generators of F_25^*:\n";
      out << std::setw(12) << "g" << std::setw(10) << "index" << std::setw(14) << "N in F_25^2"
          << std::setw(14) << "N in F_5^2" << "\n";
      for (const auto& row : report.rows) {
        out << std::setw(12) << field.element_str(row.g) << std::setw(10) << row.g
            << std::setw(14) << row.full_count.str() << std::setw(14)
            << row.subfield_count.str() << "\n";
      }
      print_condition_text(report.eq4, out);
      print_condition_text(report.t3, out);
      out << "every count is exactly 1: the weakened subfield condition holds but its\n"
             "coefficient-membership clause fails, so no checked guarantee is violated.\n";
      out << "result: " << (report.reproduced ? "reproduced" : "NOT REPRODUCED") << "\n";
      break;
    }
  }
  return report.reproduced ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solution counting and solvability conditions for diagonal and\n"
               "Dickson-polynomial equations over finite fields."};
  app.require_subcommand(1);

  std::string format_text = "text";
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  auto* field_cmd = app.add_subcommand("field", "Describe a field: modulus, generator");
  std::string field_field;
  field_cmd->add_option("--field", field_field, "Field as p^s (bare p means s = 1)")->required();

  auto* valueset_cmd = app.add_subcommand(
      "valueset", "Cross-check value-set cardinality formulas against enumeration");
  std::string valueset_field;
  std::uint64_t valueset_m_max = 0;
  std::uint64_t valueset_limit = 0;
  valueset_cmd->add_option("--field", valueset_field, "Field as p^s")->required();
  valueset_cmd->add_option("--m-max", valueset_m_max,
                           "Largest degree m (default: 2(q-1) for power rows, 2(q+1) for "
                           "parametered rows)");
  valueset_cmd->add_option("--limit", valueset_limit, "Stop after this many rows (0 = all)");

  auto* count_cmd =
      app.add_subcommand("count", "Count solutions of an equation given as a JSON file");
  std::string count_eq;
  std::string count_field;
  std::string count_method = "both";
  unsigned count_ell = 0;
  std::uint64_t count_budget = kDefaultNaiveBudget;
  std::uint64_t count_limit = 0;
  count_cmd->add_option("--eq", count_eq, "Equation JSON file")->required();
  count_cmd->add_option("--field", count_field, "Cross-check against the file's field");
  count_cmd->add_option("--method", count_method, "Counting route")
      ->check(CLI::IsMember({"naive", "convolution", "both"}))
      ->capture_default_str();
  count_cmd->add_option("--restrict-subfield", count_ell,
                        "Restrict every variable to the subfield of this degree");
  count_cmd->add_option("--budget", count_budget, "Domain-size budget for full enumeration")
      ->capture_default_str();
  count_cmd->add_option("--limit", count_limit, "Also list up to this many solutions");

  auto* verify_cmd = app.add_subcommand(
      "verify", "Sweep seeded random equations and check a statement empirically");
  std::string verify_statement;
  std::vector<std::uint64_t> verify_qs;
  std::vector<std::size_t> verify_ns;
  std::uint64_t verify_seed = 1;
  unsigned verify_draws = 0;
  unsigned verify_jobs = 1;
  verify_cmd
      ->add_option("statement", verify_statement,
                   "t1: diagonal second solutions; t2: Dickson second solutions; "
                   "t3: subfield-restricted; mj: count divisible by p")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3", "mj"}));
  verify_cmd->add_option("--q", verify_qs, "Field orders (default depends on the statement)");
  verify_cmd->add_option("--n", verify_ns, "Arities (default 2 3)");
  verify_cmd->add_option("--seed", verify_seed, "Sweep seed")->capture_default_str();
  verify_cmd->add_option("--draws", verify_draws,
                         "Coefficient draws per degree vector (0 = statement default)");
  verify_cmd->add_option("--jobs", verify_jobs, "Worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();

  auto* example4_cmd = app.add_subcommand(
      "example4", "Build the equation family whose closed-form lower bound is nonpositive "
                  "yet a second solution is still guaranteed");
  std::string example4_field = "5";
  std::size_t example4_n = 5;
  std::vector<std::uint64_t> example4_e;
  std::uint64_t example4_seed = 1;
  std::uint64_t example4_budget = kDefaultNaiveBudget;
  example4_cmd->add_option("--field", example4_field, "Field as p^s")->capture_default_str();
  example4_cmd->add_option("--n", example4_n, "Number of variables (> 4)")->capture_default_str();
  example4_cmd->add_option("--e", example4_e,
                           "Divisors e_j of q-1, one per variable (default: all 2)");
  example4_cmd->add_option("--seed", example4_seed, "Coefficient seed")->capture_default_str();
  example4_cmd->add_option("--budget", example4_budget, "Domain-size budget")
      ->capture_default_str();

  auto* counterexample5_cmd = app.add_subcommand(
      "counterexample5", "Reproduce the unique-solution family showing the weakened subfield "
                         "condition needs its coefficient-membership clause");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format format = parse_format(format_text);
  try {
    if (*field_cmd) return run_field(field_field, format, out);
    if (*valueset_cmd) {
      return run_valueset(valueset_field, valueset_m_max, valueset_limit, format, out);
    }
    if (*count_cmd) {
      return run_count(count_eq, count_field, count_method, count_ell, count_budget, count_limit,
                       format, out);
    }
    if (*verify_cmd) {
      return run_verify(verify_statement, verify_qs, verify_ns, verify_seed, verify_draws,
                        verify_jobs, format, out);
    }
    if (*example4_cmd) {
      return run_example4_cmd(example4_field, example4_n, example4_e, example4_seed,
                              example4_budget, format, out);
    }
    if (*counterexample5_cmd) return run_counterexample5_cmd(format, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "inconsistency detected: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ffcount::cli
