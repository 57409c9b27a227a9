#include "hecke/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <utility>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hecke/asymptotics.hpp"
#include "hecke/hecke_matrix.hpp"
#include "hecke/recurrence.hpp"

namespace hecke::cli {

using json = nlohmann::ordered_json;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return kExitBudget;
    case ErrorCode::VerificationMismatch:
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::SingularSystem: return kExitMismatch;
    default: return kExitInvalidConfig;
  }
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

namespace {

// One output cell: the CSV text and the JSON value carry the same number.
struct Cell {
  std::string text;
  json value;
};

Cell cell(const BigInt& v) {
  static const BigInt kJsonSafe = BigInt(1) << 53;
  std::string s = to_decimal(v);
  if (abs(v) < kJsonSafe) return {s, json(v.convert_to<long long>())};
  return {s, json(s)};
}
Cell cell(long long v) { return {std::to_string(v), json(v)}; }
Cell cell(int v) { return cell(static_cast<long long>(v)); }
Cell cell(std::string s) { return {s, json(s)}; }
Cell cell(bool b) { return {b ? "true" : "false", json(b)}; }
Cell cell_fixed(long double v, int precision) {
  std::string s = fmt::format("{:.{}f}", static_cast<double>(v), precision);
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return {s, json(std::stod(s))};
}
Cell cell_null(std::string text) { return {std::move(text), json(nullptr)}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Output {
  std::string format = "csv";
  std::string path;
};

void emit(const Output& o, std::ostream& out, const json& header, const Table& table) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!o.path.empty()) {
    file.open(o.path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidConfig, "cannot open output file '" + o.path + "'");
    os = &file;
  }
  if (o.format == "json") {
    json doc = header;
    json rows = json::array();
    for (const auto& r : table.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < r.size(); ++i) obj[table.columns[i]] = r[i].value;
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    *os << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) *os << (i ? "," : "") << table.columns[i];
  *os << '\n';
  for (const auto& r : table.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) *os << (i ? "," : "") << r[i].text;
    *os << '\n';
  }
}

void emit_json(const Output& o, std::ostream& out, const json& doc) {
  if (o.path.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidConfig, "cannot open output file '" + o.path + "'");
  file << doc.dump(2) << '\n';
}

json header(std::string_view command) {
  json h;
  h["schema"] = 1;
  h["command"] = command;
  return h;
}

BigInt btype_count(const GroupParams& params, int t) {
  return params.is_finite_even() ? count_btype(params, t) : BigInt(0);
}

// ---------------------------------------------------------------------------
// verify

Recurrence recurrence_for(const GroupParams& params, Base base, const std::optional<Perturbation>& perturb) {
  Recurrence rec = build_recurrence(params, base);
  if (perturb) rec.initial.begin()->second += perturb->delta;
  return rec;
}

std::vector<Base> bases_of(const GroupParams& params) {
  if (params.is_finite_even()) return {Base::Order2, Base::OrderK};
  return {Base::Order2};
}

std::string group_label(const GroupParams& params, std::optional<Base> base = std::nullopt) {
  std::string s = "k=" + params.label();
  if (base) s += fmt::format("/base={}", to_string(*base));
  return s;
}

CheckResult oracle_check(const GroupParams& params, Base base, int t_max, const std::optional<Perturbation>& perturb) {
  CheckResult r{"oracle", group_label(params, base), true, std::nullopt, ""};
  const CountSeq seq = eval_counts(recurrence_for(params, base, perturb), t_max);
  for (int t = 1; t <= t_max; ++t) {
    const BigInt expected = seq.values.contains(t) ? seq.at(t) : BigInt(0);
    const BigInt got = enumerate_normal_forms(params, base, t).size();
    if (got != expected) {
      r.passed = false;
      r.first_bad_t = t;
      r.detail = fmt::format("enumeration {} vs recurrence {}", to_decimal(got), to_decimal(expected));
      return r;
    }
  }
  r.detail = fmt::format("t <= {}", t_max);
  return r;
}

CheckResult pairing_result(const GroupParams& params, Base base, const std::vector<ClassTally>& tallies) {
  CheckResult r{"pairing", group_label(params, base), true, std::nullopt, ""};
  std::uint64_t powers = 0;
  for (const auto& tally : tallies) {
    const PairingReport rep = pairing_check(params, base, tally.t, tally);
    powers += rep.proper_powers;
    if (!rep.ok()) {
      r.passed = false;
      r.first_bad_t = tally.t;
      r.detail = fmt::format("forms {} btype {} buckets {} bad {} census {} uncovered {}", rep.forms,
                             rep.btype_classes, rep.buckets, rep.bad_buckets, rep.census_classes, rep.uncovered);
      return r;
    }
  }
  r.detail = fmt::format("t <= {}, {} proper-power classes", tallies.size(), powers);
  return r;
}

CheckResult btype_check(const GroupParams& params, int t_max) {
  CheckResult r{"btype-bound", group_label(params), true, std::nullopt, ""};
  for (const auto& row : btype_bound_check(params, t_max)) {
    if (!row.holds) {
      r.passed = false;
      r.first_bad_t = row.t;
      r.detail = fmt::format("{} > {:.6f}", to_decimal(row.count), row.bound);
      return r;
    }
  }
  r.detail = fmt::format("t <= {}", t_max);
  return r;
}

CheckResult hyperbolic_check(const GroupParams& params, int t_max, const CensusOptions& copts) {
  CheckResult r{"hyperbolic", group_label(params), true, std::nullopt, ""};
  const Word ab = multiply(letter_b(1, params), letter_a(params));
  if (classify(evaluate(ab)).kind != TraceKind::Parabolic) {
    r.passed = false;
    r.detail = "BA is not parabolic";
    return r;
  }
  std::uint64_t checked = 0;
  for (int t = 1; t <= t_max; ++t) {
    for (const auto& exps : enumerate_class_keys(params, t, copts)) {
      bool reciprocal = false;
      for (Base b : bases_of(params)) reciprocal = reciprocal || is_reciprocal_exponents(exps, params, b);
      if (!reciprocal) continue;
      ++checked;
      const TraceClass tc = classify(evaluate(word_from_ab_exponents(exps, params)));
      if (tc.kind != TraceKind::Hyperbolic) {
        r.passed = false;
        r.first_bad_t = t;
        r.detail = fmt::format("|trace| = {:.12f}", tc.abs_trace);
        return r;
      }
    }
  }
  r.detail = fmt::format("{} reciprocal classes, t <= {}", checked, t_max);
  return r;
}

// (1/4) sqrt2^t (1 + (-1)^t)
BigInt modular_count(int t) { return t % 2 ? BigInt(0) : BigInt(1) << (t / 2 - 1); }

CheckResult closed_form_check(const GroupParams& params, const std::vector<ClassTally>& tallies,
                              const std::optional<Perturbation>& perturb) {
  CheckResult r{"closed-form", group_label(params), true, std::nullopt, ""};
  const CountSeq seq = eval_counts(recurrence_for(params, Base::Order2, perturb), 60);
  auto fail = [&](int t, std::string detail) {
    r.passed = false;
    r.first_bad_t = t;
    r.detail = std::move(detail);
    return r;
  };
  if (params.is_infinite()) {
    for (int t = 1; t <= 30; ++t) {
      if (seq.at(t) != closed_form_zinf(t)) return fail(t, "recurrence vs (2^t + 2(-1)^t)/3");
    }
    for (const auto& tally : tallies) {
      if (BigInt(tally.reciprocal[0]) * 2 != closed_form_zinf(tally.t)) {
        return fail(tally.t, "census classes vs (2^t + 2(-1)^t)/6");
      }
    }
    r.detail = fmt::format("recurrence t <= 30, census t <= {}", tallies.size());
    return r;
  }
  for (int t = 2; t <= 60; ++t) {
    if (seq.at(t) != 2 * modular_count(t)) return fail(t, "recurrence vs sqrt2^t (1+(-1)^t)/2");
  }
  for (const auto& tally : tallies) {
    if (BigInt(tally.reciprocal[0]) != modular_count(tally.t)) {
      return fail(tally.t, "census classes vs sqrt2^t (1+(-1)^t)/4");
    }
  }
  r.detail = fmt::format("recurrence t <= 60, census t <= {}", tallies.size());
  return r;
}

void asymptotic_checks(const GroupParams& params, Base base, const std::optional<Perturbation>& perturb,
                       std::vector<CheckResult>& out) {
  const Recurrence rec = recurrence_for(params, base, perturb);
  const AsymptoticEstimate est = solve_coefficients(char_poly(params, base), rec);
  const CountSeq seq = eval_counts(rec, rec.first_t() + 60);

  CheckResult recon{"reconstruction", group_label(params, base), true, std::nullopt, ""};
  long double worst = 0;
  for (int t = rec.first_t(); t < rec.first_t() + 40; ++t) {
    const long double exact = to_long_double(seq.at(t));
    const long double err = std::abs(est.reconstruct(t) - Complex(exact));
    const long double rel = exact == 0 ? err : err / exact;
    worst = std::max(worst, rel);
    if (rel >= 1e-9L && recon.passed) {
      recon.passed = false;
      recon.first_bad_t = t;
    }
  }
  recon.detail = fmt::format("max relative residual {:.3e}", static_cast<double>(worst));
  out.push_back(std::move(recon));

  CheckResult ratio{"ratio", group_label(params, base), true, std::nullopt, ""};
  const long double emp = empirical_coefficient(seq, est.dominant_root, 60);
  const long double rel = std::abs(emp / est.leading_coeff - 1);
  ratio.passed = rel < 0.01L;
  if (!ratio.passed) ratio.first_bad_t = 60;
  ratio.detail = fmt::format("count/root^60 = {:.8f}, coefficient {:.8f}", static_cast<double>(emp),
                             static_cast<double>(est.leading_coeff));
  out.push_back(std::move(ratio));
}

// Even k: both cone points together, B-type classes counted once.
CheckResult combined_check(const GroupParams& params, const std::optional<Perturbation>& perturb) {
  CheckResult r{"combined", group_label(params), true, std::nullopt, ""};
  const Recurrence r2 = recurrence_for(params, Base::Order2, perturb);
  const Recurrence rk = recurrence_for(params, Base::OrderK, perturb);
  const auto d = solve_coefficients(char_poly(params, Base::Order2), r2);
  const auto e = solve_coefficients(char_poly(params, Base::OrderK), rk);
  const BigInt total = eval_counts(r2, 60).at(60) + eval_counts(rk, 60).at(60);
  const BigInt overlap = count_btype(params, 60);
  const long double share = to_long_double(overlap) / to_long_double(total);
  const long double ratio = to_long_double(total - overlap) / 2 / std::pow(d.dominant_root, 60);
  const long double target = (d.leading_coeff + e.leading_coeff) / 2;
  r.passed = share < 0.01L && std::abs(ratio / target - 1) < 0.01L;
  if (!r.passed) r.first_bad_t = 60;
  r.detail = fmt::format("ratio {:.8f}, (d+e)/2 = {:.8f}, B-type share {:.2e}", static_cast<double>(ratio),
                         static_cast<double>(target), static_cast<double>(share));
  return r;
}

json to_json(const VerifyReport& rep) {
  json doc = header("verify");
  doc["passed"] = rep.ok();
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j;
    j["name"] = c.name;
    j["group"] = c.group;
    j["passed"] = c.passed;
    j["first_bad_t"] = c.first_bad_t ? json(*c.first_bad_t) : json(nullptr);
    j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

// ---------------------------------------------------------------------------
// commands

struct Common {
  std::string k = "4";
  std::string base = "2";
  int t_max = 10;
  std::string method = "recurrence";
  Output output;
  unsigned threads = 1;
  std::uint64_t budget = CensusOptions{}.budget;

  GroupParams params() const { return GroupParams::parse(k); }
  Base parsed_base() const {
    Base b = parse_base(base);
    validate_base(params(), b);
    return b;
  }
  CensusOptions census() const { return {threads == 0 ? 1u : threads, budget}; }
};

void require_t(int t_max) {
  if (t_max < 1) throw Error(ErrorCode::InvalidConfig, "--t-max must be >= 1");
}

void cmd_count(const Common& c, std::ostream& out) {
  const GroupParams params = c.params();
  const Base base = c.parsed_base();
  require_t(c.t_max);
  const bool use_rec = c.method != "census";
  const bool use_census = c.method != "recurrence";

  const Recurrence rec = build_recurrence(params, base);
  const int first = rec.first_t();
  Table table;
  json h = header("count");
  h["k"] = params.label();
  h["base"] = to_string(base);
  h["method"] = c.method;

  std::optional<CountSeq> seq;
  if (use_rec) seq = eval_counts(rec, c.t_max);
  if (!use_census) {
    table.columns = {"t", "n_forms", "n_btype"};
    for (int t = first; t <= c.t_max; ++t) {
      table.rows.push_back({cell(t), cell(seq->at(t)), cell(btype_count(params, t))});
    }
    emit(c.output, out, h, table);
    return;
  }

  const auto rows = census(params, base, c.t_max, c.census());
  if (seq) {
    for (const auto& row : rows) {
      const BigInt expected = seq->values.contains(row.t) ? seq->at(row.t) : BigInt(0);
      if (row.n_forms != expected) {
        throw Error(ErrorCode::VerificationMismatch,
                    fmt::format("first mismatch at t={}: census {} vs recurrence {}", row.t,
                                to_decimal(row.n_forms), to_decimal(expected)));
      }
    }
  }
  table.columns = {"t", "n_forms", "n_btype", "n_classes", "n_primitive"};
  for (const auto& row : rows) {
    if (row.t < first) continue;
    table.rows.push_back({cell(row.t), cell(row.n_forms), cell(row.n_btype), cell(row.n_classes), cell(row.n_primitive)});
  }
  emit(c.output, out, h, table);
}

void cmd_seq(const Common& c, std::ostream& out) {
  const GroupParams params = c.params();
  const Base base = c.parsed_base();
  require_t(c.t_max);
  const CountSeq seq = eval_counts(build_recurrence(params, base), c.t_max);
  Table table{{"t", "count"}, {}};
  for (const auto& [t, v] : seq.values) table.rows.push_back({cell(t), cell(v)});
  json h = header("seq");
  h["k"] = params.label();
  h["base"] = to_string(base);
  emit(c.output, out, h, table);
}

void cmd_table(const Common& c, int k_min, int k_max, bool with_inf, int precision, std::ostream& out) {
  const Base base = parse_base(c.base);
  if (k_min < 3 || k_max < k_min) throw Error(ErrorCode::InvalidConfig, "need 3 <= --k-min <= --k-max");
  std::vector<GroupParams> groups;
  for (int k = k_min; k <= k_max; ++k) groups.push_back(GroupParams::finite(k));
  if (with_inf) groups.push_back(GroupParams::infinite());

  Table table{{"k", "polynomial", "dominant_root", "coefficient"}, {}};
  for (const auto& params : groups) {
    if (base == Base::OrderK && !params.is_finite_even()) continue;
    const CharPoly p = char_poly(params, base);
    if (p.family == PolyFamily::Z3) {
      table.rows.push_back({cell(params.label()), cell(p.to_string()), cell_null("no dominant root"), cell_null("")});
      continue;
    }
    const AsymptoticEstimate est = solve_coefficients(p, build_recurrence(params, base));
    table.rows.push_back({cell(params.label()), cell(p.to_string()), cell_fixed(est.dominant_root, precision),
                          cell_fixed(est.leading_coeff, precision)});
  }
  json h = header("table");
  h["base"] = to_string(base);
  emit(c.output, out, h, table);
}

void cmd_roots(const Common& c, int precision, std::ostream& out) {
  const GroupParams params = c.params();
  const CharPoly p = char_poly(params, Base::Order2);
  const RootSet rs = all_roots(p);
  Table table{{"index", "re", "im", "modulus"}, {}};
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const Complex z = rs.roots[i];
    table.rows.push_back({cell(static_cast<long long>(i)), cell_fixed(z.real(), precision),
                          cell_fixed(z.imag(), precision), cell_fixed(std::abs(z), precision)});
  }
  json h = header("roots");
  h["k"] = params.label();
  h["polynomial"] = p.to_string();
  h["dominant_root"] = rs.dominant ? json(static_cast<double>(*rs.dominant)) : json(nullptr);
  emit(c.output, out, h, table);
}

void cmd_coeffs(const Common& c, int precision, std::ostream& out) {
  const GroupParams params = c.params();
  const Base base = c.parsed_base();
  const CharPoly p = char_poly(params, base);
  const AsymptoticEstimate est = solve_coefficients(p, build_recurrence(params, base));
  Table table{{"index", "root_re", "root_im", "coeff_re", "coeff_im"}, {}};
  for (std::size_t i = 0; i < est.roots.size(); ++i) {
    table.rows.push_back({cell(static_cast<long long>(i)), cell_fixed(est.roots[i].real(), precision),
                          cell_fixed(est.roots[i].imag(), precision), cell_fixed(est.all_coeffs[i].real(), precision),
                          cell_fixed(est.all_coeffs[i].imag(), precision)});
  }
  json h = header("coeffs");
  h["k"] = params.label();
  h["base"] = to_string(base);
  h["polynomial"] = p.to_string();
  h["window"] = est.window;
  h["condition_estimate"] = static_cast<double>(est.condition_estimate);
  emit(c.output, out, h, table);
}

void cmd_trace(const Common& c, const std::string& word_text, std::ostream& out) {
  const GroupParams params = c.params();
  const Word w = parse_word(word_text, params);
  const Mat2 m = evaluate(w);
  const TraceClass tc = classify(m);
  json doc = header("trace");
  doc["k"] = params.label();
  doc["word"] = w.to_string();
  doc["trace"] = m.trace();
  doc["abs_trace"] = tc.abs_trace;
  doc["class"] = to_string(tc.kind);
  if (tc.geo_length) doc["geo_length"] = *tc.geo_length;
  emit_json(c.output, out, doc);
}

void cmd_btype(const Common& c, std::ostream& out) {
  const GroupParams params = c.params();
  if (!params.is_finite_even()) throw Error(ErrorCode::InvalidBase, "B-type words need finite even k");
  require_t(c.t_max);
  Table table{{"t", "count", "bound", "holds"}, {}};
  bool all = true;
  for (const auto& row : btype_bound_check(params, c.t_max)) {
    table.rows.push_back({cell(row.t), cell(row.count), cell_fixed(row.bound, 6), cell(row.holds)});
    all = all && row.holds;
  }
  json h = header("btype");
  h["k"] = params.label();
  emit(c.output, out, h, table);
  if (!all) throw Error(ErrorCode::VerificationMismatch, "B-type bound violated");
}

int cmd_verify(const Common& c, bool k_given, std::optional<long long> perturb, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  if (k_given) opts.groups.push_back(c.params());
  opts.t_max = c.t_max;
  require_t(c.t_max);
  opts.hyperbolic_t_max = std::min(8, c.t_max);
  opts.census = c.census();
  if (perturb) opts.perturb = Perturbation{*perturb};
  const VerifyReport rep = run_verify(opts);
  emit_json(c.output, out, to_json(rep));
  if (const CheckResult* bad = rep.first_failure()) {
    err << fmt::format("VERIFICATION_MISMATCH: {} {} failed{}\n", bad->name, bad->group,
                       bad->first_bad_t ? fmt::format(" at t={}", *bad->first_bad_t) : "");
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  std::vector<GroupParams> groups = opts.groups;
  if (groups.empty()) {
    for (int k = 3; k <= 8; ++k) groups.push_back(GroupParams::finite(k));
  }

  for (const auto& params : groups) {
    BigInt words = 0;
    for (int t = 1; t <= opts.t_max; ++t) words += count_ab_words(params, t);
    if (words > opts.census.budget) {
      throw Error(ErrorCode::BudgetExceeded, fmt::format("k={} census to t={} needs {} words, budget {}",
                                                         params.label(), opts.t_max, to_decimal(words),
                                                         opts.census.budget));
    }
  }

  VerifyReport rep;
  for (const auto& params : groups) {
    std::vector<ClassTally> tallies;
    for (int t = 1; t <= opts.t_max; ++t) tallies.push_back(tally_classes(params, t, opts.census));

    for (Base base : bases_of(params)) {
      rep.checks.push_back(oracle_check(params, base, opts.t_max, opts.perturb));
      rep.checks.push_back(pairing_result(params, base, tallies));
    }
    if (params.is_finite_even()) rep.checks.push_back(btype_check(params, opts.t_max));
    rep.checks.push_back(hyperbolic_check(params, opts.hyperbolic_t_max, opts.census));
    if (params.is_infinite() || params.k() == 3) {
      rep.checks.push_back(closed_form_check(params, tallies, opts.perturb));
    }
    if (params.is_infinite() || params.k() != 3) {
      for (Base base : bases_of(params)) asymptotic_checks(params, base, opts.perturb, rep.checks);
    }
    if (params.is_finite_even()) rep.checks.push_back(combined_check(params, opts.perturb));
  }

  const RootOrderReport ro = root_order_check(8);
  CheckResult roots{"root-order", "m<=8", ro.ok(), std::nullopt,
                    fmt::format("min margin {:.3e}", static_cast<double>(ro.min_margin))};
  rep.checks.push_back(std::move(roots));
  return rep;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reciprocal geodesic counts on Hecke surfaces", "hecke"};
  app.require_subcommand(1);

  Common c;
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", c.k, "order of b: integer >= 3 or inf"); };
  auto add_base = [&](CLI::App* sub) {
    sub->add_option("--base", c.base, "cone point: 2 or k")->check(CLI::IsMember({"2", "k"}));
  };
  auto add_t = [&](CLI::App* sub, int def) {
    c.t_max = def;
    sub->add_option("--t,--t-max", c.t_max, "largest half-length t");
  };
  auto add_output = [&](CLI::App* sub, bool tabular) {
    if (tabular) sub->add_option("--format", c.output.format)->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", c.output.path, "write to a file instead of stdout");
  };
  auto add_census = [&](CLI::App* sub) {
    sub->add_option("--threads", c.threads, "census worker threads");
    sub->add_option("--budget", c.budget, "maximum number of words a census may enumerate");
  };

  int precision = 5;
  int k_min = 3, k_max = 13;
  bool with_inf = false;
  std::string word_text;
  std::optional<long long> perturb;
  CLI::Option* verify_k = nullptr;

  auto* count = app.add_subcommand("count", "normal-form counts by recurrence and/or census");
  add_k(count);
  add_base(count);
  count->add_option("--method", c.method)->check(CLI::IsMember({"recurrence", "census", "both"}));
  add_output(count, true);
  add_census(count);

  auto* seq = app.add_subcommand("seq", "exact recurrence sequence");
  add_k(seq);
  add_base(seq);
  add_output(seq, true);

  auto* table = app.add_subcommand("table", "polynomial, dominant root and coefficient per k");
  add_base(table);
  table->add_option("--k-min", k_min);
  table->add_option("--k-max", k_max);
  table->add_flag("--inf", with_inf, "append the k = inf row");
  table->add_option("--precision", precision);
  add_output(table, true);

  auto* roots = app.add_subcommand("roots", "all roots of the characteristic polynomial");
  add_k(roots);
  roots->add_option("--precision", precision);
  add_output(roots, true);

  auto* coeffs = app.add_subcommand("coeffs", "coefficients of the exact root expansion");
  add_k(coeffs);
  add_base(coeffs);
  coeffs->add_option("--precision", precision);
  add_output(coeffs, true);

  auto* trace = app.add_subcommand("trace", "matrix trace and type of a word");
  add_k(trace);
  trace->add_option("--word", word_text, "e.g. \"a b a b^-1\"")->required();
  add_output(trace, false);

  auto* btype = app.add_subcommand("btype", "B-type word counts against their bound");
  add_k(btype);
  add_output(btype, true);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify_k = verify->add_option("--k", c.k, "single group to check (default 3..8)");
  add_output(verify, false);
  add_census(verify);
  verify->add_option("--perturb-initial", perturb, "add this to the first initial value (mutation test)");

  // --t-max defaults differ per command, so register them last
  add_t(count, 10);
  add_t(seq, 20);
  add_t(btype, 16);
  add_t(verify, 10);
  c.t_max = -1;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "INVALID_CONFIG: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  auto t_default = [&](int def) {
    if (c.t_max == -1) c.t_max = def;
  };

  try {
    if (count->parsed()) {
      t_default(10);
      cmd_count(c, out);
    } else if (seq->parsed()) {
      t_default(20);
      cmd_seq(c, out);
    } else if (table->parsed()) {
      cmd_table(c, k_min, k_max, with_inf, precision, out);
    } else if (roots->parsed()) {
      cmd_roots(c, precision, out);
    } else if (coeffs->parsed()) {
      cmd_coeffs(c, precision, out);
    } else if (trace->parsed()) {
      cmd_trace(c, word_text, out);
    } else if (btype->parsed()) {
      t_default(16);
      cmd_btype(c, out);
    } else if (verify->parsed()) {
      t_default(10);
      return cmd_verify(c, verify_k->count() > 0, perturb, out, err);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "INVALID_CONFIG: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  return kExitOk;
}

}  // namespace hecke::cli
