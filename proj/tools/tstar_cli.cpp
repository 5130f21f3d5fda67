// Command-line front end: evaluate star values and generating functions,
// run the verification suites, emit tables of the closed-form evaluations.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include <tstar/evaluations.hpp>
#include <tstar/finite.hpp>
#include <tstar/index.hpp>
#include <tstar/series.hpp>
#include <tstar/verify.hpp>

using namespace tstar;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  int precision = 50;
  long terms = 1000000;
  bool terms_given = false;  // shell expansions default lighter than sweeps
  long a_max = 40;
  double tolerance = 1e-7;
  std::string format = "text";
  std::string out;
  bool extended = false;

  long shell_terms() const { return terms_given ? terms : 20000; }
};

void write_out(const GlobalOpts& g, const std::string& payload) {
  if (g.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + g.out + "'");
  f << payload;
}

// exact decimal or rational literal -> canonical rational
Rat parse_exact_number(const std::string& tok) {
  if (tok.find('/') != std::string::npos) return parse_rational(tok);
  std::size_t dot = tok.find('.');
  if (dot == std::string::npos) return parse_rational(tok);
  std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
  long scale = static_cast<long>(tok.size() - dot - 1);
  Rat q = parse_rational(digits);
  return q / rat_pow(Rat(10), scale);
}

std::vector<Rat> parse_number_list(const std::string& text) {
  std::vector<Rat> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(parse_exact_number(cur));
      cur.clear();
    }
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  flush();
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const Rat& q : parse_number_list(text)) {
    if (q.get_den() != 1) throw std::invalid_argument("expected an integer list");
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

ordered_json truncated_json(const TruncatedValue& tv, const GlobalOpts& g, const std::string& engine) {
  ordered_json j;
  j["estimate"] = tv.estimate.str(g.precision);
  j["error_indicator"] = tv.error_indicator.str(4);
  j["terms_used"] = tv.terms_used;
  j["bound_kind"] = to_string(tv.bound_kind);
  j["engine"] = engine;
  j["K"] = g.terms;
  j["precision"] = g.precision;
  return j;
}

std::string truncated_text(const TruncatedValue& tv, const GlobalOpts& g, const std::string& engine) {
  std::string s;
  s += "value     " + tv.estimate.str(g.precision) + "\n";
  s += "error     " + tv.error_indicator.str(4) + " (" + to_string(tv.bound_kind) + ")\n";
  s += "terms     " + std::to_string(tv.terms_used) + "\n";
  s += "engine    " + engine + "  precision " + std::to_string(g.precision) + " digits\n";
  return s;
}

void emit_truncated(const TruncatedValue& tv, const GlobalOpts& g, const std::string& engine) {
  if (g.format == "json")
    write_out(g, truncated_json(tv, g, engine).dump(2) + "\n");
  else
    write_out(g, truncated_text(tv, g, engine));
}

void emit_exact(const Rat& value, const GlobalOpts& g, const std::string& engine) {
  if (g.format == "json") {
    ordered_json j;
    j["value"] = rat_str(value);
    j["engine"] = engine;
    write_out(g, j.dump(2) + "\n");
  } else {
    write_out(g, rat_str(value) + "\n");
  }
}

int run_eval(const GlobalOpts& g, const std::string& index_arg, const std::string& blocks_arg,
             const std::string& mode) {
  if (index_arg.empty() == blocks_arg.empty())
    throw std::invalid_argument("eval needs exactly one of --index or --blocks");
  if (!index_arg.empty()) {
    ParsedIndex parsed = parse_index(index_arg);
    if (std::holds_alternative<SignedIndex>(parsed)) {
      TruncatedValue tv =
          series::nested_t_sum(std::get<SignedIndex>(parsed), g.terms, g.precision);
      emit_truncated(tv, g, "series/nested-alternating");
    } else {
      TruncatedValue tv = series::t_star_direct(std::get<Index>(parsed), g.terms, g.precision);
      emit_truncated(tv, g, "series/star-direct");
    }
    return 0;
  }
  BlockForm b = parse_blocks(blocks_arg);
  if (mode == "series") {
    TruncatedValue tv = series::t_star_direct(expand_blocks(b), g.terms, g.precision);
    emit_truncated(tv, g, "series/star-direct");
  } else {
    TruncatedValue tv = series::t_star_closed_blocks(b, g.shell_terms(), g.precision);
    emit_truncated(tv, g, "series/block-closed");
  }
  return 0;
}

int run_gen(const GlobalOpts& g, long n, const std::string& c_arg, const std::string& z_arg,
            const std::string& mode, int restrict_u) {
  std::vector<int> c = c_arg.empty() ? std::vector<int>{} : parse_int_list(c_arg);
  std::vector<Rat> z = parse_number_list(z_arg);
  if (n > 0) {
    Rat value;
    if (restrict_u >= 0)
      value = finite::gn_restricted_eval(n, c, z, restrict_u);
    else if (mode == "series")
      value = finite::gn_series_eval(n, c, z, g.a_max);
    else
      value = finite::gn_closed_eval(n, c, z);
    emit_exact(value, g, "finite/generating");
    return 0;
  }
  const mpfr_prec_t bits = prec_bits(g.precision);
  std::vector<BigReal> zr;
  zr.reserve(z.size());
  for (const Rat& q : z) zr.push_back(BigReal::from(q, bits));
  TruncatedValue tv;
  std::string engine;
  if (restrict_u >= 0) {
    tv = series::restricted_g_eval(c, zr, restrict_u, g.shell_terms(), g.precision);
    engine = "series/generating-restricted";
  } else if (mode == "series") {
    tv = series::g_eval_series(c, zr, g.a_max, g.terms, std::min(g.precision, 8));
    engine = "series/generating-series";
  } else {
    tv = series::g_eval_closed(c, zr, g.shell_terms(), g.precision);
    engine = "series/generating-closed";
  }
  emit_truncated(tv, g, engine);
  return 0;
}

int run_verify(const GlobalOpts& g, const std::string& suite) {
  verify::VerifyConfig cfg;
  cfg.extended = g.extended;
  cfg.oracle_terms = g.extended ? 1000000 : 200000;
  std::vector<verify::CheckRecord> records = verify::run_suite(suite, cfg);
  std::string payload;
  if (g.format == "json")
    payload = verify::to_json(records);
  else if (g.format == "csv")
    payload = verify::to_csv(records);
  else
    payload = verify::to_text(records);
  write_out(g, payload);
  return verify::all_pass(records) ? 0 : 1;
}

int run_table(const GlobalOpts& g, const std::string& family, long max_a, long max_b, long max_c,
              long max_d) {
  evals::EvalConfig ecfg;
  ecfg.digits = 30;
  ecfg.terms = g.extended ? 1000000 : 200000;
  ecfg.oracle_cap = g.extended ? 16000000 : 400000;
  evals::Evaluator ev(ecfg);

  std::vector<std::pair<std::string, std::vector<long>>> rows;
  auto add = [&](const std::string& id, std::vector<long> params) {
    rows.emplace_back(id, std::move(params));
  };
  if (family == "thm41") {
    for (long a = 0; a <= max_a; ++a) add("thm41", {a});
  } else if (family == "thm42") {
    for (long a = 0; a <= max_a; ++a)
      for (long b = 0; b <= max_b; ++b) add("thm42", {a, b});
  } else if (family == "thm44") {
    for (long a = 1; a <= std::max<long>(1, max_a); ++a)
      for (long b = 0; b <= max_b; ++b) add("thm44", {a, b});
  } else if (family == "thm45") {
    for (long a = 0; a <= max_a; ++a)
      for (long b = 0; b <= max_b; ++b)
        for (long c = 1; c <= std::max<long>(1, max_c); ++c) add("thm45", {a, b, c});
  } else if (family == "thm46" || family == "thm47") {
    long a_lo = family == "thm47" ? 1 : 0;
    for (long a = a_lo; a <= std::max(a_lo, max_a); ++a)
      for (long b = 0; b <= max_b; ++b)
        for (long c = 0; c <= max_c; ++c) {
          add(family + "a", {a, b, c});
          add(family + "b", {a, b, c});
        }
  } else if (family == "thm48") {
    for (long d = 0; d <= max_d; ++d) add("thm48", {d});
  } else if (family == "thm49") {
    for (long d = 1; d <= std::max<long>(1, max_d); ++d)
      for (long a = 0; a <= max_a; ++a) add("thm49", {d, a});
  } else {
    throw std::invalid_argument("unknown table family '" + family + "'");
  }

  bool ok = true;
  ordered_json arr = ordered_json::array();
  std::ostringstream csv;
  std::ostringstream txt;
  csv << "id,inputs,closed,oracle,abs_error,bound,pass,K\n";
  for (const auto& [id, params] : rows) {
    evals::EvaluationReport rep = ev.cross_check(id, params, g.tolerance);
    ok = ok && rep.pass;
    std::string inputs;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) inputs += ' ';
      char name = "abc"[i];
      if ((id == "thm48" || id == "thm49") && i == 0) name = 'd';
      if (id == "thm49" && i == 1) name = 'a';
      inputs += std::string(1, name) + "=" + std::to_string(params[i]);
    }
    BigReal combined = rep.oracle.error_indicator;
    for (const TruncatedValue& line : rep.closed) combined = combined + line.error_indicator;
    ordered_json j;
    j["id"] = rep.formula_id;
    j["formula"] = "block star evaluation";
    j["inputs"] = inputs;
    j["lhs"] = rep.closed[0].estimate.str(20);
    j["rhs"] = rep.oracle.estimate.str(20);
    j["abs_error"] = rep.abs_disagreement.str(4);
    j["bound"] = combined.str(4);
    j["pass"] = rep.pass;
    j["engine"] = "evals";
    j["K"] = rep.oracle_terms;
    j["precision"] = 30;
    arr.push_back(j);
    csv << rep.formula_id << ",\"" << inputs << "\"," << rep.closed[0].estimate.str(20) << ','
        << rep.oracle.estimate.str(20) << ',' << rep.abs_disagreement.str(4) << ','
        << combined.str(4) << ',' << (rep.pass ? "true" : "false") << ',' << rep.oracle_terms
        << '\n';
    txt << (rep.pass ? "pass  " : "FAIL  ") << rep.formula_id << "  " << inputs << "  closed "
        << rep.closed[0].estimate.str(16) << "  |err| " << rep.abs_disagreement.str(4) << '\n';
  }
  if (g.format == "json")
    write_out(g, arr.dump(2) + "\n");
  else if (g.format == "csv")
    write_out(g, csv.str());
  else
    write_out(g, txt.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nested odd-denominator sums: evaluation and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--precision", g.precision, "working precision in decimal digits")
      ->check(CLI::Range(10, 200));
  auto* terms_opt =
      app.add_option("--terms", g.terms, "series truncation depth K")->check(CLI::PositiveNumber);
  app.add_option("--amax", g.a_max, "generating-series block cutoff")->check(CLI::NonNegativeNumber);
  app.add_option("--tolerance", g.tolerance, "comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "write output to a file");
  app.add_flag("--extended", g.extended, "unlock the deep oracle grids");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate one star or alternating value");
  std::string index_arg, blocks_arg, eval_mode = "closed";
  eval_cmd->add_option("--index", index_arg, "comma-separated entries, '~' marks sign -1");
  eval_cmd->add_option("--blocks", blocks_arg, "block form a_0:c_1:a_1:...:c_d:a_d");
  eval_cmd->add_option("--mode", eval_mode, "closed|series (block forms only)")
      ->check(CLI::IsMember({"closed", "series"}));

  auto* gen_cmd = app.add_subcommand("gen", "evaluate a generating function");
  long gen_n = 0;
  std::string c_arg, z_arg, gen_mode = "closed";
  int restrict_u = -1;
  gen_cmd->add_option("--n", gen_n, "finite upper bound (omit for the infinite form)");
  gen_cmd->add_option("--c", c_arg, "separator entries c_1,...,c_d");
  gen_cmd->add_option("--z", z_arg, "arguments z_0,...,z_d (rationals or decimals)")->required();
  gen_cmd->add_option("--mode", gen_mode, "closed|series")
      ->check(CLI::IsMember({"closed", "series"}));
  gen_cmd->add_option("--restrict-u", restrict_u, "restrict to a_u >= 1 at this block");

  auto* verify_cmd = app.add_subcommand("verify", "run an identity verification suite");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember(verify::suite_names()));

  auto* table_cmd = app.add_subcommand("table", "closed-form tables with oracle disagreements");
  std::string family;
  long max_a = 2, max_b = 2, max_c = 1, max_d = 2;
  table_cmd->add_option("--family", family, "formula family")
      ->required()
      ->check(CLI::IsMember(
          {"thm41", "thm42", "thm44", "thm45", "thm46", "thm47", "thm48", "thm49"}));
  table_cmd->add_option("--max-a", max_a, "upper bound for a");
  table_cmd->add_option("--max-b", max_b, "upper bound for b");
  table_cmd->add_option("--max-c", max_c, "upper bound for c");
  table_cmd->add_option("--max-d", max_d, "upper bound for d");

  CLI11_PARSE(app, argc, argv);
  g.terms_given = terms_opt->count() > 0;

  try {
    if (eval_cmd->parsed()) return run_eval(g, index_arg, blocks_arg, eval_mode);
    if (gen_cmd->parsed()) return run_gen(g, gen_n, c_arg, z_arg, gen_mode, restrict_u);
    if (verify_cmd->parsed()) return run_verify(g, suite);
    if (table_cmd->parsed()) return run_table(g, family, max_a, max_b, max_c, max_d);
  } catch (const ParseError& e) {
    std::cerr << "parse error at byte " << e.offset << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
