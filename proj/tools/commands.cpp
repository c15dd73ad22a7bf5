#include "commands.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "grossone/bounds.hpp"
#include "grossone/catalog.hpp"
#include "grossone/error.hpp"
#include "grossone/summation.hpp"
#include "grossone/syntax.hpp"
#include "grossone/verification.hpp"

namespace grossone::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kUsage = 2;
constexpr int kDomain = 1;

struct Outcome {
  explicit Outcome(std::string name = "") : command(std::move(name)) {}

  std::string command;
  json inputs = json::object();
  json result;
  json checks = json::array();
  std::string text;
  int exit_code = 0;
};

struct Settings {
  bool machine = false;
  bool unicode = false;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args, std::istream& in, bool prompt);

 private:
  std::string show(const Expr& e) const { return render(e, RenderOptions{settings_.unicode}); }
  std::string show(const GrossNumber& g) const { return show(Expr::atom(g)); }
  void emit(const Outcome& o);

  Outcome eval(const std::string& text);
  Outcome compare(const std::string& left, const std::string& right);
  Outcome subst(const std::string& text, long n);
  Outcome sum(const std::string& form, const std::string& q, const std::string& lo, const std::string& hi,
              const std::string& verify);
  Outcome catalog_list();
  Outcome catalog_count(const std::string& id, const std::string& m, std::optional<long> finite);
  Outcome catalog_check(const std::string& id, long n, const std::string& m);
  Outcome bounds(std::optional<long> primes, std::optional<long> finite);
  Outcome verify_all(long max_n);
  int repl(std::istream& in, bool prompt);

  std::ostream& out_;
  std::ostream& err_;
  Settings settings_;
  std::vector<std::string> globals_;
};

std::optional<Arity> parse_arity(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "G1" || text == "grossone" || text == "\xE2\x91\xA0") return Arity::grossone_token();
  std::size_t used = 0;
  long m = 0;
  try {
    m = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || used == 0) throw InvalidArgument("m must be an integer or G1, got '" + text + "'");
  return Arity::finite(m);
}

GrossNumber parse_bound(const std::string& text) {
  const Expr e = parse_expression(text);
  if (!e.is_atom()) throw MalformedSpec("summation bound '" + text + "' is not a gross-number");
  return e.value();
}

// "a..b" or a single n.
std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long n = std::stol(text);
      return {n, n};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("--verify expects n or a..b, got '" + text + "'");
  }
}

std::string verdict(bool ok) { return ok ? "OK" : "MISMATCH"; }

}  // namespace

void Runner::emit(const Outcome& o) {
  if (settings_.machine) {
    json doc;
    doc["command"] = o.command;
    doc["inputs"] = o.inputs;
    doc["result"] = o.result;
    doc["checks"] = o.checks;
    out_ << doc.dump() << "\n";
  } else {
    out_ << o.text;
  }
}

Outcome Runner::eval(const std::string& text) {
  const Expr e = parse_expression(text);
  Outcome o("eval");
  o.inputs["expr"] = text;
  o.result = show(e);
  o.text = show(e) + "\n";
  return o;
}

Outcome Runner::compare(const std::string& left, const std::string& right) {
  const Dominance d = dominance_compare(parse_expression(left), parse_expression(right));
  Outcome o("compare");
  o.inputs = {{"left", left}, {"right", right}};
  o.result = to_string(d);
  o.text = to_string(d) + "\n";
  return o;
}

Outcome Runner::subst(const std::string& text, long n) {
  const Rational v = substitute_expr(parse_expression(text), BigInt(n));
  Outcome o("subst");
  o.inputs = {{"expr", text}, {"n", n}};
  o.result = v.to_string();
  o.text = v.to_string() + "\n";
  return o;
}

Outcome Runner::sum(const std::string& form, const std::string& q, const std::string& lo, const std::string& hi,
                    const std::string& verify) {
  SumSpec spec;
  spec.form = form == "geom" ? SumForm::Geometric : SumForm::ArithmeticoGeometric;
  spec.ratio = parse_expression(q);
  spec.lower = parse_bound(lo.empty() ? (form == "geom" ? "0" : "1") : lo);
  spec.upper = parse_bound(hi);
  const Expr closed = closed_form(spec);
  Outcome o("sum");
  o.inputs = {{"form", form}, {"q", q}, {"lo", show(spec.lower)}, {"hi", show(spec.upper)}};
  o.result = show(closed);
  o.text = show(closed) + "\n";
  if (!verify.empty()) {
    const auto [a, b] = parse_range(verify);
    if (a < 1 || b < a) throw InvalidArgument("--verify range must satisfy 1 <= a <= b");
    o.inputs["verify"] = verify;
    for (long n = a; n <= b; ++n) {
      const Rational direct = direct_sum(spec, BigInt(n));
      const Rational formula = substitute_expr(closed, BigInt(n));
      const bool ok = direct == formula;
      o.checks.push_back({{"n", n}, {"direct", direct.to_string()}, {"formula", formula.to_string()}, {"ok", ok}});
      o.text += "n=" + std::to_string(n) + ": direct = " + direct.to_string() + ", formula = " + formula.to_string() +
                ", " + verdict(ok) + "\n";
      if (!ok) o.exit_code = kDomain;
    }
  }
  return o;
}

Outcome Runner::catalog_list() {
  Outcome o("catalog list");
  o.result = json::array();
  std::size_t id_width = 0;
  std::size_t count_width = 0;
  std::vector<std::string> counts;
  for (const auto& e : list_entries()) {
    counts.push_back(e.parametric ? (settings_.unicode ? "\xE2\x91\xA0^m" : e.count_text) : show(e.gross_count));
    id_width = std::max(id_width, e.id.size());
    count_width = std::max(count_width, counts.back().size());
  }
  const auto& entries = list_entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    o.result.push_back({{"id", e.id},
                        {"description", e.description},
                        {"cantor_label", to_string(e.cantor_label)},
                        {"gross_count", counts[i]},
                        {"oracle", e.oracle_range}});
    std::string line = e.id + std::string(id_width - e.id.size() + 2, ' ');
    line += to_string(e.cantor_label) + std::string(11 - to_string(e.cantor_label).size(), ' ');
    line += counts[i] + std::string(count_width - counts[i].size() + 2, ' ');
    line += e.description + " [oracle: " + e.oracle_range + "]\n";
    o.text += line;
  }
  return o;
}

Outcome Runner::catalog_count(const std::string& id, const std::string& m, std::optional<long> finite) {
  const auto arity = parse_arity(m);
  const Expr count = gross_count(id, arity);
  Outcome o("catalog count");
  o.inputs["id"] = id;
  if (!m.empty()) o.inputs["m"] = m;
  o.result = show(count);
  o.text = show(count) + "\n";
  if (finite) {
    o.inputs["finite"] = *finite;
    const BigInt counted = finite_count_oracle(id, *finite, arity);
    const Rational formula = substitute_expr(count, BigInt(*finite));
    const bool ok = formula == Rational(counted);
    o.checks.push_back(
        {{"n", *finite}, {"oracle", counted.get_str()}, {"formula", formula.to_string()}, {"ok", ok}});
    o.text += "n=" + std::to_string(*finite) + ": oracle = " + counted.get_str() + ", formula = " +
              formula.to_string() + ", " + verdict(ok) + "\n";
    if (!ok) o.exit_code = kDomain;
  }
  return o;
}

Outcome Runner::catalog_check(const std::string& id, long n, const std::string& m) {
  const auto arity = parse_arity(m);
  const BigInt counted = finite_count_oracle(id, n, arity);
  const Rational formula = substitute_expr(gross_count(id, arity), BigInt(n));
  const bool ok = formula == Rational(counted);
  Outcome o("catalog check");
  o.inputs = {{"id", id}, {"n", n}};
  if (!m.empty()) o.inputs["m"] = m;
  o.result = ok;
  o.checks.push_back({{"n", n}, {"oracle", counted.get_str()}, {"formula", formula.to_string()}, {"ok", ok}});
  o.text = id + " n=" + std::to_string(n) + ": oracle = " + counted.get_str() + ", formula = " + formula.to_string() +
           ", " + verdict(ok) + "\n";
  o.exit_code = ok ? 0 : kDomain;
  return o;
}

Outcome Runner::bounds(std::optional<long> primes, std::optional<long> finite) {
  const BoundsReport r = bounds_report(primes, finite);
  Outcome o("bounds");
  o.result["lower"] = show(r.lower);
  o.text = "lower: " + show(r.lower) + "\n";
  if (primes) {
    o.inputs["primes"] = *primes;
    std::string list;
    for (long p : r.primes) list += (list.empty() ? "" : ", ") + std::to_string(p);
    o.result["primes"] = r.primes;
    o.result["improved_lower"] = show(*r.improved);
    o.text += "primes: " + list + "\n";
    o.text += "improved lower: " + show(*r.improved) + "\n";
  }
  o.result["upper"] = show(r.upper);
  o.text += "upper: " + show(r.upper) + "\n";
  if (r.check) {
    const FiniteCheck& c = *r.check;
    o.inputs["finite"] = c.n;
    o.checks.push_back(
        {{"n", c.n}, {"direct", c.direct.get_str()}, {"formula", c.formula.to_string()}, {"ok", c.equal}});
    const std::string lhs = settings_.unicode ? "2n\xC2\xB7\xCE\xA3" : "2n*sum";
    o.text += "n=" + std::to_string(c.n) + ": " + lhs + " = ";
    o.text += c.equal ? "formula = " + c.direct.get_str() + ", OK\n"
                      : c.direct.get_str() + ", formula = " + c.formula.to_string() + ", MISMATCH\n";
    if (!c.equal) o.exit_code = kDomain;
  }
  return o;
}

Outcome Runner::verify_all(long max_n) {
  if (max_n < 1) throw InvalidArgument("--max-n must be >= 1");
  const auto checks = run_all_checks(max_n);
  Outcome o("verify-all");
  o.inputs["max_n"] = max_n;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.ok) ++failed;
    o.checks.push_back({{"suite", c.suite}, {"name", c.name}, {"detail", c.detail}, {"ok", c.ok}});
    o.text += "[" + c.suite + "] " + c.name + ": " + c.detail + ", " + (c.ok ? "OK" : "FAIL") + "\n";
  }
  o.result = {{"total", checks.size()}, {"failed", failed}};
  o.text += "verify-all: " + std::to_string(checks.size()) + " checks, " + std::to_string(failed) + " failed\n";
  o.exit_code = failed == 0 ? 0 : kDomain;
  return o;
}

int Runner::repl(std::istream& in, bool prompt) {
  static const std::vector<std::string> commands = {"eval", "compare", "subst", "sum", "catalog", "bounds",
                                                    "verify-all", "repl", "--help", "-h"};
  std::string line;
  for (;;) {
    if (prompt) out_ << "> " << std::flush;
    if (!std::getline(in, line)) break;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::string trimmed = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (trimmed == "quit" || trimmed == "exit") break;
    std::vector<std::string> words = split_line(trimmed);
    std::vector<std::string> args = globals_;
    if (std::find(commands.begin(), commands.end(), words.front()) == commands.end()) {
      args.push_back("eval");
      args.push_back(trimmed);
    } else if (words.front() == "repl") {
      err_ << "repl: already in interactive mode\n";
      continue;
    } else {
      args.insert(args.end(), words.begin(), words.end());
    }
    Runner(out_, err_).run(args, in, false);
  }
  return 0;
}

int Runner::run(const std::vector<std::string>& args, std::istream& in, bool prompt) {
  CLI::App app{"Exact calculator for grossone-based numbers", "grosscalc"};
  app.require_subcommand(1);
  app.add_flag("--machine", settings_.machine, "print a JSON document {command, inputs, result, checks}");
  app.add_flag("--unicode", settings_.unicode, "render grossone as the circled-one symbol");

  std::string expr, left, right, form, q, lo, hi, verify, id, m;
  long n = 0;
  long max_n = 50;
  std::optional<long> finite, primes;

  auto* eval_cmd = app.add_subcommand("eval", "simplify and print an expression");
  eval_cmd->add_option("expr", expr, "expression")->required();

  auto* compare_cmd = app.add_subcommand("compare", "print <, =, > or unknown");
  compare_cmd->add_option("left", left)->required();
  compare_cmd->add_option("right", right)->required();

  auto* subst_cmd = app.add_subcommand("subst", "replace G1 by a positive integer");
  subst_cmd->add_option("expr", expr)->required();
  subst_cmd->add_option("--n", n, "value of G1")->required();

  auto* sum_cmd = app.add_subcommand("sum", "closed form of a geometric or k*q^k sum");
  sum_cmd->add_option("--form", form)->required()->check(CLI::IsMember({"geom", "kqk"}));
  sum_cmd->add_option("--q", q, "ratio")->required();
  sum_cmd->add_option("--lo", lo, "lower bound (default 0 for geom, 1 for kqk)");
  sum_cmd->add_option("--hi", hi, "upper bound")->required();
  sum_cmd->add_option("--verify", verify, "check n or a..b by direct summation");

  auto* catalog_cmd = app.add_subcommand("catalog", "set-counting catalog");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list entries");
  auto* count_cmd = catalog_cmd->add_subcommand("count", "print an entry's count");
  count_cmd->add_option("id", id)->required();
  count_cmd->add_option("--m", m, "tuple length (integer or G1)");
  count_cmd->add_option("--finite", finite, "also run the finite oracle at n");
  auto* check_cmd = catalog_cmd->add_subcommand("check", "compare oracle and formula at n");
  check_cmd->add_option("id", id)->required();
  check_cmd->add_option("--n", n)->required();
  check_cmd->add_option("--m", m, "tuple length");

  auto* bounds_cmd = app.add_subcommand("bounds", "lower and upper estimates");
  bounds_cmd->add_option("--primes", primes, "improve the lower bound with the first k primes");
  bounds_cmd->add_option("--finite", finite, "check the upper bound at n by direct summation");

  auto* verify_cmd = app.add_subcommand("verify-all", "run every oracle suite");
  verify_cmd->add_option("--max-n", max_n, "largest n for the summation and witness sweeps");

  auto* repl_cmd = app.add_subcommand("repl", "interactive mode");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::ParseError& e) {
    err_ << "UsageError: " << e.what() << "\n";
    return kUsage;
  }
  if (settings_.machine) globals_.push_back("--machine");
  if (settings_.unicode) globals_.push_back("--unicode");

  try {
    Outcome o;
    if (*eval_cmd) o = eval(expr);
    else if (*compare_cmd) o = compare(left, right);
    else if (*subst_cmd) o = subst(expr, n);
    else if (*sum_cmd) o = sum(form, q, lo, hi, verify);
    else if (*list_cmd) o = catalog_list();
    else if (*count_cmd) o = catalog_count(id, m, finite);
    else if (*check_cmd) o = catalog_check(id, n, m);
    else if (*bounds_cmd) o = bounds(primes, finite);
    else if (*verify_cmd) o = verify_all(max_n);
    else if (*repl_cmd) return repl(in, prompt);
    emit(o);
    return o.exit_code;
  } catch (const LexError& e) {
    err_ << e.diagnostic() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err_ << e.diagnostic() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err_ << e.diagnostic() << "\n";
    return kDomain;
  }
}

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
                bool prompt) {
  return Runner(out, err).run(args, in, prompt);
}

CommandResult run_command(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_command(args, in, out, err, false);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> words;
  std::string word;
  bool in_word = false;
  char quote = 0;
  for (char c : line) {
    if (quote) {
      if (c == quote) quote = 0;
      else word += c;
    } else if (c == '"' || c == '\'') {
      quote = c;
      in_word = true;
    } else if (c == ' ' || c == '\t') {
      if (in_word) words.push_back(word);
      word.clear();
      in_word = false;
    } else {
      word += c;
      in_word = true;
    }
  }
  if (in_word) words.push_back(word);
  return words;
}

}  // namespace grossone::cli
