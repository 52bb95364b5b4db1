// gforge: command-line front end.
//
// Exit codes: 0 success, 1 "none" / failed check / golden or verdict
// mismatch, 2 input or usage error.
#include "gforge/analysis.hpp"
#include "gforge/bridge.hpp"
#include "gforge/clausifier.hpp"
#include "gforge/frb_parser.hpp"
#include "gforge/fuzzy.hpp"
#include "gforge/ground.hpp"
#include "gforge/oracle.hpp"
#include "gforge/parser.hpp"
#include "gforge/simplifier.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace gforge;

// Thrown for bad user input; reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// An existing path is read as one formula per line (blank lines and '#'
// comments skipped); anything else is parsed as formula text.
std::vector<FormulaPtr> read_formulas(const std::string& input, bool allow_reserved) {
  const bool is_file = std::filesystem::is_regular_file(input);
  ParseOptions opts{allow_reserved || is_file};
  Signature sig;
  std::vector<FormulaPtr> out;
  if (!is_file) {
    out.push_back(parse_formula(input, sig, opts));
    return out;
  }
  std::istringstream in(read_file(input));
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_formula(line, sig, opts));
  }
  if (out.empty()) throw InputError(input + " contains no formula");
  return out;
}

std::string format_value(const TruthValue& v) {
  return v.den() == 1 ? std::to_string(v.num()) : std::to_string(v.num()) + "/" + std::to_string(v.den());
}

// Parses "X2=A,X1=B" against the base.
std::vector<Antecedent> parse_targets(const std::string& text, const RuleBase& b) {
  std::vector<Antecedent> out;
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("target '" + item + "' is not of the form VAR=SET");
    Antecedent a{trim(item.substr(0, eq)), trim(item.substr(eq + 1))};
    if (!b.has_var(a.var)) throw InputError("unknown variable " + a.var);
    if (!b.has_set(a.set)) throw InputError("unknown fuzzy set " + a.set);
    out.push_back(a);
  }
  if (out.empty()) throw InputError("no targets given");
  return out;
}

std::vector<Antecedent> file_targets(const FrbFile& f) {
  std::vector<Antecedent> out;
  for (const auto& [x, s] : f.targets) out.push_back({x, s});
  return out;
}

// "reach:X2=A", "reach:targets.txt" (lines of VAR=SET) or plain "reach"
// for the targets declared in the base file.
ProblemSpec parse_problem(const std::string& text, const FrbFile& f) {
  if (text == "stability") return ProblemSpec::stability();
  if (text.rfind("cycle:", 0) == 0) {
    try {
      return ProblemSpec::cycle(std::stoul(text.substr(6)));
    } catch (const std::logic_error&) {
      throw InputError("bad cycle length in '" + text + "'");
    }
  }
  if (text == "reach") {
    if (f.targets.empty()) throw InputError("the base declares no target");
    return ProblemSpec::reachability(file_targets(f));
  }
  if (text.rfind("reach:", 0) == 0) {
    std::string arg = text.substr(6);
    if (std::filesystem::is_regular_file(arg)) {
      std::string joined;
      std::istringstream in(read_file(arg));
      std::string line;
      while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') joined += line + ",";
      }
      arg = joined;
    }
    return ProblemSpec::reachability(parse_targets(arg, f.base));
  }
  throw InputError("unknown problem '" + text + "' (expected stability, cycle:K, reach or reach:TARGETS)");
}

FuzzyAssignment initial_assignment(const FrbFile& f, const std::string& init) {
  std::map<std::string, std::string> m = f.init;
  if (!init.empty())
    for (const auto& a : parse_targets(init, f.base)) m[a.var] = a.set;
  return make_assignment(f.base, m);
}

// Shared state of one run: the text produced and the verdict so far.
struct Run {
  std::ostringstream out;
  int code = 0;
};

void cmd_parse(Run& r, const std::string& input, bool reserved) {
  for (const auto& f : read_formulas(input, reserved)) r.out << format_formula(f) << "\n";
}

void cmd_simplify(Run& r, const std::string& input, bool reserved) {
  for (const auto& f : read_formulas(input, reserved)) r.out << format_formula(simplify(f)) << "\n";
}

void print_trace(Run& r, const TranslationResult& t) {
  for (const auto& s : t.trace) r.out << "# " << format_trace_step(s) << "\n";
}

void cmd_clausify(Run& r, const std::string& input, bool reserved, bool negative, std::size_t offset, bool trace,
                  const std::string& xs) {
  auto fs = read_formulas(input, reserved);
  std::optional<std::vector<std::string>> args;
  if (!xs.empty()) args = split(xs, ',');
  if (negative) {
    // The last formula is the goal, the others are premises.
    FormulaPtr goal = fs.back();
    fs.pop_back();
    RefutationInput ri = build_refutation_input(fs, goal, offset);
    if (trace) {
      for (const auto& m : ri.premises.members) print_trace(r, m);
      if (ri.goal) print_trace(r, *ri.goal);
    }
    r.out << format_theory(ri.clauses);
    return;
  }
  if (fs.size() == 1) {
    TranslationResult t = clausify_positive(fs[0], offset, args);
    if (trace) print_trace(r, t);
    r.out << format_theory(t.clauses);
    return;
  }
  if (args) throw InputError("--xs applies to a single formula");
  TheoryTranslation tt = clausify_theory(fs, offset);
  if (trace)
    for (const auto& m : tt.members) print_trace(r, m);
  r.out << format_theory(tt.clauses);
}

void print_rows(Run& r, const Derivation& d, std::optional<std::size_t> mark) {
  std::optional<std::size_t> kappa;
  if (mark) kappa = find_k_cycle(d, *mark);
  for (std::size_t k = 0; k < d.states.size(); ++k) {
    const bool star = kappa && (k == *kappa || k == *kappa + *mark);
    r.out << (star ? "*" : "") << k << ": " << format_state(d.states[k]) << "\n";
  }
}

void cmd_derive(Run& r, const std::string& base, const std::string& init, std::size_t steps, bool table,
                std::optional<std::size_t> mark) {
  FrbFile f = load_frb(base);
  Derivation d = derive(f.base, initial_assignment(f, init), steps);
  if (table) {
    print_rows(r, d, mark);
  } else {
    r.out << d.eta() << ": " << format_state(d.states.back()) << "\n";
  }
}

void cmd_analyze(Run& r, const std::string& base, const std::string& init, std::optional<std::size_t> steps,
                 bool stability, std::optional<std::size_t> cycle, std::optional<std::string> reach, bool autod) {
  FrbFile f = load_frb(base);
  FuzzyAssignment e0 = initial_assignment(f, init);
  const int modes = int(stability) + int(cycle.has_value()) + int(reach.has_value()) + int(autod);
  if (modes != 1) throw InputError("choose exactly one of --stability, --cycle, --reach, --auto");
  if (cycle && *cycle == 0) throw InputError("cycle length must be at least 1");
  EventualCycle ec = detect_eventual_cycle(f.base, e0);
  if (autod) {
    r.out << "prefix = " << ec.prefix << ", period = " << ec.period << "\n";
    return;
  }
  // Without --steps the derivation covers every state that ever occurs
  // plus the offset the question looks ahead.
  const std::size_t look = stability ? 1 : (cycle ? *cycle : 0);
  Derivation d = derive(f.base, e0, steps ? *steps : ec.prefix + ec.period + look);
  std::optional<std::size_t> kappa;
  if (stability) kappa = check_stability(d);
  if (cycle) kappa = find_k_cycle(d, *cycle);
  if (reach) {
    auto ts = reach->empty() ? file_targets(f) : parse_targets(*reach, f.base);
    if (ts.empty()) throw InputError("the base declares no target");
    std::vector<Target> targets;
    for (const auto& t : ts) targets.push_back({t.var, f.base.set(t.set).membership});
    kappa = check_reachability(f.base, d, targets);
  }
  if (kappa) {
    r.out << "kappa = " << *kappa << "\n";
  } else {
    r.out << "none\n";
    r.code = 1;
  }
}

void cmd_translate(Run& r, const std::string& base, const std::string& init, const std::string& what) {
  FrbFile f = load_frb(base);
  const bool all = what == "all";
  if (!all && what != "domain" && what != "universe" && what != "sets" && what != "assignment" && what != "rules")
    throw InputError("unknown --what '" + what + "'");
  auto section = [&](const char* name) {
    if (all) r.out << "# " << name << "\n";
  };
  if (all || what == "domain") {
    section("T_D");
    for (const auto& phi : domain_axioms(working_signature())) r.out << format_formula(phi) << "\n";
  }
  if (all || what == "universe") {
    section("S_U");
    r.out << format_theory(UniverseClauses(f.base.universe).positive());
  }
  if (all || what == "sets") {
    section("S_A");
    r.out << format_theory(fuzzy_set_clauses(f.base));
  }
  if (all || what == "assignment") {
    section("S_e0");
    r.out << format_theory(assignment_clauses(f.base, initial_assignment(f, init)));
  }
  if (all || what == "rules") {
    section("T_B");
    for (const auto& phi : base_theory(f.base)) r.out << format_formula(phi) << "\n";
  }
}

void cmd_reduce(Run& r, const std::string& base, const std::string& init, const std::string& problem,
                std::size_t horizon, std::size_t offset, bool sat) {
  FrbFile f = load_frb(base);
  Reduction red = reduce_to_unsat(f.base, initial_assignment(f, init), parse_problem(problem, f), offset, horizon);
  if (!sat) {
    r.out << format_theory(red.clauses);
    return;
  }
  GroundTheory g = instantiate_reduction(red);
  SatReport rep = solve(g);
  r.out << (rep.sat ? "SAT" : "UNSAT") << " (horizon " << horizon << ", " << red.domain.size() << " domain terms, "
        << g.atoms.size() << " ground atoms)\n";
}

void cmd_verify_lemma(Run& r, const std::string& base, const std::string& init, std::optional<std::size_t> eta,
                      std::optional<std::size_t> tmax, const std::string& perturb) {
  FrbFile f = load_frb(base);
  FuzzyAssignment e0 = initial_assignment(f, init);
  std::optional<Perturbation> p;
  if (!perturb.empty()) {
    // VAR:TIME:ELEMENT:VALUE
    auto parts = split(perturb, ':');
    if (parts.size() != 4) throw InputError("--perturb expects VAR:TIME:ELEMENT:VALUE");
    try {
      p = Perturbation{parts[0], std::stoul(parts[1]), std::stoul(parts[2]), TruthValue::parse(parts[3])};
    } catch (const std::logic_error& e) {
      throw InputError(std::string("--perturb: ") + e.what());
    }
  }
  const std::size_t bound = tmax ? *tmax : (eta ? *eta : 0);
  if (eta && *eta > bound) throw InputError("--eta exceeds --tmax");
  LemmaChecker lc(f.base, e0, bound, p);
  r.out << "premises: " << (lc.premises_hold() ? "hold" : "fail") << "\n";
  std::size_t lo = eta ? *eta : 0;
  std::size_t hi = eta ? *eta : bound;
  bool ok = lc.premises_hold();
  for (std::size_t k = lo; k <= hi; ++k) {
    const bool c = lc.consequence_holds(k);
    ok = ok && c;
    r.out << "eta = " << k << ": " << (c ? "holds" : "fails") << "\n";
  }
  if (!ok) r.code = 1;
}

void cmd_sat(Run& r, const std::string& file, const std::vector<std::string>& domain, const std::string& verdict,
             bool witness) {
  Signature sig;
  ClausalTheory s = parse_theory(read_file(file), sig);
  GroundTheory g;
  if (domain.empty()) {
    g = ground_theory(s);
  } else {
    std::vector<TermPtr> terms;
    // A bare identifier names a constant here, never a variable.
    for (const auto& text : domain) {
      TermPtr t = parse_term(trim(text), sig, {true});
      terms.push_back(t->is_var() ? app(t->name) : t);
    }
    g = instantiate(s, terms);
  }
  SatReport rep = solve(g);
  r.out << (rep.sat ? "SAT" : "UNSAT") << "\n";
  if (witness && rep.sat)
    for (const auto& [atom, v] : rep.witness) r.out << atom << " = " << format_value(v) << "\n";
  if (!verdict.empty()) {
    if (verdict != "sat" && verdict != "unsat") throw InputError("--verdict expects sat or unsat");
    if ((verdict == "sat") != rep.sat) r.code = 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goedel logic clausification, fuzzy derivations and their translation"};
  app.require_subcommand(1);

  std::string input, base, init, what, problem, file, verdict, xs, perturb, expect;
  std::vector<std::string> domain;
  bool reserved = false, negative = false, trace = false, table = false, stability = false, autod = false,
       sat = false, witness = false;
  std::size_t offset = 0, steps = 13, horizon = 0;
  std::optional<std::size_t> mark, cycle, eta, tmax, analyze_steps;
  std::optional<std::string> reach;

  auto with_expect = [&](CLI::App* c) {
    c->add_option("--expect", expect, "golden file; the output must match it byte for byte");
  };
  auto with_base = [&](CLI::App* c) {
    c->add_option("--base", base, ".frb rule base")->required();
    c->add_option("--init", init, "initial assignment overrides, VAR=SET,...");
  };

  auto* parse = app.add_subcommand("parse", "parse formulas and print them");
  parse->add_option("input", input, "formula text or .gf file")->required();
  parse->add_flag("--allow-reserved", reserved, "accept reserved symbols in formula text");
  with_expect(parse);

  auto* simp = app.add_subcommand("simplify", "print the normal form");
  simp->add_option("input", input, "formula text or .gf file")->required();
  simp->add_flag("--allow-reserved", reserved, "accept reserved symbols in formula text");
  with_expect(simp);

  auto* cl = app.add_subcommand("clausify", "translate to order clausal form");
  cl->add_option("input", input, "formula text or .gf file")->required();
  cl->add_flag("--allow-reserved", reserved, "accept reserved symbols in formula text");
  cl->add_flag("--negative", negative, "refutation input: the last formula is the goal");
  cl->add_option("--offset", offset, "first fresh predicate index n0");
  cl->add_flag("--trace", trace, "print rule applications as comments");
  cl->add_option("--xs", xs, "argument vector of the fresh atoms, comma separated");
  with_expect(cl);

  auto* der = app.add_subcommand("derive", "run a fuzzy derivation");
  with_base(der);
  der->add_option("--steps", steps, "horizon eta");
  der->add_flag("--table", table, "print every state");
  der->add_option("--mark", mark, "star the rows kappa and kappa+K of the least K-cycle");
  with_expect(der);

  auto* an = app.add_subcommand("analyze", "reachability, stability, k-cycles");
  with_base(an);
  an->add_option("--steps", analyze_steps, "horizon eta (default: long enough to expose every state)");
  an->add_flag("--stability", stability, "least kappa with e_kappa = e_kappa+1");
  an->add_option("--cycle", cycle, "least kappa with e_kappa = e_kappa+K");
  an->add_option("--reach", reach, "targets VAR=SET,... (default: the base's targets)")->expected(0, 1);
  an->add_flag("--auto", autod, "least prefix and period of the eventual cycle");
  with_expect(an);

  auto* tr = app.add_subcommand("translate", "emit the logical translation of a rule base");
  with_base(tr);
  tr->add_option("--what", what, "domain|universe|sets|assignment|rules|all")->required();
  with_expect(tr);

  auto* red = app.add_subcommand("reduce", "reduce a derivation problem to unsatisfiability");
  with_base(red);
  red->add_option("--problem", problem, "stability | cycle:K | reach | reach:TARGETS | reach:FILE")->required();
  red->add_option("--horizon", horizon, "time numerals 0..T in the finite instantiation")->required();
  red->add_option("--offset", offset, "n0");
  red->add_flag("--sat", sat, "instantiate and run the oracle instead of printing the theory");
  with_expect(red);

  auto* vl = app.add_subcommand("verify-lemma", "check the derivation lemma in the canonical model");
  with_base(vl);
  vl->add_option("--eta", eta, "single eta to check (default: all up to --tmax)");
  vl->add_option("--tmax", tmax, "time bound of the model (default: eta)");
  vl->add_option("--perturb", perturb, "negative control VAR:TIME:ELEMENT:VALUE");
  with_expect(vl);

  auto* st = app.add_subcommand("sat", "decide a clausal theory with the order-type oracle");
  st->add_option("file", file, ".oct file")->required();
  st->add_option("--domain", domain, "instantiation terms for theories with variables");
  st->add_option("--verdict", verdict, "expected verdict sat|unsat");
  st->add_flag("--witness", witness, "print the witness valuation");
  with_expect(st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Run r;
  try {
    if (*parse) cmd_parse(r, input, reserved);
    if (*simp) cmd_simplify(r, input, reserved);
    if (*cl) cmd_clausify(r, input, reserved, negative, offset, trace, xs);
    if (*der) cmd_derive(r, base, init, steps, table, mark);
    if (*an) cmd_analyze(r, base, init, analyze_steps, stability, cycle, reach, autod);
    if (*tr) cmd_translate(r, base, init, what);
    if (*red) cmd_reduce(r, base, init, problem, horizon, offset, sat);
    if (*vl) cmd_verify_lemma(r, base, init, eta, tmax, perturb);
    if (*st) cmd_sat(r, file, domain, verdict, witness);
  } catch (const ParseError& e) {
    std::cerr << "gforge: " << e.what() << "\n";
    return 2;
  } catch (const FrbError& e) {
    std::cerr << "gforge: " << base << ": " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "gforge: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gforge: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "gforge: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gforge: " << e.what() << "\n";
    return 2;
  }

  const std::string text = r.out.str();
  std::cout << text;
  if (!expect.empty()) {
    std::string golden;
    try {
      golden = read_file(expect);
    } catch (const InputError& e) {
      std::cerr << "gforge: " << e.what() << "\n";
      return 2;
    }
    if (golden != text) {
      std::cerr << "gforge: output differs from " << expect << "\n";
      return 1;
    }
  }
  return r.code;
}
