#include "agu/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "agu/algebra_io.hpp"
#include "agu/clone.hpp"
#include "agu/fragment.hpp"
#include "agu/monolinear.hpp"
#include "agu/setwise.hpp"
#include "agu/unary.hpp"

namespace agu {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> files;
  std::string left;
  std::string right;
  std::string element;
  std::string terms;
  std::string fragment;
  std::string dot_path;
  std::optional<std::size_t> k;
  bool monolinear = false;
  std::size_t max_size = 8;
  std::size_t witnesses = 0;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "text";
  std::uint64_t seed = 1;
};

// What a command produced, in every output form.
struct Output {
  std::string text;
  std::string machine;
  std::string dot;
};

AlgebraPair load_pair(const std::vector<std::string>& files) {
  if (files.empty() || files.size() > 2) throw InputError("expected one or two algebra files");
  FiniteAlgebra first = load_algebra(files[0]);
  if (files.size() == 1) return AlgebraPair::same(first);
  return AlgebraPair(std::move(first), load_algebra(files[1]));
}

// Splits at commas outside parentheses and braces.
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts(1);
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '{') ++depth;
    if (ch == ')' || ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      parts.emplace_back();
    } else {
      parts.back() += ch;
    }
  }
  return parts;
}

Element single_element(const std::string& text, const FiniteAlgebra& alg, const char* flag) {
  if (text.empty()) throw InputError(std::string("missing ") + flag);
  return alg.element(text);
}

bool use_clone(const Options& opt, const AlgebraPair& pair) {
  return opt.k.has_value() || !pair.signature().is_unary();
}

std::size_t clone_arity(const Options& opt) {
  const std::size_t k = opt.k.value_or(2);
  if (k == 0) throw InputError("k must be at least 1");
  return k;
}

FragmentBound parse_fragment(const std::string& text) {
  auto parts = split_top_level(text);
  if (parts.size() != 2) throw InputError("--fragment expects K,L");
  FragmentBound bound;
  try {
    bound.k = std::stoul(parts[0]);
    if (parts[1] != "inf" && parts[1] != "∞") bound.ell = std::stoul(parts[1]);
  } catch (const std::logic_error&) {
    throw InputError("--fragment expects K,L with L a number or 'inf'");
  }
  return bound;
}

Output summary_output(const Summary& s, const AlgebraPair& pair, std::string dot) {
  return {format_text(s, pair), format_machine(s, pair), std::move(dot)};
}

// antiunify and antiunify-set share everything but the element parsing.
Output antiunify(const Options& opt, bool sets) {
  const AlgebraPair pair = load_pair(opt.files);
  if (opt.left.empty() || opt.right.empty()) throw InputError("--left and --right are required");
  const ElementSet c = parse_element_set(opt.left, pair.first());
  const ElementSet d = parse_element_set(opt.right, pair.second());
  if (!sets && (c.size() != 1 || d.size() != 1)) {
    throw InputError("antiunify takes single elements; use antiunify-set for sets");
  }

  if (opt.monolinear) {
    auto r = monolinear_antiunify_sets(c, d, pair, opt.budget);
    return summary_output(summarize(r, opt.witnesses), pair, to_dot(r.language, "monolinear"));
  }
  if (!opt.fragment.empty()) {
    FragmentBound bound = parse_fragment(opt.fragment);
    Summary s = fragment_gens(c, d, pair, bound, opt.max_size, opt.budget, opt.witnesses);
    return summary_output(s, pair, "");
  }
  if (use_clone(opt, pair)) {
    auto graph =
        std::make_shared<const CloneGraph>(generate_clone(pair, clone_arity(opt), opt.budget));
    auto r = k_generalizations_for_sets(c, d, graph);
    return summary_output(summarize(r, opt.witnesses), pair, to_dot(r.language, "antiunify"));
  }
  auto r = minimal_gens_for_sets(c, d, pair, {}, opt.budget);
  return summary_output(summarize(r, opt.witnesses), pair, to_dot(r.language, "antiunify"));
}

Output check(const Options& opt) {
  Output o;
  for (const auto& file : opt.files) {
    FiniteAlgebra alg = load_algebra(file);
    o.text += file + ": ok (" + alg.name() + ", " + std::to_string(alg.size()) + " elements, " +
              std::to_string(alg.operations().size()) + " operations)\n";
    o.machine += json{{"record", "check"},
                      {"file", file},
                      {"name", alg.name()},
                      {"elements", alg.size()},
                      {"operations", alg.operations().size()}}
                     .dump() +
                 '\n';
  }
  return o;
}

Output gens(const Options& opt) {
  if (opt.files.size() != 1) throw InputError("gens takes one algebra file");
  const AlgebraPair pair = load_pair(opt.files);
  const FiniteAlgebra& alg = pair.first();
  const ElementSet c = parse_element_set(opt.element, alg);
  Output o;
  std::ostringstream text;
  json rec = {{"record", "up_set"}, {"element", opt.element}};
  if (use_clone(opt, pair)) {
    const std::size_t k = clone_arity(opt);
    auto lang = std::get<TreeLanguage>(up_set_of_set(c, alg, CloneEngine{k}, opt.budget));
    const Cardinality card = lang.cardinality();
    text << "engine: clone k=" << k << '\n'
         << "language: " << card.to_string() << "; " << (lang.is_universal() ? "trivial" : "nontrivial")
         << "; " << lang.accepting_count() << " accepting state(s) of " << lang.graph->size() << '\n';
    for (const auto& t : accepted_terms(lang, 12, opt.witnesses)) text << "  " << to_string(t) << '\n';
    rec.update({{"engine", "clone"}, {"cardinality", card.to_string()}, {"states", lang.graph->size()}});
    o.dot = to_dot(lang, "gens");
  } else {
    Dfa lang = std::get<Dfa>(up_set_of_set(c, alg, UnaryEngine{}, opt.budget));
    const Cardinality card = cardinality(lang);
    const Dfa min = minimize(lang);
    text << "engine: unary\n"
         << "language: " << card.to_string() << "; " << (is_universal(lang) ? "trivial" : "nontrivial")
         << "; regular, " << min.num_states() << " states\n";
    for (const auto& w : accepted_words(lang, 64, opt.witnesses)) {
      text << "  " << to_string(word_to_term(w, lang.alphabet())) << '\n';
    }
    rec.update({{"engine", "unary"}, {"cardinality", card.to_string()}, {"states", min.num_states()}});
    o.dot = to_dot(lang, "gens");
  }
  o.text = text.str();
  o.machine = rec.dump() + '\n';
  return o;
}

Output type(const Options& opt) {
  const AlgebraPair pair = load_pair(opt.files);
  if (use_clone(opt, pair)) {
    const std::size_t k = clone_arity(opt);
    TypeReport r = classify_type_clone(pair, k, opt.budget);
    return {format_text(r, pair) + "note: generalizations range over terms in x1..x" +
                std::to_string(k) + '\n',
            format_machine(r, pair), ""};
  }
  TypeReport r = classify_type(pair, opt.budget);
  return {format_text(r, pair), format_machine(r, pair), ""};
}

Output characteristic(const Options& opt) {
  if (opt.files.size() != 1) throw InputError("characteristic takes one algebra file");
  const AlgebraPair pair = load_pair(opt.files);
  const Element a = single_element(opt.element, pair.first(), "--element");
  const ElementSet c = ElementSet::of(pair.first().size(), std::vector<Element>{a});
  if (use_clone(opt, pair)) {
    auto r = characteristic_gens(a, pair.first(), clone_arity(opt), opt.budget);
    return summary_output(summarize(r, opt.witnesses), pair, to_dot(r.language, "characteristic"));
  }
  auto r = minimal_gens_for_sets(c, c, pair, {}, opt.budget);
  return summary_output(summarize(r, opt.witnesses), pair, to_dot(r.language, "characteristic"));
}

Output check_charset(const Options& opt) {
  if (opt.files.size() != 1) throw InputError("check-charset takes one algebra file");
  const AlgebraPair pair = load_pair(opt.files);
  const Element a = single_element(opt.element, pair.first(), "--element");
  if (opt.terms.empty()) throw InputError("missing --terms");
  std::vector<Term> terms;
  for (const auto& t : split_top_level(opt.terms)) terms.push_back(parse_term(t, pair.signature()));
  const std::size_t k = clone_arity(opt);
  const bool ok = is_characteristic_set(terms, a, pair.first(), k, opt.budget);
  Output o;
  o.text = std::string("characteristic set for ") + opt.element + ": " + (ok ? "yes" : "no") +
           "\nnote: generalizations range over terms in x1..x" + std::to_string(k) + '\n';
  o.machine = json{{"record", "charset"}, {"element", opt.element}, {"characteristic", ok}}.dump() + '\n';
  return o;
}

// ---------------------------------------------------------------------------
// selftest: randomized consistency checks on small algebras
// ---------------------------------------------------------------------------

FiniteAlgebra random_unary(std::mt19937_64& rng, std::size_t n, std::size_t symbols,
                           const std::string& name) {
  std::vector<std::string> universe;
  for (std::size_t i = 0; i < n; ++i) universe.push_back(std::string(1, static_cast<char>('a' + i)));
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<Operation> ops;
  for (std::size_t s = 0; s < symbols; ++s) {
    Operation op{std::string(1, static_cast<char>('f' + s)), 1, {}};
    for (std::size_t i = 0; i < n; ++i) op.table.push_back(pick(rng));
    ops.push_back(std::move(op));
  }
  return FiniteAlgebra(name, std::move(universe), std::move(ops));
}

ElementSet random_subset(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> mask(1, (1U << n) - 1);
  const std::uint32_t m = mask(rng);
  ElementSet s(n);
  for (Element e = 0; e < n; ++e) {
    if ((m >> e) & 1U) s.insert(e);
  }
  return s;
}

Output selftest(const Options& opt) {
  constexpr std::size_t kRounds = 25;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  std::uniform_int_distribution<std::size_t> symbols(1, 2);
  std::size_t failures = 0;
  std::ostringstream text;
  json records = json::array();
  auto report = [&](const std::string& name, std::size_t failed) {
    failures += failed;
    text << name << ": " << (kRounds - failed) << "/" << kRounds << " passed\n";
    records.push_back({{"record", "selftest"}, {"check", name}, {"failed", failed}});
  };

  std::size_t failed = 0;
  for (std::size_t round = 0; round < kRounds; ++round) {
    const std::size_t syms = symbols(rng);
    AlgebraPair pair(random_unary(rng, size(rng), syms, "A"), random_unary(rng, size(rng), syms, "B"));
    const ElementSet c = random_subset(rng, pair.first().size());
    const ElementSet d = random_subset(rng, pair.second().size());
    Dfa direct = common_gens_dfa_for_sets(c, d, pair, opt.budget);
    std::optional<Dfa> product;
    for (Element a : c.elements()) {
      for (Element b : d.elements()) {
        Dfa one = common_gens_dfa(a, b, pair, opt.budget);
        product = product ? trim(intersect(*product, one)) : one;
      }
    }
    if (!equivalent(direct, *product)) ++failed;
  }
  report("set-wise intersection", failed);

  failed = 0;
  for (std::size_t round = 0; round < kRounds; ++round) {
    FiniteAlgebra alg = random_unary(rng, size(rng), symbols(rng), "A");
    std::vector<Element> perm(alg.size());
    for (Element e = 0; e < perm.size(); ++e) perm[e] = e;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Operation> ops = alg.operations();
    for (auto& op : ops) {
      std::vector<Element> table(op.table.size());
      for (Element e = 0; e < alg.size(); ++e) table[perm[e]] = perm[op.table[e]];
      op.table = std::move(table);
    }
    FiniteAlgebra image(alg.name(), alg.universe(), std::move(ops));
    const AlgebraPair left = AlgebraPair::same(alg);
    const AlgebraPair right = AlgebraPair::same(image);
    bool ok = true;
    for (Element a = 0; a < alg.size(); ++a) {
      for (Element b = 0; b < alg.size(); ++b) {
        auto x = minimal_gens(a, b, left, opt.budget);
        auto y = minimal_gens(perm[a], perm[b], right, opt.budget);
        ok = ok && equivalent(x.language, y.language);
      }
    }
    if (!ok) ++failed;
  }
  report("isomorphism invariance", failed);

  failed = 0;
  for (std::size_t round = 0; round < kRounds; ++round) {
    std::uniform_int_distribution<Element> bit(0, 1);
    Operation op{"g", 2, {}};
    for (int i = 0; i < 4; ++i) op.table.push_back(bit(rng));
    Operation constant{"c", 0, {bit(rng)}};
    FiniteAlgebra alg("A", {"0", "1"}, {op, constant});
    const std::size_t k = 1 + round % 2;
    CloneGraph g = generate_clone(AlgebraPair::same(alg), k, opt.budget);
    bool ok = true;
    for (FunctionId f = 0; f < g.size(); ++f) {
      const auto table = g.table_of(g.witness(f));
      const auto first = g.first_table(f);
      ok = ok && std::equal(first.begin(), first.end(), table.begin());
    }
    if (!ok) ++failed;
  }
  report("clone witness validity", failed);

  Output o;
  text << (failures == 0 ? "selftest: ok\n" : "selftest: FAILED\n");
  o.text = text.str();
  for (const auto& r : records) o.machine += r.dump() + '\n';
  if (failures != 0) throw Error("selftest found " + std::to_string(failures) + " failure(s)\n" + o.text);
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Anti-unification in finite algebras", "agu"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget", opt.budget, "Cap on enumerated functions, maps or states")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "machine", "dot"}));
  app.add_option("--seed", opt.seed, "Random seed for selftest");

  auto files = [&](CLI::App* sub, bool pair) {
    sub->add_option("files", opt.files, pair ? "Algebra file(s): A [B]" : "Algebra file")
        ->required()
        ->expected(1, pair ? 2 : 1);
  };
  auto engine_flags = [&](CLI::App* sub) {
    sub->add_option("-k", opt.k, "Use the clone engine over x1..xK");
    sub->add_option("--dot", opt.dot_path, "Write the recognizer as Graphviz DOT");
    sub->add_option("--witnesses", opt.witnesses, "List up to N shortest members");
  };

  auto* check_cmd = app.add_subcommand("check", "Validate algebra files");
  check_cmd->add_option("files", opt.files, "Algebra files")->required();

  auto* gens_cmd = app.add_subcommand("gens", "Generalizations of one element");
  files(gens_cmd, false);
  gens_cmd->add_option("--element", opt.element)->required();
  engine_flags(gens_cmd);

  auto* au_cmd = app.add_subcommand("antiunify", "Minimally general generalizations of a and b");
  auto* set_cmd = app.add_subcommand("antiunify-set", "Set-wise anti-unification");
  for (auto* sub : {au_cmd, set_cmd}) {
    files(sub, true);
    sub->add_option("--left", opt.left)->required();
    sub->add_option("--right", opt.right)->required();
    engine_flags(sub);
    sub->add_flag("--monolinear", opt.monolinear, "Restrict to monolinear and ground terms");
    sub->add_option("--fragment", opt.fragment, "Restrict to the (K,L) fragment");
    sub->add_option("--max-size", opt.max_size, "Term size bound for fragment searches");
  }

  auto* type_cmd = app.add_subcommand("type", "Generalization type of an algebra pair");
  files(type_cmd, true);
  type_cmd->add_option("-k", opt.k, "Use the clone engine over x1..xK");

  auto* char_cmd = app.add_subcommand("characteristic", "Characteristic generalizations");
  files(char_cmd, false);
  char_cmd->add_option("--element", opt.element)->required();
  engine_flags(char_cmd);

  auto* charset_cmd = app.add_subcommand("check-charset", "Check a characteristic set");
  files(charset_cmd, false);
  charset_cmd->add_option("--element", opt.element)->required();
  charset_cmd->add_option("--terms", opt.terms)->required();
  charset_cmd->add_option("-k", opt.k, "Arity of the term functions (default 2)");

  auto* self_cmd = app.add_subcommand("selftest", "Randomized internal consistency checks");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(),
                                   [&](const CLI::App* s) { return s->get_name() == args.front(); });
    if (!known) {
      err << "agu: unknown subcommand '" << args.front() << "'\n" << app.help();
      return 1;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return 1;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    Output o;
    std::string command;
    if (check_cmd->parsed()) {
      command = "check";
      o = check(opt);
    } else if (gens_cmd->parsed()) {
      command = "gens";
      o = gens(opt);
    } else if (au_cmd->parsed()) {
      command = "antiunify";
      o = antiunify(opt, false);
    } else if (set_cmd->parsed()) {
      command = "antiunify-set";
      o = antiunify(opt, true);
    } else if (type_cmd->parsed()) {
      command = "type";
      o = type(opt);
    } else if (char_cmd->parsed()) {
      command = "characteristic";
      o = characteristic(opt);
    } else if (charset_cmd->parsed()) {
      command = "check-charset";
      o = check_charset(opt);
    } else if (self_cmd->parsed()) {
      command = "selftest";
      o = selftest(opt);
    }

    if (!opt.dot_path.empty()) {
      if (o.dot.empty()) throw InputError("no recognizer to export for this query");
      std::ofstream file(opt.dot_path);
      if (!file) throw InputError("cannot write '" + opt.dot_path + "'");
      file << o.dot;
    }
    if (opt.format == "dot") {
      if (o.dot.empty()) throw InputError("no recognizer to export for this query");
      out << o.dot;
    } else if (opt.format == "machine") {
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
              .count();
      json query = {{"record", "query"}, {"command", command}, {"files", opt.files}};
      if (!opt.left.empty()) query["left"] = opt.left;
      if (!opt.right.empty()) query["right"] = opt.right;
      if (!opt.element.empty()) query["element"] = opt.element;
      if (opt.k) query["k"] = *opt.k;
      if (opt.monolinear) query["monolinear"] = true;
      if (!opt.fragment.empty()) query["fragment"] = opt.fragment;
      out << json{{"schema", "agu/1"}}.dump() << '\n'
          << query.dump() << '\n'
          << o.machine << json{{"record", "timing"}, {"timing_ms", ms}}.dump() << '\n';
    } else {
      out << o.text;
    }
    return 0;
  } catch (const BudgetExceeded& e) {
    err << "agu: budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "agu: " << e.what() << '\n';
    return 1;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace agu
