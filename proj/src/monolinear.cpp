#include "agu/monolinear.hpp"

#include <algorithm>
#include <memory>

#include "agu/clone.hpp"

namespace agu {

namespace {

struct Translation {
  Term context = Term::var(1);  // hole is x1
  std::vector<FunctionId> fillers;
  std::vector<Element> first;
  std::vector<Element> second;
};

// Every elementary translation f(g1,…,x1,…,gm), fillers drawn from the
// ground functions in settling order.
std::vector<Translation> elementary_translations(const CloneGraph& ground,
                                                 std::uint64_t budget) {
  const AlgebraPair& pair = ground.pair();
  const Signature& sig = pair.signature();
  const auto& order = ground.order();
  std::vector<Translation> out;
  for (const auto& sym : sig.symbols()) {
    if (sym.arity == 0) continue;
    const std::size_t op_a = *pair.first().find_operation(sym.name);
    const std::size_t op_b = *pair.second().find_operation(sym.name);
    for (std::size_t hole = 0; hole < sym.arity; ++hole) {
      if (sym.arity > 1 && order.empty()) continue;
      std::vector<std::size_t> pick(sym.arity - 1, 0);
      while (true) {
        Translation t;
        std::vector<Term> args;
        for (std::size_t j = 0, p = 0; j < sym.arity; ++j) {
          if (j == hole) {
            args.push_back(Term::var(1));
          } else {
            const FunctionId f = order[pick[p++]];
            t.fillers.push_back(f);
            args.push_back(ground.witness(f));
          }
        }
        t.context = Term::app(sym.name, std::move(args));
        std::vector<Element> argv(sym.arity);
        for (std::size_t side = 0; side < 2; ++side) {
          const FiniteAlgebra& alg = side == 0 ? pair.first() : pair.second();
          auto& table = side == 0 ? t.first : t.second;
          for (Element x = 0; x < alg.size(); ++x) {
            for (std::size_t j = 0, p = 0; j < sym.arity; ++j) {
              if (j == hole) {
                argv[j] = x;
              } else {
                const FunctionId f = t.fillers[p++];
                argv[j] = side == 0 ? ground.first_table(f)[0] : ground.second_table(f)[0];
              }
            }
            table.push_back(alg.apply(side == 0 ? op_a : op_b, argv));
          }
        }
        if (out.size() >= budget) {
          throw BudgetExceeded("more than " + std::to_string(budget) + " elementary translations");
        }
        out.push_back(std::move(t));

        std::size_t j = pick.size();
        while (j-- > 0) {
          if (++pick[j] < order.size()) break;
          pick[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1)) break;
      }
    }
  }
  return out;
}

FiniteAlgebra derived_algebra(const FiniteAlgebra& alg, const std::vector<Translation>& letters,
                              bool first) {
  std::vector<Operation> ops;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    ops.push_back({"t" + std::to_string(i), 1, first ? letters[i].first : letters[i].second});
  }
  return FiniteAlgebra(alg.name(), alg.universe(), std::move(ops));
}

}  // namespace

GeneralizationReport monolinear_antiunify_sets(const ElementSet& c, const ElementSet& d,
                                               const AlgebraPair& pair, std::uint64_t budget) {
  if (c.empty() || d.empty()) throw InputError("element sets must be non-empty");
  auto ground = std::make_shared<const CloneGraph>(generate_clone(pair, 0, budget));
  const auto letters = elementary_translations(*ground, budget);

  AlgebraPair derived(derived_algebra(pair.first(), letters, true),
                      derived_algebra(pair.second(), letters, false));
  std::vector<ImagePair> ground_pairs;
  for (FunctionId f = 0; f < ground->size(); ++f) ground_pairs.push_back(ground->image(f));

  GeneralizationReport report = minimal_gens_for_sets(c, d, derived, ground_pairs, budget);

  // Rename the letters after the contexts they stand for.
  std::vector<std::string> names;
  for (const auto& l : letters) {
    report.letter_contexts.push_back(l.context);
    names.push_back(to_string(l.context));
  }
  const Dfa& lang = report.language;
  std::vector<Dfa::State> delta;
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (Dfa::State q = 0; q < lang.num_states(); ++q) {
    for (Letter l = 0; l < names.size(); ++l) delta.push_back(lang.next(q, l));
    finals.push_back(lang.is_final(q));
    labels.push_back(lang.label(q));
  }
  report.language = Dfa(std::move(names), lang.num_states(), std::move(delta), lang.start(),
                        std::move(finals), std::move(labels));

  // Ground members: functions realizing a minimal pair.
  TreeLanguage ground_lang{ground, std::vector<bool>(ground->size(), false)};
  report.ground_witnesses.assign(report.minimal_pairs.size(), std::nullopt);
  for (FunctionId f : ground->order()) {
    const auto& img = ground->image(f);
    auto it = std::lower_bound(report.minimal_pairs.begin(), report.minimal_pairs.end(), img);
    if (it == report.minimal_pairs.end() || *it != img) continue;
    ground_lang.accepting[f] = true;
    auto& w = report.ground_witnesses[static_cast<std::size_t>(it - report.minimal_pairs.begin())];
    if (!w) w = ground->witness(f);
  }
  report.ground_terms = ground_lang.cardinality();
  std::vector<ImagePair> final_images;
  for (FunctionId f = 0; f < ground->size(); ++f) {
    if (ground_lang.accepting[f]) {
      ++report.functions;
      final_images.push_back(ground->image(f));
    }
  }
  for (std::size_t i = 0; i < report.minimal_pairs.size(); ++i) {
    if (report.word_witnessed[i]) final_images.push_back(report.minimal_pairs[i]);
  }
  std::sort(final_images.begin(), final_images.end());
  report.classes = static_cast<std::size_t>(
      std::unique(final_images.begin(), final_images.end()) - final_images.begin());

  // Term count: each letter stands for as many contexts as its fillers
  // have ground terms.
  if (report.words.is_finite() && report.words.kind != Cardinality::Kind::empty) {
    std::vector<Cardinality> filler_terms(ground->size());
    for (FunctionId f = 0; f < ground->size(); ++f) {
      TreeLanguage single{ground, std::vector<bool>(ground->size(), false)};
      single.accepting[f] = true;
      filler_terms[f] = single.cardinality();
    }
    std::uint64_t total = 0;
    bool infinite = false;
    for (const Word& w : accepted_words(report.language, report.language.num_states(),
                                        static_cast<std::size_t>(report.words.count))) {
      std::uint64_t product = 1;
      for (Letter l : w) {
        for (FunctionId f : letters[l].fillers) {
          if (!filler_terms[f].is_finite()) infinite = true;
          product = saturating_mul(product, filler_terms[f].count);
        }
      }
      total = saturating_add(total, product);
    }
    report.words = infinite ? Cardinality::infinite() : Cardinality::of_count(total);
  }
  return report;
}

GeneralizationReport monolinear_antiunify(Element a, Element b, const AlgebraPair& pair,
                                          std::uint64_t budget) {
  if (a >= pair.first().size() || b >= pair.second().size()) {
    throw InputError("element not in the universe");
  }
  return monolinear_antiunify_sets(ElementSet::of(pair.first().size(), std::vector<Element>{a}),
                                   ElementSet::of(pair.second().size(), std::vector<Element>{b}),
                                   pair, budget);
}

}  // namespace agu
