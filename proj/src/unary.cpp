#include "agu/unary.hpp"

#include <algorithm>
#include <map>

namespace agu {

TransitionMonoid::TransitionMonoid(std::vector<std::string> alphabet, std::size_t first_size,
                                   std::size_t second_size,
                                   std::vector<TransitionElement> elements,
                                   std::vector<std::uint32_t> next)
    : alphabet_(std::move(alphabet)), elements_(std::move(elements)), next_(std::move(next)) {
  images_.reserve(elements_.size());
  for (const auto& e : elements_) {
    images_.push_back({ElementSet::of(first_size, e.first), ElementSet::of(second_size, e.second)});
  }
}

Dfa TransitionMonoid::to_dfa(const std::vector<bool>& finals,
                             const std::vector<std::string>& labels) const {
  std::vector<Dfa::State> delta(next_.begin(), next_.end());
  return Dfa(alphabet_, elements_.size(), std::move(delta), 0, finals, labels);
}

std::vector<std::string> unary_alphabet(const Signature& sig) {
  std::vector<std::string> out;
  for (const auto& s : sig.symbols()) {
    if (s.arity != 1) {
      throw InputError("the unary engine needs a signature of unary symbols only; '" + s.name +
                       "' has arity " + std::to_string(s.arity));
    }
    out.push_back(s.name);
  }
  return out;
}

TransitionMonoid transition_monoid(const AlgebraPair& pair, std::uint64_t budget) {
  auto alphabet = unary_alphabet(pair.signature());
  const FiniteAlgebra& a = pair.first();
  const FiniteAlgebra& b = pair.second();
  std::vector<const Operation*> ops_a, ops_b;
  for (const auto& name : alphabet) {
    ops_a.push_back(&a.operations()[*a.find_operation(name)]);
    ops_b.push_back(&b.operations()[*b.find_operation(name)]);
  }

  std::vector<TransitionElement> elements;
  std::map<std::vector<Element>, std::uint32_t> index;
  auto key_of = [](const TransitionElement& e) {
    std::vector<Element> key = e.first;
    key.insert(key.end(), e.second.begin(), e.second.end());
    return key;
  };

  TransitionElement identity;
  for (Element i = 0; i < a.size(); ++i) identity.first.push_back(i);
  for (Element i = 0; i < b.size(); ++i) identity.second.push_back(i);
  index.emplace(key_of(identity), 0);
  elements.push_back(std::move(identity));

  std::vector<std::uint32_t> next;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (Letter l = 0; l < alphabet.size(); ++l) {
      TransitionElement e;
      e.first.reserve(a.size());
      e.second.reserve(b.size());
      for (Element x : elements[i].first) e.first.push_back(ops_a[l]->table[x]);
      for (Element x : elements[i].second) e.second.push_back(ops_b[l]->table[x]);
      auto [it, inserted] = index.try_emplace(key_of(e), static_cast<std::uint32_t>(elements.size()));
      if (inserted) {
        if (elements.size() >= budget) {
          throw BudgetExceeded("transition monoid exceeds the budget of " +
                               std::to_string(budget) + " elements");
        }
        e.witness = elements[i].witness;
        e.witness.push_back(l);
        elements.push_back(std::move(e));
      }
      next.push_back(it->second);
    }
  }
  return TransitionMonoid(std::move(alphabet), a.size(), b.size(), std::move(elements),
                          std::move(next));
}

namespace {

std::string set_label(const FiniteAlgebra& alg, const ElementSet& s) { return alg.format(s); }

}  // namespace

Dfa up_set_dfa(Element a, const FiniteAlgebra& alg, std::uint64_t budget) {
  if (a >= alg.size()) throw InputError("element not in the universe");
  auto monoid = transition_monoid(AlgebraPair::same(alg), budget);
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < monoid.size(); ++i) {
    finals.push_back(monoid.image(i).first.contains(a));
    labels.push_back(set_label(alg, monoid.image(i).first));
  }
  return trim(monoid.to_dfa(finals, labels));
}

Dfa common_gens_dfa(Element a, Element b, const AlgebraPair& pair, std::uint64_t budget) {
  return trim(intersect(up_set_dfa(a, pair.first(), budget), up_set_dfa(b, pair.second(), budget)));
}

Dfa common_gens_dfa_for_sets(const ElementSet& c, const ElementSet& d, const AlgebraPair& pair,
                             std::uint64_t budget) {
  if (c.empty() || d.empty()) throw InputError("element sets must be non-empty");
  auto monoid = transition_monoid(pair, budget);
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < monoid.size(); ++i) {
    const auto& img = monoid.image(i);
    finals.push_back(c.is_subset_of(img.first) && d.is_subset_of(img.second));
    labels.push_back(format_pair(img, pair));
  }
  return trim(monoid.to_dfa(finals, labels));
}

namespace {

GeneralizationReport minimal_gens_in(const TransitionMonoid& monoid, const ElementSet& c,
                                     const ElementSet& d, const AlgebraPair& pair,
                                     const std::vector<ImagePair>& extra_pairs) {
  if (c.empty() || d.empty()) throw InputError("element sets must be non-empty");
  if (c.universe_size() != pair.first().size() || d.universe_size() != pair.second().size()) {
    throw InputError("element set does not belong to the algebra");
  }
  auto generalizes = [&](const ImagePair& p) {
    return c.is_subset_of(p.first) && d.is_subset_of(p.second);
  };

  std::vector<ImagePair> candidates;
  for (std::size_t i = 0; i < monoid.size(); ++i) {
    if (generalizes(monoid.image(i))) candidates.push_back(monoid.image(i));
  }
  for (const auto& p : extra_pairs) {
    if (generalizes(p)) candidates.push_back(p);
  }

  GeneralizationReport report;
  report.minimal_pairs = minimal_pairs(std::move(candidates));
  report.witnesses.assign(report.minimal_pairs.size(), Word{});
  report.word_witnessed.assign(report.minimal_pairs.size(), false);

  std::vector<bool> finals(monoid.size(), false);
  std::vector<std::string> labels;
  std::vector<ImagePair> final_images;
  for (std::size_t i = 0; i < monoid.size(); ++i) {
    const auto& img = monoid.image(i);
    labels.push_back(format_pair(img, pair));
    auto it = std::lower_bound(report.minimal_pairs.begin(), report.minimal_pairs.end(), img);
    if (it == report.minimal_pairs.end() || *it != img) continue;
    finals[i] = true;
    ++report.functions;
    final_images.push_back(img);
    const auto k = static_cast<std::size_t>(it - report.minimal_pairs.begin());
    // Elements come in shortlex order of their witnesses.
    if (!report.word_witnessed[k]) {
      report.word_witnessed[k] = true;
      report.witnesses[k] = monoid.element(i).witness;
    }
  }
  std::sort(final_images.begin(), final_images.end());
  report.classes = static_cast<std::size_t>(
      std::unique(final_images.begin(), final_images.end()) - final_images.begin());
  report.language = trim(monoid.to_dfa(finals, labels));
  report.words = cardinality(report.language);
  report.trivial = is_universal(report.language);
  return report;
}

ElementSet singleton(std::size_t n, Element e) {
  if (e >= n) throw InputError("element not in the universe");
  return ElementSet::of(n, std::vector<Element>{e});
}

}  // namespace

GeneralizationReport minimal_gens_for_sets(const ElementSet& c, const ElementSet& d,
                                           const AlgebraPair& pair,
                                           const std::vector<ImagePair>& extra_pairs,
                                           std::uint64_t budget) {
  return minimal_gens_in(transition_monoid(pair, budget), c, d, pair, extra_pairs);
}

GeneralizationReport minimal_gens(Element a, Element b, const AlgebraPair& pair,
                                  std::uint64_t budget) {
  return minimal_gens_for_sets(singleton(pair.first().size(), a),
                               singleton(pair.second().size(), b), pair, {}, budget);
}

Term word_to_term(const Word& w, const std::vector<std::string>& alphabet) {
  Term t = Term::var(1);
  for (Letter l : w) t = Term::app(alphabet.at(l), {std::move(t)});
  return t;
}

Term render_word(const Word& w, const GeneralizationReport& report) {
  if (report.letter_contexts.empty()) return word_to_term(w, report.language.alphabet());
  Term t = Term::var(1);
  for (Letter l : w) t = apply_substitution(report.letter_contexts.at(l), {{1, t}});
  return t;
}

TypeReport classify_type(const AlgebraPair& pair, std::uint64_t budget) {
  // One monoid serves every element pair.
  auto monoid = transition_monoid(pair, budget);
  TypeReport report;
  for (Element a = 0; a < pair.first().size(); ++a) {
    for (Element b = 0; b < pair.second().size(); ++b) {
      auto r = minimal_gens_in(monoid, singleton(pair.first().size(), a),
                               singleton(pair.second().size(), b), pair, {});
      TypeReport::Entry e;
      e.a = a;
      e.b = b;
      e.terms = r.words;
      e.classes = r.classes;
      e.trivial = r.trivial;
      report.entries.push_back(e);
    }
  }
  finish_type_report(report);
  return report;
}

Summary summarize(const GeneralizationReport& r, std::size_t max_members) {
  constexpr std::size_t kListLimit = 8;
  Summary s;
  s.engine = r.letter_contexts.empty() ? "unary" : "monolinear";
  s.minimal_pairs = r.minimal_pairs;
  for (std::size_t i = 0; i < r.minimal_pairs.size(); ++i) {
    std::optional<Term> best;
    if (r.word_witnessed[i]) best = render_word(r.witnesses[i], r);
    if (i < r.ground_witnesses.size() && r.ground_witnesses[i] &&
        (!best || r.ground_witnesses[i]->size() < best->size())) {
      best = r.ground_witnesses[i];
    }
    s.witnesses.push_back(*best);
  }
  s.terms = r.words + r.ground_terms;
  s.classes = r.minimal_pairs.size();
  s.functions = r.functions;
  s.trivial = r.trivial && r.ground_terms.kind == Cardinality::Kind::empty;
  for (const Word& w : accepted_words(r.language, 64, max_members)) {
    s.members.push_back(render_word(w, r));
  }

  const bool listable = r.ground_terms.kind == Cardinality::Kind::empty &&
                        r.words.is_finite() && r.words.count <= kListLimit;
  if (s.trivial) {
    s.language = "Σ*";
  } else if (s.terms.kind == Cardinality::Kind::empty) {
    s.language = "∅";
  } else if (listable) {
    s.language = "{";
    bool first = true;
    for (const Word& w : accepted_words(r.language, r.language.num_states(), kListLimit)) {
      if (!first) s.language += ", ";
      first = false;
      s.language += to_string(render_word(w, r));
    }
    s.language += "}";
  } else {
    s.language = "regular, " + std::to_string(minimize(r.language).num_states()) + " states";
    if (r.ground_terms.kind != Cardinality::Kind::empty) {
      s.language += ", plus " + r.ground_terms.to_string() + " ground term(s)";
    }
  }
  return s;
}

std::optional<std::uint64_t> m_value(Element a, const FiniteAlgebra& alg) {
  if (alg.operations().size() != 1 || alg.operations()[0].arity != 1) {
    throw InputError("m(a) needs a monounary algebra (exactly one unary symbol)");
  }
  if (a >= alg.size()) throw InputError("element not in the universe");
  const auto& s = alg.operations()[0].table;
  ElementSet img = ElementSet::full(alg.size());
  std::uint64_t last = 0;  // a ∈ image(S^0) always
  for (std::uint64_t m = 1;; ++m) {
    ElementSet next(alg.size());
    for (Element e : img.elements()) next.insert(s[e]);
    if (next == img) return img.contains(a) ? std::nullopt : std::optional<std::uint64_t>(last);
    img = std::move(next);
    if (img.contains(a)) last = m;
  }
}

Word nat_successor_mgg(std::uint64_t a, std::uint64_t b) {
  return Word(std::min(a, b), 0);
}

}  // namespace agu
