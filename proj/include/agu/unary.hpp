#pragma once

// Anti-unification in finite unary algebras (semiautomata).
//
// A word σ1…σn over the unary symbols denotes the term σn(…σ1(x1)…): letters
// are applied left to right, as in the extended transition function of an
// automaton. Every word induces a pair of self-maps (one per algebra); the
// set of such pairs is the transition monoid, and every language computed
// here is recognized by an automaton whose states are monoid elements.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agu/algebra.hpp"
#include "agu/dfa.hpp"
#include "agu/report.hpp"
#include "agu/term.hpp"

namespace agu {

/// The pair of self-maps induced by a word, with its shortlex-least witness.
struct TransitionElement {
  std::vector<Element> first;
  std::vector<Element> second;
  Word witness;
};

class TransitionMonoid {
 public:
  TransitionMonoid(std::vector<std::string> alphabet, std::size_t first_size,
                   std::size_t second_size, std::vector<TransitionElement> elements,
                   std::vector<std::uint32_t> next);

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const TransitionElement& element(std::size_t i) const { return elements_[i]; }
  /// Index of element(i) followed by `letter`.
  std::uint32_t next(std::size_t i, Letter letter) const {
    return next_[i * alphabet_.size() + letter];
  }
  const ImagePair& image(std::size_t i) const { return images_[i]; }

  /// Automaton with one state per element (start = identity) accepting the
  /// words whose element is flagged in `finals`.
  Dfa to_dfa(const std::vector<bool>& finals, const std::vector<std::string>& labels = {}) const;

 private:
  std::vector<std::string> alphabet_;
  std::vector<TransitionElement> elements_;
  std::vector<std::uint32_t> next_;
  std::vector<ImagePair> images_;
};

/// Names of the unary symbols in declaration order; throws InputError when
/// any symbol of `sig` is not unary.
std::vector<std::string> unary_alphabet(const Signature& sig);

/// BFS closure of the identity under right composition with the letters.
/// Throws BudgetExceeded when more than `budget` elements appear.
TransitionMonoid transition_monoid(const AlgebraPair& pair,
                                   std::uint64_t budget = kDefaultBudget);

/// ↑a: words whose image contains a.
Dfa up_set_dfa(Element a, const FiniteAlgebra& alg, std::uint64_t budget = kDefaultBudget);

/// a↑b as the product of the two up-set automata.
Dfa common_gens_dfa(Element a, Element b, const AlgebraPair& pair,
                    std::uint64_t budget = kDefaultBudget);

/// Minimally general generalizations restricted to one syntactic class.
struct GeneralizationReport {
  std::vector<ImagePair> minimal_pairs;
  /// Shortest witness word per minimal pair (parallel to minimal_pairs).
  /// Only meaningful where word_witnessed is set.
  std::vector<Word> witnesses;
  std::vector<bool> word_witnessed;
  /// Trimmed monoid automaton; states are labeled with their image pair.
  Dfa language;
  /// Accepted words; the monolinear reduction counts terms instead, with
  /// every ground filler of a letter expanded.
  Cardinality words;
  /// Number of ≡-classes (distinct image pairs) in the language.
  std::size_t classes = 0;
  /// Number of distinct term functions in the language.
  std::size_t functions = 0;
  bool trivial = false;

  // Filled in by the monolinear reduction only.
  /// When non-empty, letter i stands for the one-hole context
  /// letter_contexts[i] (hole x1) instead of a unary symbol.
  std::vector<Term> letter_contexts;
  /// Shortest ground term per minimal pair (parallel to minimal_pairs),
  /// when one realizes that pair.
  std::vector<std::optional<Term>> ground_witnesses;
  /// Number of ground terms in the language.
  Cardinality ground_terms;
};

/// a⇑b in a pair of unary algebras.
GeneralizationReport minimal_gens(Element a, Element b, const AlgebraPair& pair,
                                  std::uint64_t budget = kDefaultBudget);

/// C⇑D: minimal pairs among words with C ⊆ first image and D ⊆ second image.
/// `extra_pairs` are further achievable image pairs (realized by terms
/// outside the word language) that take part in the minimality test.
GeneralizationReport minimal_gens_for_sets(const ElementSet& c, const ElementSet& d,
                                           const AlgebraPair& pair,
                                           const std::vector<ImagePair>& extra_pairs = {},
                                           std::uint64_t budget = kDefaultBudget);

/// The automaton for C↑D built directly from the monoid.
Dfa common_gens_dfa_for_sets(const ElementSet& c, const ElementSet& d,
                             const AlgebraPair& pair, std::uint64_t budget = kDefaultBudget);

/// Nested-term rendering of a word: "S(S(x1))" for SS, "x1" for ε.
Term word_to_term(const Word& w, const std::vector<std::string>& alphabet);
/// Renders a report witness, honoring monolinear letter contexts.
Term render_word(const Word& w, const GeneralizationReport& report);

/// Generalization type over all element pairs of a unary algebra pair.
TypeReport classify_type(const AlgebraPair& pair, std::uint64_t budget = kDefaultBudget);

/// Engine-independent view; `max_members` shortest words are listed.
Summary summarize(const GeneralizationReport& r, std::size_t max_members = 0);

/// m(a) = max{ m : a ∈ image(S^m) }; nullopt stands for ∞. Throws
/// InputError unless the algebra has exactly one symbol, of arity 1.
std::optional<std::uint64_t> m_value(Element a, const FiniteAlgebra& alg);

/// a⇑b in (ℕ, S): the single word S^min(a,b) over the alphabet {"S"}.
Word nat_successor_mgg(std::uint64_t a, std::uint64_t b);

}  // namespace agu
