#pragma once

// Anti-unification in arbitrary finite algebras through k-ary clone
// generation. The clone graph doubles as a deterministic bottom-up tree
// automaton: its states are the term functions over X_k (paired across the
// two algebras) and every symbol application is a transition, so a regular
// tree language of generalizations is a set of accepting states.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agu/algebra.hpp"
#include "agu/cardinality.hpp"
#include "agu/report.hpp"
#include "agu/term.hpp"

namespace agu {

using FunctionId = std::uint32_t;

class CloneGraph {
 public:
  struct Transition {
    std::uint32_t symbol;  // index into the signature
    std::uint32_t first_arg;  // offset into the argument pool
    std::uint32_t arity;
    FunctionId result;
  };

  CloneGraph(const AlgebraPair& pair, std::size_t k);

  const AlgebraPair& pair() const noexcept { return pair_; }
  /// Number of variables x1..xk; 0 for the ground-term graph.
  std::size_t arity() const noexcept { return k_; }
  std::size_t size() const noexcept { return images_.size(); }

  std::span<const Element> first_table(FunctionId f) const;
  std::span<const Element> second_table(FunctionId f) const;
  const ImagePair& image(FunctionId f) const { return images_[f]; }
  /// Smallest witness (by size, then printed form among compositions of
  /// argument witnesses).
  const Term& witness(FunctionId f) const { return witnesses_[f]; }

  /// Functions in the order their witnesses were settled (non-decreasing
  /// witness size).
  const std::vector<FunctionId>& order() const noexcept { return order_; }
  /// Function of each projection x1..xk.
  const std::vector<FunctionId>& projections() const noexcept { return projections_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  std::span<const FunctionId> args(const Transition& t) const {
    return {arg_pool_.data() + t.first_arg, t.arity};
  }

  std::optional<FunctionId> find(std::span<const Element> table) const;
  /// The function a term over X_k induces; throws InputError when the term
  /// uses variables beyond x_k or unknown symbols.
  std::vector<Element> table_of(const Term& t) const;
  std::optional<FunctionId> function_of(const Term& t) const;

 private:
  friend CloneGraph generate_clone(const AlgebraPair& pair, std::size_t k, std::uint64_t budget);

  AlgebraPair pair_;
  std::size_t k_;
  std::size_t rows_first_;
  std::size_t rows_second_;
  std::vector<Element> tables_;  // size() * (rows_first_ + rows_second_)
  std::vector<ImagePair> images_;
  std::vector<Term> witnesses_;
  std::vector<FunctionId> order_;
  std::vector<FunctionId> projections_;
  std::vector<Transition> transitions_;
  std::vector<FunctionId> arg_pool_;
  std::map<std::vector<Element>, FunctionId> index_;
};

/// Saturates the projections (and constants) of X_k under every symbol.
/// k = 0 yields the ground terms. Throws BudgetExceeded when more than
/// `budget` functions or transitions arise.
CloneGraph generate_clone(const AlgebraPair& pair, std::size_t k,
                          std::uint64_t budget = kDefaultBudget);

/// A regular tree language given by accepting states of a clone graph.
struct TreeLanguage {
  std::shared_ptr<const CloneGraph> graph;
  std::vector<bool> accepting;

  bool contains(const Term& t) const;
  /// Number of terms over L ∪ X_k evaluating to an accepting state.
  Cardinality cardinality() const;
  bool is_universal() const;
  std::size_t accepting_count() const;
};

struct TreeReport {
  TreeLanguage language;
  std::vector<ImagePair> minimal_pairs;
  std::vector<Term> witnesses;
  Cardinality terms;
  std::size_t classes = 0;
  std::size_t functions = 0;
  bool trivial = false;

  bool contains(const Term& t) const { return language.contains(t); }
};

/// C↑D over X_k: functions whose images include C and D.
TreeLanguage common_gens_tree(const ElementSet& c, const ElementSet& d,
                              std::shared_ptr<const CloneGraph> graph);

/// C⇑D over X_k on an existing clone graph.
TreeReport k_generalizations_for_sets(const ElementSet& c, const ElementSet& d,
                                      std::shared_ptr<const CloneGraph> graph);

/// a⇑^k b.
TreeReport k_generalizations(Element a, Element b, const AlgebraPair& pair, std::size_t k,
                             std::uint64_t budget = kDefaultBudget);
TreeReport k_generalizations(Element a, Element b, std::shared_ptr<const CloneGraph> graph);

/// ⇑a = a⇑a in (alg, alg).
TreeReport characteristic_gens(Element a, const FiniteAlgebra& alg, std::size_t k,
                               std::uint64_t budget = kDefaultBudget);

/// Every term lies in ⇑a, and for each b ≠ a some term lies outside ⇑b.
bool is_characteristic_set(const std::vector<Term>& terms, Element a, const FiniteAlgebra& alg,
                           std::size_t k, std::uint64_t budget = kDefaultBudget);

/// Generalization type over all element pairs, relative to X_k.
TypeReport classify_type_clone(const AlgebraPair& pair, std::size_t k,
                               std::uint64_t budget = kDefaultBudget);

Summary summarize(const TreeReport& r, std::size_t max_members = 0);

/// Up to `limit` accepted terms of smallest size (size <= max_size).
std::vector<Term> accepted_terms(const TreeLanguage& lang, std::size_t max_size,
                                 std::size_t limit);

/// Graphviz rendering of the clone graph; accepting states as doublecircles.
std::string to_dot(const TreeLanguage& lang, const std::string& name = "clone");

/// Operations available to powerset_algebra.
enum class SetOp { union_, intersection, complement };

/// (2^U, ops) with U = {1..universe_size}. Elements are written "{}",
/// "{1}", "{1,2}", ...; operations are named "cup", "cap", "comp"; with
/// all_distinguished every subset is a constant named "empty", "s1", "s12".
FiniteAlgebra powerset_algebra(std::size_t universe_size, const std::vector<SetOp>& ops,
                               bool all_distinguished);

}  // namespace agu
