#pragma once

// Finite algebras given by operation tables: term evaluation, image sets,
// the semantic generalization ordering, and homomorphisms.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agu/errors.hpp"
#include "agu/term.hpp"

namespace agu {

/// Position of an element in its algebra's universe.
using Element = std::uint32_t;

/// A subset of a universe {0, ..., n-1}, stored as a bitset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe_size);
  static ElementSet full(std::size_t universe_size);
  static ElementSet of(std::size_t universe_size, std::span<const Element> elements);

  void insert(Element e);
  bool contains(Element e) const;
  std::size_t universe_size() const noexcept { return n_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool is_subset_of(const ElementSet& other) const;
  std::vector<Element> elements() const;

  bool operator==(const ElementSet&) const = default;
  std::strong_ordering operator<=>(const ElementSet&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Image sets of one term (or term function) in both algebras of a pair.
struct ImagePair {
  ElementSet first;
  ElementSet second;

  /// Componentwise inclusion.
  bool is_subset_of(const ImagePair& other) const {
    return first.is_subset_of(other.first) && second.is_subset_of(other.second);
  }

  bool operator==(const ImagePair&) const = default;
  std::strong_ordering operator<=>(const ImagePair&) const = default;
};

/// ⊆×⊆-minimal members of `pairs` (duplicates collapsed), sorted.
std::vector<ImagePair> minimal_pairs(std::vector<ImagePair> pairs);

struct Operation {
  std::string name;
  std::size_t arity = 0;
  /// Row-major over argument positions; an arity-0 table has one entry.
  std::vector<Element> table;
};

/// An algebra with a finite universe of opaque element ids and one total
/// operation table per symbol. Construction does not validate; call
/// validate() before use on untrusted data.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(std::string name, std::vector<std::string> universe,
                std::vector<Operation> operations);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return universe_.size(); }
  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::string& element_name(Element e) const { return universe_.at(e); }
  std::optional<Element> find_element(std::string_view id) const;
  /// Throws InputError for unknown ids.
  Element element(std::string_view id) const;

  const std::vector<Operation>& operations() const noexcept { return ops_; }
  std::optional<std::size_t> find_operation(std::string_view name) const;
  /// Signature read off the operation list (names and arities).
  Signature signature() const;

  /// Table lookup; `args` must have the operation's arity.
  Element apply(std::size_t op, std::span<const Element> args) const;

  /// |A|^k, saturating at UINT64_MAX.
  std::uint64_t tuple_count(std::size_t k) const;

  std::string format(const ElementSet& s) const;

 private:
  std::string name_;
  std::vector<std::string> universe_;
  std::vector<Operation> ops_;
  std::map<std::string, Element, std::less<>> element_index_;
  std::map<std::string, std::size_t, std::less<>> op_index_;
};

/// Throws InputError describing the first violated invariant: a missing or
/// extra table, an arity mismatch, a short table (with the first missing
/// row) or an entry outside the universe.
void validate(const FiniteAlgebra& alg, const Signature& sig);
inline void validate(const FiniteAlgebra& alg) { validate(alg, alg.signature()); }

/// Two algebras over the same signature; (A, A) is allowed.
class AlgebraPair {
 public:
  AlgebraPair(FiniteAlgebra first, FiniteAlgebra second);
  static AlgebraPair same(const FiniteAlgebra& alg) { return {alg, alg}; }

  const FiniteAlgebra& first() const noexcept { return first_; }
  const FiniteAlgebra& second() const noexcept { return second_; }
  const Signature& signature() const noexcept { return sig_; }

 private:
  FiniteAlgebra first_;
  FiniteAlgebra second_;
  Signature sig_;
};

using Assignment = std::map<VarIndex, Element>;

/// Bottom-up evaluation; throws InputError when a variable is unassigned
/// or a symbol is missing from the algebra.
Element eval(const Term& t, const FiniteAlgebra& alg, const Assignment& assignment);

/// { eval(t, α) : α ranges over assignments to vars(t) }.
ElementSet image(const Term& t, const FiniteAlgebra& alg);
ImagePair image(const Term& t, const AlgebraPair& pair);

/// a ∈ image(t); throws InputError when a is not in the universe.
bool is_generalization(const Term& t, Element a, const FiniteAlgebra& alg);

/// s ⊑ t: image inclusion in both algebras of the pair.
bool semantic_leq(const Term& s, const Term& t, const AlgebraPair& pair);
bool semantic_equiv(const Term& s, const Term& t, const AlgebraPair& pair);

/// Every table of arity >= 1 is injective on full argument tuples.
bool is_injective_algebra(const FiniteAlgebra& alg);

/// Total map from the first universe to the second, by position.
using ElementMap = std::vector<Element>;

bool check_homomorphism(const ElementMap& h, const AlgebraPair& pair);

/// All homomorphisms first -> second (bijective ones only when iso_only),
/// in lexicographic order of the image vector. Throws BudgetExceeded when
/// the number of candidate maps exceeds `budget`.
std::vector<ElementMap> enumerate_homomorphisms(const AlgebraPair& pair, bool iso_only,
                                                std::uint64_t budget = kDefaultBudget);

/// Pointwise image of a set under a map.
ElementSet map_set(const ElementMap& h, const ElementSet& s, std::size_t target_size);

}  // namespace agu
