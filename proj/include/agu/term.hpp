#pragma once

// First-order terms over a ranked signature, substitutions, syntactic
// matching and the classical syntactic least general generalization.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace agu {

/// True for the reserved variable lexeme space: "x" followed by digits.
bool is_variable_lexeme(std::string_view text);

/// True when `name` is an identifier outside the variable lexeme space.
bool is_valid_symbol_name(std::string_view name);

/// A finite set of function symbols with their arities, in declaration
/// order. Arity-0 symbols are constants.
class Signature {
 public:
  struct Symbol {
    std::string name;
    std::size_t arity = 0;

    bool operator==(const Symbol&) const = default;
  };

  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  /// Appends a symbol; throws InputError on invalid or duplicate names.
  void add(std::string name, std::size_t arity);

  std::optional<std::size_t> find(std::string_view name) const;
  /// Arity of `name`; throws InputError for unknown symbols.
  std::size_t arity(std::string_view name) const;

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  /// Every symbol has arity exactly 1 (vacuously true when empty).
  bool is_unary() const;
  std::size_t max_arity() const;

  bool operator==(const Signature& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using VarIndex = std::uint32_t;

/// A variable x_i (i >= 1) or a symbol applied to its argument terms.
/// Terms are plain values; equality is structural.
class Term {
 public:
  static Term var(VarIndex index);
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const noexcept { return var_ != 0; }
  VarIndex var_index() const noexcept { return var_; }
  const std::string& symbol() const noexcept { return symbol_; }
  std::span<const Term> args() const noexcept { return args_; }

  /// Number of symbol and variable occurrences.
  std::size_t size() const;
  std::size_t depth() const;
  std::set<VarIndex> vars() const;
  /// Number of distinct variables.
  std::size_t rank() const { return vars().size(); }
  VarIndex max_var() const;
  /// Occurrences of x_i.
  std::size_t occurrences(VarIndex index) const;

  bool operator==(const Term& other) const = default;
  std::strong_ordering operator<=>(const Term& other) const;

 private:
  Term() = default;

  VarIndex var_ = 0;
  std::string symbol_;
  std::vector<Term> args_;
};

using Substitution = std::map<VarIndex, Term>;

/// Renders `t` in the input grammar, e.g. "f(x1,a)".
std::string to_string(const Term& t);

/// Parses a term; throws ParseError on syntax errors and InputError on
/// unknown symbols or arity mismatches.
Term parse_term(std::string_view text, const Signature& sig);

/// Throws InputError unless every symbol of `t` is in `sig` with the
/// matching argument count.
void check_term(const Term& t, const Signature& sig);

/// Simultaneous replacement; unmapped variables stay unchanged.
Term apply_substitution(const Term& t, const Substitution& s);

/// Returns sigma with s == t sigma, restricted to vars(t), if one exists.
/// The variables of `s` are treated as constants.
std::optional<Substitution> match_term(const Term& s, const Term& t);

/// s is a syntactic instance of t (s ≲ t).
inline bool is_instance_of(const Term& s, const Term& t) {
  return match_term(s, t).has_value();
}

/// Renumbers variables x1, x2, ... in first-occurrence (preorder) order.
Term canonical_renaming(const Term& t);

/// Equality up to a bijective renaming of variables.
bool alpha_equivalent(const Term& a, const Term& b);

/// Least general generalization of two terms. Each distinct disagreement
/// pair maps to one variable; the result is canonically renamed.
Term syntactic_lgg(const Term& s, const Term& t);

}  // namespace agu
