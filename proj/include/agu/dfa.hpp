#pragma once

// Complete deterministic finite automata over a named alphabet, with the
// closure operations used to compute and compare generalization languages.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "agu/cardinality.hpp"

namespace agu {

using Letter = std::uint32_t;
/// A word as a sequence of letter indices into an alphabet.
using Word = std::vector<Letter>;

class Dfa {
 public:
  using State = std::uint32_t;

  Dfa() = default;
  /// `delta` is row-major: delta[q * |alphabet| + letter]. Throws
  /// InputError when the table is not total or refers to missing states.
  Dfa(std::vector<std::string> alphabet, std::size_t num_states, std::vector<State> delta,
      State start, std::vector<bool> finals, std::vector<std::string> labels = {});

  /// Σ*.
  static Dfa universal(std::vector<std::string> alphabet);
  /// ∅.
  static Dfa empty(std::vector<std::string> alphabet);
  /// Exactly the given finite set of words.
  static Dfa of_words(std::vector<std::string> alphabet, const std::vector<Word>& words);

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  State start() const noexcept { return start_; }
  bool is_final(State q) const { return finals_[q]; }
  State next(State q, Letter a) const { return delta_[q * alphabet_.size() + a]; }
  /// Per-state labels; empty strings when none were given.
  const std::string& label(State q) const { return labels_[q]; }

  State run(const Word& w) const;
  bool accepts(const Word& w) const { return is_final(run(w)); }

 private:
  std::vector<std::string> alphabet_;
  std::size_t num_states_ = 0;
  std::vector<State> delta_;
  State start_ = 0;
  std::vector<bool> finals_;
  std::vector<std::string> labels_;
};

Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
Dfa complement(const Dfa& a);

/// Restricts to reachable states and merges every state from which no final
/// state is reachable into one sink labeled "dead".
Dfa trim(const Dfa& a);
/// Minimal complete DFA of the same language with states numbered in BFS
/// order from the start state (canonical up to the alphabet order).
Dfa minimize(const Dfa& a);

bool is_empty(const Dfa& a);
/// L(a) ⊆ L(b).
bool included(const Dfa& a, const Dfa& b);
bool equivalent(const Dfa& a, const Dfa& b);
bool is_universal(const Dfa& a);
/// Number of accepted words, via cycle detection on the trimmed automaton.
Cardinality cardinality(const Dfa& a);

/// Accepted words of length <= max_length in shortlex order, at most `limit`.
std::vector<Word> accepted_words(const Dfa& a, std::size_t max_length,
                                 std::size_t limit = SIZE_MAX);

/// Graphviz rendering; final states are doublecircles.
std::string to_dot(const Dfa& a, const std::string& name = "dfa");

}  // namespace agu
