#pragma once

// Engine-independent views of anti-unification results and the text /
// machine-readable renderings used by the command-line tool.

#include <cstddef>
#include <string>
#include <vector>

#include "agu/algebra.hpp"
#include "agu/cardinality.hpp"
#include "agu/term.hpp"

namespace agu {

/// Common shape of every anti-unification answer.
struct Summary {
  std::string engine;
  std::vector<ImagePair> minimal_pairs;
  /// One witness per minimal pair.
  std::vector<Term> witnesses;
  /// Size of the minimal-generalization language, counting terms.
  Cardinality terms;
  std::size_t classes = 0;
  std::size_t functions = 0;
  bool trivial = false;
  /// Set when the result comes from a size-bounded search.
  bool approximate = false;
  /// "Σ*", "∅", "{t1, t2}" or a short description of the recognizer.
  std::string language;
  /// Up to a requested number of shortest members of the language.
  std::vector<Term> members;
  std::vector<std::string> notes;
};

/// Generalization type of an algebra pair. Per-pair labels and the
/// aggregate are computed twice: counting terms and counting ≡-classes.
struct TypeReport {
  struct Entry {
    Element a = 0;
    Element b = 0;
    Cardinality terms;
    std::size_t classes = 0;
    bool trivial = false;
    std::string label_terms;
    std::string label_classes;
  };

  std::vector<Entry> entries;
  std::vector<std::string> labels_terms;
  std::vector<std::string> labels_classes;
  bool trivial = false;
};

/// Label of a single a⇑b: nullary / unitary / finitary / infinitary.
std::string pair_label(const Cardinality& c);

/// Aggregate labels (nullary, unitary, finitary, infinitary, trivial) that
/// hold for the given per-pair sizes; empty when none applies.
std::vector<std::string> aggregate_labels(const std::vector<Cardinality>& sizes,
                                          const std::vector<bool>& trivial);

/// Fills labels from the entries' sizes.
void finish_type_report(TypeReport& report);

std::string format_pair(const ImagePair& p, const AlgebraPair& pair);

/// Deterministic text rendering (no timing information).
std::string format_text(const Summary& s, const AlgebraPair& pair);
std::string format_text(const TypeReport& r, const AlgebraPair& pair);

/// Newline-delimited JSON records, without the schema header line.
std::string format_machine(const Summary& s, const AlgebraPair& pair);
std::string format_machine(const TypeReport& r, const AlgebraPair& pair);

}  // namespace agu
