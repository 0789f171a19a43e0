#pragma once

// Set-wise anti-unification C⇑D: generalizations whose image sets include
// all of C (resp. D), minimal under ⊑. Either engine can answer.

#include <cstdint>
#include <variant>

#include "agu/clone.hpp"
#include "agu/dfa.hpp"
#include "agu/unary.hpp"

namespace agu {

struct UnaryEngine {};
struct CloneEngine {
  std::size_t k = 2;
};
using Engine = std::variant<UnaryEngine, CloneEngine>;

using UpSet = std::variant<Dfa, TreeLanguage>;
using SetReport = std::variant<GeneralizationReport, TreeReport>;

/// ↑C as the intersection of the recognizers for ↑a, a ∈ C.
UpSet up_set_of_set(const ElementSet& c, const FiniteAlgebra& alg, const Engine& engine,
                    std::uint64_t budget = kDefaultBudget);

/// C⇑D; ⇑C is setwise_antiunify(C, C, AlgebraPair::same(alg), …).
SetReport setwise_antiunify(const ElementSet& c, const ElementSet& d, const AlgebraPair& pair,
                            const Engine& engine, std::uint64_t budget = kDefaultBudget);

Summary summarize(const SetReport& r, std::size_t max_members = 0);

/// Parses a comma-separated element list ("a,b" or "{},{1}") into a set;
/// commas inside braces or parentheses do not split.
ElementSet parse_element_set(const std::string& text, const FiniteAlgebra& alg);

}  // namespace agu
