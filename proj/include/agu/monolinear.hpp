#pragma once

// The monolinear fragment: terms with exactly one occurrence of x1, plus
// ground terms. A monolinear term is a stack of one-hole contexts
// f(g1,…,x1,…,gm) whose fillers are ground, so the fragment reduces to the
// unary engine over a derived semiautomaton.

#include <cstdint>

#include "agu/algebra.hpp"
#include "agu/unary.hpp"

namespace agu {

/// C⇑D restricted to monolinear and ground terms. Letters of the report are
/// the elementary translations, one per symbol, hole position and tuple of
/// ground-term values for the other positions.
GeneralizationReport monolinear_antiunify_sets(const ElementSet& c, const ElementSet& d,
                                               const AlgebraPair& pair,
                                               std::uint64_t budget = kDefaultBudget);

GeneralizationReport monolinear_antiunify(Element a, Element b, const AlgebraPair& pair,
                                          std::uint64_t budget = kDefaultBudget);

}  // namespace agu
