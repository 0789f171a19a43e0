#pragma once

// (k,ℓ) fragments: terms over x1..xk in which every variable occurs at most
// ℓ times. ℓ = ∞ is the clone engine and (1,1) the monolinear reduction;
// other bounds are answered by a size-bounded enumeration.

#include <cstdint>
#include <optional>

#include "agu/algebra.hpp"
#include "agu/report.hpp"

namespace agu {

struct FragmentBound {
  std::size_t k = 1;
  /// Occurrence bound per variable; nullopt is ∞.
  std::optional<std::size_t> ell;
};

/// C⇑D within the fragment. Results of the size-bounded search carry
/// Summary::approximate and a note naming the bound.
Summary fragment_gens(const ElementSet& c, const ElementSet& d, const AlgebraPair& pair,
                      FragmentBound bound, std::size_t max_size = 8,
                      std::uint64_t budget = kDefaultBudget, std::size_t max_members = 0);

Summary fragment_gens(Element a, Element b, const AlgebraPair& pair, FragmentBound bound,
                      std::size_t max_size = 8, std::uint64_t budget = kDefaultBudget,
                      std::size_t max_members = 0);

}  // namespace agu
