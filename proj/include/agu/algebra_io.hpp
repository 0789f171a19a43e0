#pragma once

// JSON algebra files:
//   {"name": "...", "universe": ["a", ...],
//    "operations": [{"name": "f", "arity": k, "table": ...}, ...]}
// An arity-0 table is one element id; an arity-k table is a k-deep nested
// array indexed by universe position.

#include <filesystem>
#include <string>

#include "agu/algebra.hpp"
#include "json.hpp"

namespace agu {

/// Throws InputError on structural problems, unknown elements, or
/// non-total tables (naming the offending row).
FiniteAlgebra algebra_from_json(const nlohmann::json& doc);
FiniteAlgebra load_algebra(const std::filesystem::path& path);

nlohmann::json algebra_to_json(const FiniteAlgebra& alg);
void save_algebra(const FiniteAlgebra& alg, const std::filesystem::path& path);

}  // namespace agu
