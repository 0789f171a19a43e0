#include "agu/setwise.hpp"

#include <memory>

namespace agu {

UpSet up_set_of_set(const ElementSet& c, const FiniteAlgebra& alg, const Engine& engine,
                    std::uint64_t budget) {
  if (c.empty()) throw InputError("element set must be non-empty");
  if (c.universe_size() != alg.size()) throw InputError("element set does not belong to the algebra");
  const auto elements = c.elements();
  if (std::holds_alternative<UnaryEngine>(engine)) {
    Dfa result = up_set_dfa(elements.front(), alg, budget);
    for (std::size_t i = 1; i < elements.size(); ++i) {
      result = trim(intersect(result, up_set_dfa(elements[i], alg, budget)));
    }
    return result;
  }
  const std::size_t k = std::get<CloneEngine>(engine).k;
  if (k == 0) throw InputError("k must be at least 1");
  auto graph = std::make_shared<const CloneGraph>(generate_clone(AlgebraPair::same(alg), k, budget));
  TreeLanguage result{graph, std::vector<bool>(graph->size(), true)};
  for (Element a : elements) {
    const auto one = ElementSet::of(alg.size(), std::vector<Element>{a});
    TreeLanguage up = common_gens_tree(one, one, graph);
    for (FunctionId f = 0; f < graph->size(); ++f) {
      result.accepting[f] = result.accepting[f] && up.accepting[f];
    }
  }
  return result;
}

SetReport setwise_antiunify(const ElementSet& c, const ElementSet& d, const AlgebraPair& pair,
                            const Engine& engine, std::uint64_t budget) {
  if (std::holds_alternative<UnaryEngine>(engine)) {
    return minimal_gens_for_sets(c, d, pair, {}, budget);
  }
  const std::size_t k = std::get<CloneEngine>(engine).k;
  if (k == 0) throw InputError("k must be at least 1");
  if (c.empty() || d.empty()) throw InputError("element sets must be non-empty");
  auto graph = std::make_shared<const CloneGraph>(generate_clone(pair, k, budget));
  return k_generalizations_for_sets(c, d, graph);
}

Summary summarize(const SetReport& r, std::size_t max_members) {
  return std::visit([&](const auto& report) { return summarize(report, max_members); }, r);
}

ElementSet parse_element_set(const std::string& text, const FiniteAlgebra& alg) {
  ElementSet set(alg.size());
  std::string current;
  int depth = 0;
  auto flush = [&] {
    if (current.empty()) throw InputError("empty element name in list '" + text + "'");
    set.insert(alg.element(current));
    current.clear();
  };
  for (char ch : text) {
    if (ch == '{' || ch == '(') ++depth;
    if (ch == '}' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      flush();
    } else {
      current += ch;
    }
  }
  flush();
  return set;
}

}  // namespace agu
