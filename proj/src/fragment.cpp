#include "agu/fragment.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "agu/clone.hpp"
#include "agu/monolinear.hpp"
#include "agu/unary.hpp"

namespace agu {

namespace {

// Terms of one size grouped by (function table, occurrence vector).
struct Key {
  std::vector<Element> table;
  std::vector<std::uint8_t> occurrences;
  auto operator<=>(const Key&) const = default;
};

struct Group {
  std::uint64_t count = 0;
  Term witness = Term::var(1);
  std::string printed;
};

Summary enumerate_fragment(const ElementSet& c, const ElementSet& d, const AlgebraPair& pair,
                           FragmentBound bound, std::size_t max_size, std::uint64_t budget,
                           std::size_t max_members) {
  const FiniteAlgebra& alg_a = pair.first();
  const FiniteAlgebra& alg_b = pair.second();
  const Signature& sig = pair.signature();
  const std::size_t k = bound.k;
  const std::size_t ell = *bound.ell;
  if (ell > 255) throw InputError("occurrence bound too large for the bounded search");
  const std::uint64_t rows_a = alg_a.tuple_count(k);
  const std::uint64_t rows_b = alg_b.tuple_count(k);
  if (rows_a > budget || rows_b > budget) throw BudgetExceeded("function tables exceed the budget");

  std::vector<std::map<Key, Group>> by_size(max_size + 1);
  std::uint64_t groups = 0;
  auto add = [&](std::size_t size, Key key, const std::function<Term()>& make,
                 const std::string& printed, std::uint64_t count) {
    auto [it, inserted] = by_size[size].try_emplace(std::move(key));
    Group& g = it->second;
    if (inserted) {
      if (++groups > budget) {
        throw BudgetExceeded("bounded fragment search exceeds the budget of " +
                             std::to_string(budget) + " term classes");
      }
      g.witness = make();
      g.printed = printed;
    } else if (printed < g.printed) {
      g.witness = make();
      g.printed = printed;
    }
    g.count = saturating_add(g.count, count);
  };

  if (max_size >= 1) {
    for (std::size_t i = 1; i <= k; ++i) {
      Key key;
      for (std::size_t side = 0; side < 2; ++side) {
        const FiniteAlgebra& alg = side == 0 ? alg_a : alg_b;
        const std::uint64_t rows = side == 0 ? rows_a : rows_b;
        const std::uint64_t stride = alg.tuple_count(k - i);
        for (std::uint64_t r = 0; r < rows; ++r) {
          key.table.push_back(static_cast<Element>((r / stride) % alg.size()));
        }
      }
      key.occurrences.assign(k, 0);
      key.occurrences[i - 1] = 1;
      Term x = Term::var(static_cast<VarIndex>(i));
      add(1, std::move(key), [&] { return x; }, to_string(x), 1);
    }
    for (const auto& sym : sig.symbols()) {
      if (sym.arity != 0) continue;
      Key key;
      const Element va = alg_a.operations()[*alg_a.find_operation(sym.name)].table[0];
      const Element vb = alg_b.operations()[*alg_b.find_operation(sym.name)].table[0];
      key.table.assign(rows_a, va);
      key.table.insert(key.table.end(), rows_b, vb);
      key.occurrences.assign(k, 0);
      Term t = Term::app(sym.name);
      add(1, std::move(key), [&] { return t; }, sym.name, 1);
    }
  }

  std::vector<Element> argv;
  for (std::size_t size = 2; size <= max_size; ++size) {
    for (const auto& sym : sig.symbols()) {
      if (sym.arity == 0 || sym.arity > size - 1) continue;
      const std::size_t op_a = *alg_a.find_operation(sym.name);
      const std::size_t op_b = *alg_b.find_operation(sym.name);
      std::vector<std::size_t> parts(sym.arity, 1);
      parts.back() = size - sym.arity;
      while (true) {
        std::vector<std::vector<const std::pair<const Key, Group>*>> choices(sym.arity);
        bool feasible = true;
        for (std::size_t j = 0; j < sym.arity; ++j) {
          for (const auto& entry : by_size[parts[j]]) choices[j].push_back(&entry);
          feasible = feasible && !choices[j].empty();
        }
        std::vector<std::size_t> pick(sym.arity, 0);
        while (feasible) {
          Key key;
          key.occurrences.assign(k, 0);
          bool within = true;
          std::uint64_t count = 1;
          for (std::size_t j = 0; j < sym.arity && within; ++j) {
            const auto& arg = *choices[j][pick[j]];
            for (std::size_t v = 0; v < k; ++v) {
              key.occurrences[v] = static_cast<std::uint8_t>(key.occurrences[v] +
                                                             arg.first.occurrences[v]);
              within = within && key.occurrences[v] <= ell;
            }
            count = saturating_mul(count, arg.second.count);
          }
          if (within) {
            argv.resize(sym.arity);
            for (std::uint64_t r = 0; r < rows_a + rows_b; ++r) {
              for (std::size_t j = 0; j < sym.arity; ++j) {
                argv[j] = choices[j][pick[j]]->first.table[r];
              }
              key.table.push_back(r < rows_a ? alg_a.apply(op_a, argv) : alg_b.apply(op_b, argv));
            }
            std::string printed = sym.name + "(";
            for (std::size_t j = 0; j < sym.arity; ++j) {
              if (j) printed += ",";
              printed += choices[j][pick[j]]->second.printed;
            }
            printed += ")";
            auto make = [&] {
              std::vector<Term> args;
              for (std::size_t j = 0; j < sym.arity; ++j) {
                args.push_back(choices[j][pick[j]]->second.witness);
              }
              return Term::app(sym.name, std::move(args));
            };
            add(size, std::move(key), make, printed, count);
          }
          std::size_t j = sym.arity;
          while (j-- > 0) {
            if (++pick[j] < choices[j].size()) break;
            pick[j] = 0;
          }
          if (j == static_cast<std::size_t>(-1)) break;
        }
        std::size_t j = sym.arity - 1;
        while (j-- > 0) {
          if (parts.back() > 1) {
            ++parts[j];
            --parts.back();
            break;
          }
          parts.back() += parts[j] - 1;
          parts[j] = 1;
        }
        if (j == static_cast<std::size_t>(-1)) break;
      }
    }
  }

  auto image_of = [&](const Key& key) {
    ImagePair img{ElementSet(alg_a.size()), ElementSet(alg_b.size())};
    for (std::uint64_t r = 0; r < rows_a; ++r) img.first.insert(key.table[r]);
    for (std::uint64_t r = 0; r < rows_b; ++r) img.second.insert(key.table[rows_a + r]);
    return img;
  };
  std::vector<ImagePair> candidates;
  for (const auto& level : by_size) {
    for (const auto& [key, group] : level) {
      ImagePair img = image_of(key);
      if (c.is_subset_of(img.first) && d.is_subset_of(img.second)) candidates.push_back(img);
    }
  }

  Summary s;
  s.engine = "fragment k=" + std::to_string(k) + " l=" + std::to_string(ell);
  s.minimal_pairs = minimal_pairs(std::move(candidates));
  s.witnesses.assign(s.minimal_pairs.size(), Term::var(1));
  std::vector<bool> witnessed(s.minimal_pairs.size(), false);
  std::map<std::vector<Element>, bool> functions;
  std::uint64_t total = 0;
  std::uint64_t accepted = 0;
  for (std::size_t size = 1; size <= max_size; ++size) {
    // Within a size, groups are visited in printed-witness order.
    std::vector<std::pair<const Key*, const Group*>> level;
    for (const auto& [key, group] : by_size[size]) level.emplace_back(&key, &group);
    std::sort(level.begin(), level.end(),
              [](const auto& x, const auto& y) { return x.second->printed < y.second->printed; });
    for (const auto& [key, group] : level) {
      total = saturating_add(total, group->count);
      ImagePair img = image_of(*key);
      auto it = std::lower_bound(s.minimal_pairs.begin(), s.minimal_pairs.end(), img);
      if (it == s.minimal_pairs.end() || *it != img) continue;
      accepted = saturating_add(accepted, group->count);
      functions[key->table] = true;
      const auto i = static_cast<std::size_t>(it - s.minimal_pairs.begin());
      if (!witnessed[i]) {
        witnessed[i] = true;
        s.witnesses[i] = group->witness;
      }
      if (s.members.size() < max_members) s.members.push_back(group->witness);
    }
  }
  s.terms = Cardinality::of_count(accepted);
  s.classes = s.minimal_pairs.size();
  s.functions = functions.size();
  s.trivial = accepted == total && total > 0;
  const bool closed = std::none_of(sig.symbols().begin(), sig.symbols().end(),
                                   [](const auto& sym) { return sym.arity > 0; });
  s.approximate = !closed;
  if (s.approximate) {
    s.notes.push_back("bounded search: terms of size <= " + std::to_string(max_size) +
                      "; counts and minimality are relative to that bound");
    s.language = s.terms.kind == Cardinality::Kind::empty
                     ? "∅ (within the bound)"
                     : std::to_string(accepted) + " term(s) within the bound";
  } else if (s.terms.kind == Cardinality::Kind::empty) {
    s.language = "∅";
  } else {
    s.language = "{";
    bool first = true;
    for (std::size_t size = 1; size <= max_size; ++size) {
      for (const auto& [key, group] : by_size[size]) {
        ImagePair img = image_of(key);
        if (!std::binary_search(s.minimal_pairs.begin(), s.minimal_pairs.end(), img)) continue;
        if (!first) s.language += ", ";
        first = false;
        s.language += group.printed;
      }
    }
    s.language += "}";
  }
  return s;
}

}  // namespace

Summary fragment_gens(const ElementSet& c, const ElementSet& d, const AlgebraPair& pair,
                      FragmentBound bound, std::size_t max_size, std::uint64_t budget,
                      std::size_t max_members) {
  if (bound.k == 0) throw InputError("k must be at least 1");
  if (bound.ell && *bound.ell == 0) throw InputError("occurrence bound must be at least 1");
  if (c.empty() || d.empty()) throw InputError("element sets must be non-empty");
  if (!bound.ell) {
    auto graph = std::make_shared<const CloneGraph>(generate_clone(pair, bound.k, budget));
    return summarize(k_generalizations_for_sets(c, d, graph), max_members);
  }
  if (bound.k == 1 && *bound.ell == 1) {
    return summarize(monolinear_antiunify_sets(c, d, pair, budget), max_members);
  }
  return enumerate_fragment(c, d, pair, bound, max_size, budget, max_members);
}

Summary fragment_gens(Element a, Element b, const AlgebraPair& pair, FragmentBound bound,
                      std::size_t max_size, std::uint64_t budget, std::size_t max_members) {
  if (a >= pair.first().size() || b >= pair.second().size()) {
    throw InputError("element not in the universe");
  }
  return fragment_gens(ElementSet::of(pair.first().size(), std::vector<Element>{a}),
                       ElementSet::of(pair.second().size(), std::vector<Element>{b}), pair,
                       bound, max_size, budget, max_members);
}

}  // namespace agu
