#include "agu/algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace agu {

// ---------------------------------------------------------------------------
// ElementSet
// ---------------------------------------------------------------------------

ElementSet::ElementSet(std::size_t universe_size)
    : n_(universe_size), bits_((universe_size + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t universe_size) {
  ElementSet s(universe_size);
  for (std::size_t i = 0; i < universe_size; ++i) s.insert(static_cast<Element>(i));
  return s;
}

ElementSet ElementSet::of(std::size_t universe_size, std::span<const Element> elements) {
  ElementSet s(universe_size);
  for (Element e : elements) s.insert(e);
  return s;
}

void ElementSet::insert(Element e) {
  if (e >= n_) throw InputError("element index out of range");
  bits_[e / 64] |= std::uint64_t{1} << (e % 64);
}

bool ElementSet::contains(Element e) const {
  return e < n_ && ((bits_[e / 64] >> (e % 64)) & 1U) != 0;
}

std::size_t ElementSet::size() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if ((bits_[i] & ~other.bits_[i]) != 0) return false;
  }
  return true;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (contains(static_cast<Element>(i))) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::vector<ImagePair> minimal_pairs(std::vector<ImagePair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<ImagePair> out;
  for (const auto& p : pairs) {
    bool dominated = std::any_of(pairs.begin(), pairs.end(), [&](const ImagePair& q) {
      return q != p && q.is_subset_of(p);
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// FiniteAlgebra
// ---------------------------------------------------------------------------

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> universe,
                             std::vector<Operation> operations)
    : name_(std::move(name)), universe_(std::move(universe)), ops_(std::move(operations)) {
  if (universe_.empty()) throw InputError("universe must be non-empty");
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!element_index_.emplace(universe_[i], static_cast<Element>(i)).second) {
      throw InputError("duplicate element '" + universe_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (!op_index_.emplace(ops_[i].name, i).second) {
      throw InputError("duplicate operation '" + ops_[i].name + "'");
    }
  }
}

std::optional<Element> FiniteAlgebra::find_element(std::string_view id) const {
  auto it = element_index_.find(id);
  if (it == element_index_.end()) return std::nullopt;
  return it->second;
}

Element FiniteAlgebra::element(std::string_view id) const {
  auto e = find_element(id);
  if (!e) {
    throw InputError("unknown element '" + std::string(id) + "' in algebra '" + name_ + "'");
  }
  return *e;
}

std::optional<std::size_t> FiniteAlgebra::find_operation(std::string_view name) const {
  auto it = op_index_.find(name);
  if (it == op_index_.end()) return std::nullopt;
  return it->second;
}

Signature FiniteAlgebra::signature() const {
  Signature sig;
  for (const auto& op : ops_) sig.add(op.name, op.arity);
  return sig;
}

Element FiniteAlgebra::apply(std::size_t op, std::span<const Element> args) const {
  const Operation& o = ops_[op];
  std::size_t row = 0;
  for (Element a : args) row = row * universe_.size() + a;
  return o.table[row];
}

std::uint64_t FiniteAlgebra::tuple_count(std::size_t k) const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n > UINT64_MAX / universe_.size()) return UINT64_MAX;
    n *= universe_.size();
  }
  return n;
}

std::string FiniteAlgebra::format(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  for (Element e : s.elements()) {
    if (!first) out += ", ";
    first = false;
    out += universe_[e];
  }
  return out + "}";
}

namespace {

std::string format_row(const FiniteAlgebra& alg, std::size_t row, std::size_t arity) {
  std::vector<Element> digits(arity);
  for (std::size_t i = arity; i-- > 0;) {
    digits[i] = static_cast<Element>(row % alg.size());
    row /= alg.size();
  }
  std::string out = "(";
  for (std::size_t i = 0; i < arity; ++i) {
    if (i) out += ",";
    out += alg.universe()[digits[i]];
  }
  return out + ")";
}

}  // namespace

void validate(const FiniteAlgebra& alg, const Signature& sig) {
  for (const auto& sym : sig.symbols()) {
    auto idx = alg.find_operation(sym.name);
    if (!idx) {
      throw InputError("missing table for symbol '" + sym.name + "'");
    }
    const Operation& op = alg.operations()[*idx];
    if (op.arity != sym.arity) {
      throw InputError("operation '" + op.name + "' has arity " + std::to_string(op.arity) +
                       ", signature requires " + std::to_string(sym.arity));
    }
  }
  for (const auto& op : alg.operations()) {
    if (!sig.find(op.name)) {
      throw InputError("operation '" + op.name + "' is not in the signature");
    }
    const std::uint64_t rows = alg.tuple_count(op.arity);
    if (op.table.size() < rows) {
      throw InputError("table of '" + op.name + "' is not total: missing row " +
                       format_row(alg, op.table.size(), op.arity));
    }
    if (op.table.size() > rows) {
      throw InputError("table of '" + op.name + "' has " + std::to_string(op.table.size()) +
                       " rows, expected " + std::to_string(rows));
    }
    for (std::size_t r = 0; r < op.table.size(); ++r) {
      if (op.table[r] >= alg.size()) {
        throw InputError("table of '" + op.name + "' is not closed: row " +
                         format_row(alg, r, op.arity) + " maps outside the universe");
      }
    }
  }
}

AlgebraPair::AlgebraPair(FiniteAlgebra first, FiniteAlgebra second)
    : first_(std::move(first)), second_(std::move(second)), sig_(first_.signature()) {
  if (!(second_.signature() == sig_)) {
    throw InputError("algebras '" + first_.name() + "' and '" + second_.name() +
                     "' have different signatures");
  }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

// A term flattened to postorder with symbols resolved against one algebra.
struct CompiledTerm {
  struct Node {
    bool is_var;
    std::size_t index;  // variable slot or operation index
    std::size_t arity;
  };
  std::vector<Node> nodes;
  std::vector<VarIndex> vars;  // slot -> variable index

  CompiledTerm(const Term& t, const FiniteAlgebra& alg) {
    auto vs = t.vars();
    vars.assign(vs.begin(), vs.end());
    compile(t, alg);
  }

  void compile(const Term& t, const FiniteAlgebra& alg) {
    if (t.is_var()) {
      auto slot = std::lower_bound(vars.begin(), vars.end(), t.var_index()) - vars.begin();
      nodes.push_back({true, static_cast<std::size_t>(slot), 0});
      return;
    }
    auto op = alg.find_operation(t.symbol());
    if (!op) {
      throw InputError("symbol '" + t.symbol() + "' has no table in '" + alg.name() + "'");
    }
    if (alg.operations()[*op].arity != t.args().size()) {
      throw InputError("symbol '" + t.symbol() + "' applied to wrong number of arguments");
    }
    for (const auto& a : t.args()) compile(a, alg);
    nodes.push_back({false, *op, t.args().size()});
  }

  Element run(const FiniteAlgebra& alg, std::span<const Element> slots,
              std::vector<Element>& stack) const {
    stack.clear();
    for (const auto& n : nodes) {
      if (n.is_var) {
        stack.push_back(slots[n.index]);
        continue;
      }
      std::span<const Element> args(stack.data() + stack.size() - n.arity, n.arity);
      Element r = alg.apply(n.index, args);
      stack.resize(stack.size() - n.arity);
      stack.push_back(r);
    }
    return stack.back();
  }
};

}  // namespace

Element eval(const Term& t, const FiniteAlgebra& alg, const Assignment& assignment) {
  CompiledTerm c(t, alg);
  std::vector<Element> slots;
  for (VarIndex v : c.vars) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw InputError("variable x" + std::to_string(v) + " is unassigned");
    }
    if (it->second >= alg.size()) throw InputError("assigned element out of range");
    slots.push_back(it->second);
  }
  std::vector<Element> stack;
  return c.run(alg, slots, stack);
}

ElementSet image(const Term& t, const FiniteAlgebra& alg) {
  CompiledTerm c(t, alg);
  ElementSet out(alg.size());
  std::vector<Element> slots(c.vars.size(), 0);
  std::vector<Element> stack;
  while (true) {
    out.insert(c.run(alg, slots, stack));
    std::size_t i = 0;
    for (; i < slots.size(); ++i) {
      if (++slots[i] < alg.size()) break;
      slots[i] = 0;
    }
    if (i == slots.size()) break;
  }
  return out;
}

ImagePair image(const Term& t, const AlgebraPair& pair) {
  return {image(t, pair.first()), image(t, pair.second())};
}

bool is_generalization(const Term& t, Element a, const FiniteAlgebra& alg) {
  if (a >= alg.size()) throw InputError("element not in the universe");
  return image(t, alg).contains(a);
}

bool semantic_leq(const Term& s, const Term& t, const AlgebraPair& pair) {
  return image(s, pair).is_subset_of(image(t, pair));
}

bool semantic_equiv(const Term& s, const Term& t, const AlgebraPair& pair) {
  return image(s, pair) == image(t, pair);
}

bool is_injective_algebra(const FiniteAlgebra& alg) {
  for (const auto& op : alg.operations()) {
    if (op.arity == 0) continue;
    std::vector<bool> seen(alg.size(), false);
    // More rows than elements forces a collision.
    if (op.table.size() > alg.size()) return false;
    for (Element e : op.table) {
      if (seen[e]) return false;
      seen[e] = true;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

bool check_homomorphism(const ElementMap& h, const AlgebraPair& pair) {
  const FiniteAlgebra& a = pair.first();
  const FiniteAlgebra& b = pair.second();
  if (h.size() != a.size()) return false;
  for (Element e : h) {
    if (e >= b.size()) return false;
  }
  for (std::size_t oi = 0; oi < a.operations().size(); ++oi) {
    const Operation& op = a.operations()[oi];
    const std::size_t bi = *b.find_operation(op.name);
    std::vector<Element> args(op.arity, 0);
    std::vector<Element> mapped(op.arity);
    for (std::size_t row = 0; row < op.table.size(); ++row) {
      for (std::size_t i = 0; i < op.arity; ++i) mapped[i] = h[args[i]];
      if (h[op.table[row]] != b.apply(bi, mapped)) return false;
      for (std::size_t i = op.arity; i-- > 0;) {
        if (++args[i] < a.size()) break;
        args[i] = 0;
      }
    }
  }
  return true;
}

std::vector<ElementMap> enumerate_homomorphisms(const AlgebraPair& pair, bool iso_only,
                                                std::uint64_t budget) {
  const std::size_t n = pair.first().size();
  const std::size_t m = pair.second().size();
  std::vector<ElementMap> out;
  if (iso_only) {
    if (n != m) return out;
    std::uint64_t candidates = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      candidates *= i;
      if (candidates > budget) throw BudgetExceeded("homomorphism enumeration budget exceeded");
    }
    ElementMap h(n);
    std::iota(h.begin(), h.end(), Element{0});
    do {
      if (check_homomorphism(h, pair)) out.push_back(h);
    } while (std::next_permutation(h.begin(), h.end()));
    return out;
  }
  if (pair.second().tuple_count(n) > budget) {
    throw BudgetExceeded("homomorphism enumeration budget exceeded");
  }
  ElementMap h(n, 0);
  while (true) {
    if (check_homomorphism(h, pair)) out.push_back(h);
    std::size_t i = n;
    while (i-- > 0) {
      if (++h[i] < m) break;
      h[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

ElementSet map_set(const ElementMap& h, const ElementSet& s, std::size_t target_size) {
  ElementSet out(target_size);
  for (Element e : s.elements()) out.insert(h.at(e));
  return out;
}

}  // namespace agu
