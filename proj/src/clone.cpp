#include "agu/clone.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace agu {

CloneGraph::CloneGraph(const AlgebraPair& pair, std::size_t k)
    : pair_(pair),
      k_(k),
      rows_first_(static_cast<std::size_t>(pair.first().tuple_count(k))),
      rows_second_(static_cast<std::size_t>(pair.second().tuple_count(k))) {}

std::span<const Element> CloneGraph::first_table(FunctionId f) const {
  return {tables_.data() + f * (rows_first_ + rows_second_), rows_first_};
}

std::span<const Element> CloneGraph::second_table(FunctionId f) const {
  return {tables_.data() + f * (rows_first_ + rows_second_) + rows_first_, rows_second_};
}

std::optional<FunctionId> CloneGraph::find(std::span<const Element> table) const {
  auto it = index_.find(std::vector<Element>(table.begin(), table.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Values of every row of A^k for one term.
void term_rows(const Term& t, const FiniteAlgebra& alg, std::size_t k,
               std::vector<Element>& out) {
  const std::uint64_t rows = alg.tuple_count(k);
  Assignment assignment;
  for (std::uint64_t r = 0; r < rows; ++r) {
    std::uint64_t rest = r;
    for (std::size_t i = k; i >= 1; --i) {
      assignment[static_cast<VarIndex>(i)] = static_cast<Element>(rest % alg.size());
      rest /= alg.size();
    }
    out.push_back(eval(t, alg, assignment));
  }
}

}  // namespace

std::vector<Element> CloneGraph::table_of(const Term& t) const {
  if (t.max_var() > k_) {
    throw InputError("term '" + to_string(t) + "' uses variables beyond x" + std::to_string(k_));
  }
  check_term(t, pair_.signature());
  std::vector<Element> table;
  table.reserve(rows_first_ + rows_second_);
  term_rows(t, pair_.first(), k_, table);
  term_rows(t, pair_.second(), k_, table);
  return table;
}

std::optional<FunctionId> CloneGraph::function_of(const Term& t) const {
  return find(table_of(t));
}

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

CloneGraph generate_clone(const AlgebraPair& pair, std::size_t k, std::uint64_t budget) {
  const FiniteAlgebra& alg_a = pair.first();
  const FiniteAlgebra& alg_b = pair.second();
  if (alg_a.tuple_count(k) > budget || alg_b.tuple_count(k) > budget) {
    throw BudgetExceeded("term-function tables of arity " + std::to_string(k) +
                         " exceed the budget");
  }
  CloneGraph g(pair, k);
  const std::size_t rows_a = g.rows_first_;
  const std::size_t rows_b = g.rows_second_;
  const std::size_t width = rows_a + rows_b;
  const Signature& sig = pair.signature();

  struct Candidate {
    std::size_t size;
    std::string printed;
    FunctionId id;
    bool operator>(const Candidate& o) const {
      return std::tie(size, printed, id) > std::tie(o.size, o.printed, o.id);
    }
  };
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> queue;
  std::vector<std::size_t> best_size;
  std::vector<std::string> best_printed;
  std::vector<bool> settled;

  auto discover = [&](const std::vector<Element>& table, std::size_t size,
                      auto&& printed_fn, auto&& term_fn) -> FunctionId {
    auto it = g.index_.find(table);
    if (it != g.index_.end()) {
      const FunctionId id = it->second;
      if (settled[id] || size > best_size[id]) return id;
      std::string printed = printed_fn();
      if (size == best_size[id] && printed >= best_printed[id]) return id;
      best_size[id] = size;
      best_printed[id] = printed;
      g.witnesses_[id] = term_fn();
      queue.push({size, std::move(printed), id});
      return id;
    }
    if (g.images_.size() >= budget) {
      throw BudgetExceeded("clone generation exceeds the budget of " + std::to_string(budget) +
                           " functions (" + std::to_string(queue.size()) +
                           " functions still on the frontier)");
    }
    const auto id = static_cast<FunctionId>(g.images_.size());
    g.index_.emplace(table, id);
    g.tables_.insert(g.tables_.end(), table.begin(), table.end());
    ImagePair img{ElementSet(alg_a.size()), ElementSet(alg_b.size())};
    for (std::size_t r = 0; r < rows_a; ++r) img.first.insert(table[r]);
    for (std::size_t r = 0; r < rows_b; ++r) img.second.insert(table[rows_a + r]);
    g.images_.push_back(std::move(img));
    g.witnesses_.push_back(term_fn());
    best_size.push_back(size);
    best_printed.push_back(printed_fn());
    settled.push_back(false);
    queue.push({size, best_printed.back(), id});
    return id;
  };

  auto add_transition = [&](std::uint32_t symbol, std::span<const FunctionId> args,
                            FunctionId result) {
    if (g.transitions_.size() >= budget) {
      throw BudgetExceeded("clone generation exceeds the budget of " + std::to_string(budget) +
                           " transitions");
    }
    g.transitions_.push_back({symbol, static_cast<std::uint32_t>(g.arg_pool_.size()),
                              static_cast<std::uint32_t>(args.size()), result});
    g.arg_pool_.insert(g.arg_pool_.end(), args.begin(), args.end());
  };

  std::vector<Element> table(width);

  // Projections.
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t part = 0; part < 2; ++part) {
      const FiniteAlgebra& alg = part == 0 ? alg_a : alg_b;
      const std::size_t rows = part == 0 ? rows_a : rows_b;
      const std::size_t offset = part == 0 ? 0 : rows_a;
      const std::uint64_t stride = alg.tuple_count(k - i);
      for (std::size_t r = 0; r < rows; ++r) {
        table[offset + r] = static_cast<Element>((r / stride) % alg.size());
      }
    }
    Term x = Term::var(static_cast<VarIndex>(i));
    g.projections_.push_back(
        discover(table, 1, [&] { return to_string(x); }, [&] { return x; }));
  }

  // Constants.
  for (std::uint32_t s = 0; s < sig.size(); ++s) {
    const auto& sym = sig.symbols()[s];
    if (sym.arity != 0) continue;
    const Element va = alg_a.operations()[*alg_a.find_operation(sym.name)].table[0];
    const Element vb = alg_b.operations()[*alg_b.find_operation(sym.name)].table[0];
    std::fill(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(rows_a), va);
    std::fill(table.begin() + static_cast<std::ptrdiff_t>(rows_a), table.end(), vb);
    Term c = Term::app(sym.name);
    auto id = discover(table, 1, [&] { return sym.name; }, [&] { return c; });
    add_transition(s, {}, id);
  }

  struct OpRef {
    std::uint32_t symbol;
    std::size_t arity;
    std::size_t op_a;
    std::size_t op_b;
  };
  std::vector<OpRef> ops;
  for (std::uint32_t s = 0; s < sig.size(); ++s) {
    const auto& sym = sig.symbols()[s];
    if (sym.arity == 0) continue;
    ops.push_back({s, sym.arity, *alg_a.find_operation(sym.name), *alg_b.find_operation(sym.name)});
  }

  std::vector<FunctionId> tuple;
  std::vector<Element> argv;
  while (!queue.empty()) {
    Candidate c = queue.top();
    queue.pop();
    if (settled[c.id] || c.size != best_size[c.id] || c.printed != best_printed[c.id]) continue;
    settled[c.id] = true;
    g.order_.push_back(c.id);
    const std::size_t n = g.order_.size();

    for (const auto& op : ops) {
      const std::string& name = sig.symbols()[op.symbol].name;
      // Every tuple over settled functions containing the new one, indexed
      // by the first position holding it.
      std::vector<std::size_t> pos(op.arity);
      for (std::size_t first_new = 0; first_new < op.arity; ++first_new) {
        std::vector<std::size_t> bound(op.arity);
        for (std::size_t j = 0; j < op.arity; ++j) {
          bound[j] = j < first_new ? n - 1 : (j == first_new ? 1 : n);
        }
        if (std::any_of(bound.begin(), bound.end(), [](std::size_t b) { return b == 0; })) {
          continue;
        }
        std::fill(pos.begin(), pos.end(), 0);
        while (true) {
          tuple.clear();
          std::size_t size = 1;
          for (std::size_t j = 0; j < op.arity; ++j) {
            const FunctionId f = j == first_new ? c.id : g.order_[pos[j]];
            tuple.push_back(f);
            size += best_size[f];
          }
          argv.resize(op.arity);
          for (std::size_t r = 0; r < rows_a; ++r) {
            for (std::size_t j = 0; j < op.arity; ++j) argv[j] = g.tables_[tuple[j] * width + r];
            table[r] = alg_a.apply(op.op_a, argv);
          }
          for (std::size_t r = 0; r < rows_b; ++r) {
            for (std::size_t j = 0; j < op.arity; ++j) {
              argv[j] = g.tables_[tuple[j] * width + rows_a + r];
            }
            table[rows_a + r] = alg_b.apply(op.op_b, argv);
          }
          auto printed = [&] {
            std::string s = name + "(";
            for (std::size_t j = 0; j < tuple.size(); ++j) {
              if (j) s += ",";
              s += best_printed[tuple[j]];
            }
            return s + ")";
          };
          auto term = [&] {
            std::vector<Term> args;
            for (FunctionId f : tuple) args.push_back(g.witnesses_[f]);
            return Term::app(name, std::move(args));
          };
          const FunctionId result = discover(table, size, printed, term);
          add_transition(op.symbol, tuple, result);

          std::size_t j = op.arity;
          while (j-- > 0) {
            if (j == first_new) continue;
            if (++pos[j] < bound[j]) break;
            pos[j] = 0;
          }
          if (j == static_cast<std::size_t>(-1)) break;
        }
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Tree languages
// ---------------------------------------------------------------------------

bool TreeLanguage::contains(const Term& t) const {
  auto f = graph->function_of(t);
  return f && accepting[*f];
}

bool TreeLanguage::is_universal() const {
  return std::all_of(accepting.begin(), accepting.end(), [](bool b) { return b; });
}

std::size_t TreeLanguage::accepting_count() const {
  return static_cast<std::size_t>(std::count(accepting.begin(), accepting.end(), true));
}

Cardinality TreeLanguage::cardinality() const {
  const CloneGraph& g = *graph;
  const std::size_t n = g.size();
  const auto& ts = g.transitions();

  std::vector<std::vector<std::size_t>> into(n);
  for (std::size_t i = 0; i < ts.size(); ++i) into[ts[i].result].push_back(i);

  // Useful states: some context carries them to an accepting state.
  std::vector<bool> useful(n, false);
  std::vector<FunctionId> work;
  for (FunctionId f = 0; f < n; ++f) {
    if (accepting[f]) {
      useful[f] = true;
      work.push_back(f);
    }
  }
  if (work.empty()) return Cardinality::of_count(0);
  while (!work.empty()) {
    FunctionId f = work.back();
    work.pop_back();
    for (auto ti : into[f]) {
      for (FunctionId a : g.args(ts[ti])) {
        if (!useful[a]) {
          useful[a] = true;
          work.push_back(a);
        }
      }
    }
  }

  // Leaves: projections and constants.
  std::vector<std::uint64_t> leaves(n, 0);
  for (FunctionId p : g.projections()) ++leaves[p];

  // Post-order DFS over "argument of" edges restricted to useful states;
  // a grey hit is a pumpable cycle.
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(n, kWhite);
  std::vector<std::uint64_t> count(n, 0);
  for (FunctionId root = 0; root < n; ++root) {
    if (!useful[root] || colour[root] != kWhite) continue;
    // Stack of (state, next incoming transition index, next arg index).
    struct Frame {
      FunctionId f;
      std::size_t t;
      std::size_t a;
    };
    std::vector<Frame> stack{{root, 0, 0}};
    colour[root] = kGrey;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.t < into[fr.f].size()) {
        auto args = g.args(ts[into[fr.f][fr.t]]);
        if (fr.a < args.size()) {
          FunctionId a = args[fr.a++];
          if (colour[a] == kGrey) return Cardinality::infinite();
          if (colour[a] == kWhite) {
            colour[a] = kGrey;
            stack.push_back({a, 0, 0});
          }
        } else {
          ++fr.t;
          fr.a = 0;
        }
        continue;
      }
      std::uint64_t c = leaves[fr.f];
      for (auto ti : into[fr.f]) {
        std::uint64_t prod = 1;
        for (FunctionId a : g.args(ts[ti])) prod = saturating_mul(prod, count[a]);
        c = saturating_add(c, prod);
      }
      count[fr.f] = c;
      colour[fr.f] = kBlack;
      stack.pop_back();
    }
  }
  std::uint64_t total = 0;
  for (FunctionId f = 0; f < n; ++f) {
    if (accepting[f]) total = saturating_add(total, count[f]);
  }
  return Cardinality::of_count(total);
}

TreeLanguage common_gens_tree(const ElementSet& c, const ElementSet& d,
                              std::shared_ptr<const CloneGraph> graph) {
  if (c.empty() || d.empty()) throw InputError("element sets must be non-empty");
  TreeLanguage lang{std::move(graph), {}};
  for (FunctionId f = 0; f < lang.graph->size(); ++f) {
    const auto& img = lang.graph->image(f);
    lang.accepting.push_back(c.is_subset_of(img.first) && d.is_subset_of(img.second));
  }
  return lang;
}

TreeReport k_generalizations_for_sets(const ElementSet& c, const ElementSet& d,
                                      std::shared_ptr<const CloneGraph> graph) {
  if (c.universe_size() != graph->pair().first().size() ||
      d.universe_size() != graph->pair().second().size()) {
    throw InputError("element set does not belong to the algebra");
  }
  TreeLanguage common = common_gens_tree(c, d, graph);
  const CloneGraph& g = *graph;
  std::vector<ImagePair> candidates;
  for (FunctionId f = 0; f < g.size(); ++f) {
    if (common.accepting[f]) candidates.push_back(g.image(f));
  }

  TreeReport report;
  report.minimal_pairs = minimal_pairs(std::move(candidates));
  report.witnesses.assign(report.minimal_pairs.size(), Term::var(1));
  std::vector<bool> witnessed(report.minimal_pairs.size(), false);
  report.language.graph = graph;
  report.language.accepting.assign(g.size(), false);
  for (FunctionId f : g.order()) {
    const auto& img = g.image(f);
    auto it = std::lower_bound(report.minimal_pairs.begin(), report.minimal_pairs.end(), img);
    if (it == report.minimal_pairs.end() || *it != img) continue;
    report.language.accepting[f] = true;
    const auto i = static_cast<std::size_t>(it - report.minimal_pairs.begin());
    if (!witnessed[i]) {
      witnessed[i] = true;
      report.witnesses[i] = g.witness(f);
    }
  }
  report.functions = report.language.accepting_count();
  report.classes = report.minimal_pairs.size();
  report.terms = report.language.cardinality();
  report.trivial = report.language.is_universal();
  return report;
}

namespace {

ElementSet singleton(std::size_t n, Element e) {
  if (e >= n) throw InputError("element not in the universe");
  return ElementSet::of(n, std::vector<Element>{e});
}

}  // namespace

TreeReport k_generalizations(Element a, Element b, std::shared_ptr<const CloneGraph> graph) {
  const std::size_t na = graph->pair().first().size();
  const std::size_t nb = graph->pair().second().size();
  return k_generalizations_for_sets(singleton(na, a), singleton(nb, b), std::move(graph));
}

TreeReport k_generalizations(Element a, Element b, const AlgebraPair& pair, std::size_t k,
                             std::uint64_t budget) {
  if (k == 0) throw InputError("k must be at least 1");
  return k_generalizations(a, b, std::make_shared<const CloneGraph>(generate_clone(pair, k, budget)));
}

TreeReport characteristic_gens(Element a, const FiniteAlgebra& alg, std::size_t k,
                               std::uint64_t budget) {
  return k_generalizations(a, a, AlgebraPair::same(alg), k, budget);
}

bool is_characteristic_set(const std::vector<Term>& terms, Element a, const FiniteAlgebra& alg,
                           std::size_t k, std::uint64_t budget) {
  if (k == 0) throw InputError("k must be at least 1");
  if (a >= alg.size()) throw InputError("element not in the universe");
  for (const auto& t : terms) {
    if (t.max_var() > k) {
      throw InputError("term '" + to_string(t) + "' uses variables beyond x" + std::to_string(k));
    }
  }
  auto graph = std::make_shared<const CloneGraph>(generate_clone(AlgebraPair::same(alg), k, budget));
  std::vector<FunctionId> fs;
  for (const auto& t : terms) {
    auto f = graph->function_of(t);
    if (!f) return false;  // unreachable: every term's function is in the clone
    fs.push_back(*f);
  }
  auto own = k_generalizations(a, a, graph);
  for (FunctionId f : fs) {
    if (!own.language.accepting[f]) return false;
  }
  for (Element b = 0; b < alg.size(); ++b) {
    if (b == a) continue;
    auto other = k_generalizations(b, b, graph);
    bool separated = std::any_of(fs.begin(), fs.end(),
                                 [&](FunctionId f) { return !other.language.accepting[f]; });
    if (!separated) return false;
  }
  return true;
}

TypeReport classify_type_clone(const AlgebraPair& pair, std::size_t k, std::uint64_t budget) {
  if (k == 0) throw InputError("k must be at least 1");
  auto graph = std::make_shared<const CloneGraph>(generate_clone(pair, k, budget));
  TypeReport report;
  for (Element a = 0; a < pair.first().size(); ++a) {
    for (Element b = 0; b < pair.second().size(); ++b) {
      auto r = k_generalizations(a, b, graph);
      TypeReport::Entry e;
      e.a = a;
      e.b = b;
      e.terms = r.terms;
      e.classes = r.terms.kind == Cardinality::Kind::empty ? 0 : r.classes;
      e.trivial = r.trivial;
      report.entries.push_back(e);
    }
  }
  finish_type_report(report);
  return report;
}

std::vector<Term> accepted_terms(const TreeLanguage& lang, std::size_t max_size,
                                 std::size_t limit) {
  constexpr std::size_t kMaxGenerated = 200'000;
  const CloneGraph& g = *lang.graph;
  const Signature& sig = g.pair().signature();
  std::vector<std::vector<std::pair<Term, FunctionId>>> by_size(max_size + 1);
  std::vector<Term> out;
  std::size_t generated = 0;
  auto emit = [&](std::size_t size, Term t, FunctionId f) {
    if (lang.accepting[f] && out.size() < limit) out.push_back(t);
    by_size[size].emplace_back(std::move(t), f);
    ++generated;
  };
  if (max_size >= 1) {
    for (std::size_t i = 0; i < g.projections().size(); ++i) {
      emit(1, Term::var(static_cast<VarIndex>(i + 1)), g.projections()[i]);
    }
    for (const auto& sym : sig.symbols()) {
      if (sym.arity == 0) {
        Term c = Term::app(sym.name);
        emit(1, c, *g.function_of(c));
      }
    }
  }
  for (std::size_t size = 2; size <= max_size && out.size() < limit; ++size) {
    for (const auto& sym : sig.symbols()) {
      if (sym.arity == 0 || sym.arity > size - 1) continue;
      // Compositions of size-1 into arity positive parts.
      std::vector<std::size_t> parts(sym.arity, 1);
      parts.back() = size - sym.arity;
      while (true) {
        std::vector<std::size_t> pick(sym.arity, 0);
        bool feasible = true;
        for (std::size_t j = 0; j < sym.arity; ++j) feasible = feasible && !by_size[parts[j]].empty();
        while (feasible) {
          std::vector<Term> args;
          for (std::size_t j = 0; j < sym.arity; ++j) args.push_back(by_size[parts[j]][pick[j]].first);
          Term t = Term::app(sym.name, std::move(args));
          auto f = g.function_of(t);
          emit(size, std::move(t), *f);
          if (generated >= kMaxGenerated || out.size() >= limit) return out;
          std::size_t j = sym.arity;
          while (j-- > 0) {
            if (++pick[j] < by_size[parts[j]].size()) break;
            pick[j] = 0;
          }
          if (j == static_cast<std::size_t>(-1)) break;
        }
        // Next composition.
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
  return out;
}

Summary summarize(const TreeReport& r, std::size_t max_members) {
  constexpr std::size_t kListLimit = 8;
  Summary s;
  s.engine = "clone k=" + std::to_string(r.language.graph->arity());
  s.minimal_pairs = r.minimal_pairs;
  s.witnesses = r.witnesses;
  s.terms = r.terms;
  s.classes = r.classes;
  s.functions = r.functions;
  s.trivial = r.trivial;
  s.notes.push_back("generalizations range over terms in x1..x" +
                    std::to_string(r.language.graph->arity()));
  if (max_members > 0) s.members = accepted_terms(r.language, 12, max_members);
  if (r.trivial) {
    s.language = "T(L, X" + std::to_string(r.language.graph->arity()) + ")";
  } else if (r.terms.kind == Cardinality::Kind::empty) {
    s.language = "∅";
  } else if (r.terms.is_finite() && r.terms.count <= kListLimit) {
    s.language = "{";
    auto all = accepted_terms(r.language, 64, kListLimit);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i) s.language += ", ";
      s.language += to_string(all[i]);
    }
    s.language += "}";
  } else {
    s.language = "regular tree language, " + std::to_string(r.functions) +
                 " accepting state(s) of " + std::to_string(r.language.graph->size());
  }
  return s;
}

std::string to_dot(const TreeLanguage& lang, const std::string& name) {
  const CloneGraph& g = *lang.graph;
  const auto& pair = g.pair();
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  auto escape = [](const std::string& s) {
    std::string e;
    for (char c : s) {
      if (c == '"' || c == '\\') e += '\\';
      e += c;
    }
    return e;
  };
  for (FunctionId f : g.order()) {
    out << "  f" << f << " [shape=" << (lang.accepting[f] ? "doublecircle" : "circle")
        << ", label=\"" << escape(to_string(g.witness(f)) + "\n" + format_pair(g.image(f), pair))
        << "\"];\n";
  }
  // One edge per (argument, result, symbol), deduplicated.
  std::set<std::tuple<FunctionId, FunctionId, std::uint32_t>> edges;
  for (const auto& t : g.transitions()) {
    for (FunctionId a : g.args(t)) edges.insert({a, t.result, t.symbol});
  }
  for (const auto& [a, r, s] : edges) {
    out << "  f" << a << " -> f" << r << " [label=\"" << pair.signature().symbols()[s].name
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

FiniteAlgebra powerset_algebra(std::size_t universe_size, const std::vector<SetOp>& ops,
                               bool all_distinguished) {
  if (universe_size > 4) throw InputError("powerset fixtures support |U| <= 4");
  const std::size_t n = std::size_t{1} << universe_size;
  auto element_name = [&](std::size_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < universe_size; ++i) {
      if ((mask >> i) & 1U) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(i + 1);
      }
    }
    return s + "}";
  };
  std::vector<std::string> universe;
  for (std::size_t m = 0; m < n; ++m) universe.push_back(element_name(m));

  std::vector<Operation> operations;
  for (SetOp op : ops) {
    Operation o;
    if (op == SetOp::complement) {
      o.name = "comp";
      o.arity = 1;
      for (std::size_t m = 0; m < n; ++m) o.table.push_back(static_cast<Element>((n - 1) & ~m));
    } else {
      o.name = op == SetOp::union_ ? "cup" : "cap";
      o.arity = 2;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          o.table.push_back(static_cast<Element>(op == SetOp::union_ ? (x | y) : (x & y)));
        }
      }
    }
    operations.push_back(std::move(o));
  }
  if (all_distinguished) {
    for (std::size_t m = 0; m < n; ++m) {
      Operation c;
      if (m == 0) {
        c.name = "empty";
      } else {
        c.name = "s";
        for (std::size_t i = 0; i < universe_size; ++i) {
          if ((m >> i) & 1U) c.name += std::to_string(i + 1);
        }
      }
      c.arity = 0;
      c.table.push_back(static_cast<Element>(m));
      operations.push_back(std::move(c));
    }
  }
  std::string name = "powerset" + std::to_string(universe_size);
  return FiniteAlgebra(std::move(name), std::move(universe), std::move(operations));
}

}  // namespace agu
