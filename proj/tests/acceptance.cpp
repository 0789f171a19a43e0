// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Random inputs use fixed seeds.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"

#include "agu/algebra_io.hpp"
#include "agu/clone.hpp"
#include "agu/monolinear.hpp"
#include "agu/setwise.hpp"
#include "agu/unary.hpp"

using namespace agu;

namespace {

const std::filesystem::path kFixtures = AGU_FIXTURES;

FiniteAlgebra fixture(const std::string& name) { return load_algebra(kFixtures / name); }

ElementSet single(std::size_t n, Element e) { return ElementSet::of(n, std::vector<Element>{e}); }

// Collects failures for one criterion; `expect` records a message when the
// condition does not hold.
struct Check {
  std::size_t failures = 0;
  std::size_t checks = 0;
  std::ostringstream first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first << what;
  }
};

struct Criterion {
  int id;
  std::string title;
  // Wall-clock limit in milliseconds; 0 means no timing requirement.
  double limit_ms;
  std::function<void(Check&)> body;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::set<oracle::BruteImage> brute_pairs(const std::vector<ImagePair>& pairs) {
  std::set<oracle::BruteImage> out;
  for (const auto& p : pairs) out.insert(oracle::to_brute(p));
  return out;
}

// Applies a bijection to every table of `alg`.
FiniteAlgebra conjugate(const FiniteAlgebra& alg, const std::vector<Element>& h, const std::string& name) {
  const std::size_t n = alg.size();
  std::vector<Operation> ops = alg.operations();
  for (auto& op : ops) {
    std::vector<Element> table(op.table.size());
    for (std::size_t row = 0; row < op.table.size(); ++row) {
      std::size_t rest = row;
      std::vector<Element> args(op.arity);
      for (std::size_t j = op.arity; j-- > 0;) {
        args[j] = static_cast<Element>(rest % n);
        rest /= n;
      }
      std::size_t target = 0;
      for (Element a : args) target = target * n + h[a];
      table[target] = h[op.table[row]];
    }
    op.table = std::move(table);
  }
  return FiniteAlgebra(name, alg.universe(), std::move(ops));
}

// ---------------------------------------------------------------------------

void bool_reproduction(Check& c) {
  const FiniteAlgebra b = fixture("bool.json");
  const AlgebraPair bb = AlgebraPair::same(b);
  auto g = std::make_shared<const CloneGraph>(generate_clone(bb, 2));
  const auto zero = k_generalizations(0, 0, g);
  const auto one = k_generalizations(1, 1, g);
  const auto mixed = k_generalizations(0, 1, g);
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 200; ++i) {
    const Term t = oracle::random_term(rng, b.signature(), 2, 4);
    const auto values = oracle::brute_image(t, b, 2);
    const bool sat = values.count(1) > 0;
    const bool falsifiable = values.count(0) > 0;
    const std::string s = to_string(t);
    c.expect(zero.contains(t) == !sat, "⇑0 membership of " + s);
    c.expect(one.contains(t) == !falsifiable, "⇑1 membership of " + s);
    c.expect(mixed.contains(t) == (sat && falsifiable), "0⇑1 membership of " + s);
  }
  const TreeLanguage up = common_gens_tree(single(2, 0), single(2, 1), g);
  c.expect(up.accepting == mixed.language.accepting, "0⇑1 differs from 0↑1");
}

void monounary_golden(Check& c) {
  const AlgebraPair loop = AlgebraPair::same(fixture("loop.json"));
  const auto l = minimal_gens(0, 0, loop);
  c.expect(is_universal(l.language), "loop: a⇑a is not Σ*");
  c.expect(summarize(l).language == "Σ*", "loop: language string is " + summarize(l).language);
  const auto loop_type = classify_type(loop);
  c.expect(loop_type.labels_terms == std::vector<std::string>{"infinitary", "trivial"},
           "loop: labels are not {infinitary, trivial}");

  const auto swap = minimal_gens(0, 1, AlgebraPair::same(fixture("swap.json")));
  c.expect(is_universal(swap.language), "swap: a⇑b is not Σ*");

  const AlgebraPair chain = AlgebraPair::same(fixture("chain.json"));
  const auto ch = minimal_gens(0, 1, chain);
  c.expect(equivalent(ch.language, Dfa::of_words({"S"}, {{}})), "chain: a⇑b is not {ε}");
  c.expect(summarize(ch).language == "{x1}", "chain: language string is " + summarize(ch).language);
  c.expect(pair_label(ch.words) == "unitary", "chain: a⇑b is not unitary");
  for (const auto& e : classify_type(chain).entries) {
    if (e.a == 0 && e.b == 1) c.expect(e.label_terms == "unitary", "chain: type entry (a,b) not unitary");
  }
}

void successor_closed_form(Check& c) {
  for (std::uint64_t a = 0; a <= 100; ++a) {
    for (std::uint64_t b = 0; b <= 100; ++b) {
      c.expect(nat_successor_mgg(a, b) == Word(std::min(a, b), 0),
               "S^min mismatch at " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  // Independent check: the chain 0 → 1 → … → 101 → 101 agrees with (ℕ,S)
  // on every element below its top.
  const std::size_t n = 102;
  std::vector<Element> table(n);
  for (Element i = 0; i < n; ++i) table[i] = std::min<Element>(i + 1, n - 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
  const FiniteAlgebra chain("chain102", names, {{"S", 1, table}});
  const AlgebraPair pair = AlgebraPair::same(chain);
  for (Element a = 0; a <= 100; a += 4) {
    for (Element b = 0; b <= 100; b += 5) {
      const auto r = minimal_gens(a, b, pair);
      const Dfa expected = Dfa::of_words({"S"}, {nat_successor_mgg(a, b)});
      c.expect(equivalent(r.language, expected),
               "truncated chain disagrees at " + std::to_string(a) + "," + std::to_string(b));
    }
  }
}

void powerset_monolinear(Check& c, std::size_t u) {
  const struct {
    SetOp op;
    const char* name;
  } kinds[] = {{SetOp::union_, "cup"}, {SetOp::intersection, "cap"}, {SetOp::complement, "comp"}};
  for (const auto& kind : kinds) {
    const FiniteAlgebra alg = powerset_algebra(u, {kind.op}, true);
    const AlgebraPair pair = AlgebraPair::same(alg);
    const std::size_t n = alg.size();
    auto constant_for = [&](Element mask) -> Term {
      for (const auto& op : alg.operations()) {
        if (op.arity == 0 && op.table[0] == mask) return Term::app(op.name);
      }
      throw std::logic_error("no constant");
    };
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        const auto r = monolinear_antiunify(a, b, pair);
        const auto got = brute_pairs(r.minimal_pairs);
        std::vector<Term> closed;
        if (a == b) {
          closed.push_back(constant_for(a));
        } else if (kind.op == SetOp::union_) {
          closed.push_back(Term::app("cup", {Term::var(1), constant_for(a & b)}));
        } else if (kind.op == SetOp::intersection) {
          closed.push_back(Term::app("cap", {Term::var(1), constant_for(a | b)}));
        } else {
          closed.push_back(Term::var(1));
          closed.push_back(Term::app("comp", {Term::var(1)}));
        }
        std::set<oracle::BruteImage> expected;
        for (const auto& t : closed) {
          const auto img = oracle::brute_image(t, alg, 1);
          expected.insert({img, img});
        }
        const std::string where = std::string(kind.name) + " |U|=" + std::to_string(u) + " (" +
                                  alg.universe()[a] + "," + alg.universe()[b] + ")";
        c.expect(got == expected, where + ": minimal pairs differ from the closed form");
        if (kind.op == SetOp::complement && a != b) {
          const Summary s = summarize(r, 2);
          c.expect(s.members.size() == 2 && s.members[0] == closed[0] && s.members[1] == closed[1],
                   where + ": x1 and comp(x1) are not the two smallest members");
        }
      }
    }
  }
}

void isomorphism_suite(Check& c) {
  std::mt19937_64 rng(1005);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + round % 4;
    const std::size_t syms = 1 + (round / 4) % 2;
    const FiniteAlgebra alg = oracle::random_unary(rng, n, syms, "A");
    std::vector<Element> perm(n);
    for (Element e = 0; e < n; ++e) perm[e] = e;
    std::shuffle(perm.begin(), perm.end(), rng);
    const FiniteAlgebra copy = conjugate(alg, perm, "B");
    const auto isos = enumerate_homomorphisms(AlgebraPair(alg, copy), true);
    c.expect(!isos.empty(), "round " + std::to_string(round) + ": no isomorphism found");
    const AlgebraPair aa = AlgebraPair::same(alg);
    const AlgebraPair bb = AlgebraPair::same(copy);
    for (const auto& h : isos) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          const auto left = minimal_gens(a, b, aa);
          const auto right = minimal_gens(h[a], h[b], bb);
          const std::string where =
              "round " + std::to_string(round) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
          c.expect(equivalent(left.language, right.language), where + ": languages differ under H");
          std::set<ImagePair> mapped;
          for (const auto& p : left.minimal_pairs) mapped.insert({map_set(h, p.first, n), map_set(h, p.second, n)});
          c.expect(mapped == std::set<ImagePair>(right.minimal_pairs.begin(), right.minimal_pairs.end()),
                   where + ": minimal pairs differ under H");
        }
      }
    }
  }
}

void homomorphism_suite(Check& c) {
  std::mt19937_64 rng(1006);
  std::size_t homs = 0;
  for (int round = 0; round < 300; ++round) {
    const std::size_t syms = 1 + round % 2;
    const FiniteAlgebra src = oracle::random_unary(rng, 1 + round % 3, syms, "A");
    const FiniteAlgebra dst = oracle::random_unary(rng, 1 + (round / 3) % 3, syms, "B");
    const AlgebraPair aa = AlgebraPair::same(src);
    const AlgebraPair bb = AlgebraPair::same(dst);
    for (const auto& h : enumerate_homomorphisms(AlgebraPair(src, dst), false)) {
      ++homs;
      for (Element a = 0; a < src.size(); ++a) {
        for (Element b = 0; b < src.size(); ++b) {
          c.expect(included(common_gens_dfa(a, b, aa), common_gens_dfa(h[a], h[b], bb)),
                   "round " + std::to_string(round) + ": a↑b not included in H(a)↑H(b)");
        }
      }
      for (int i = 0; i < 20; ++i) {
        const Term s = oracle::random_term(rng, src.signature(), 1, 5);
        std::set<Element> mapped;
        for (Element e : oracle::brute_image(s, src, 1)) mapped.insert(h[e]);
        const auto target = oracle::brute_image(s, dst, 1);
        c.expect(std::includes(target.begin(), target.end(), mapped.begin(), mapped.end()),
                 "H(image) ⊄ image for " + to_string(s));
      }
    }
  }
  c.expect(homs >= 100, "too few homomorphisms exercised: " + std::to_string(homs));
}

void injective_suite(Check& c) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t syms = 1; syms <= 2; ++syms) {
      for (const auto& alg : oracle::permutation_algebras(n, syms)) {
        const AlgebraPair pair = AlgebraPair::same(alg);
        for (Element a = 0; a < n; ++a) {
          for (Element b = 0; b < n; ++b) {
            const auto r = minimal_gens(a, b, pair);
            c.expect(!r.minimal_pairs.empty() && r.words.kind != Cardinality::Kind::empty,
                     "empty ⇑ in a permutation algebra");
          }
        }
      }
    }
  }
}

// Every word of length <= max_len realizing a minimal common image pair.
std::set<Word> brute_minimal_words(Element a, Element b, const AlgebraPair& pair, std::size_t search_len,
                                   std::size_t max_len) {
  const auto words = oracle::all_words(pair.signature().size(), search_len);
  std::vector<oracle::BruteImage> images;
  std::vector<oracle::BruteImage> common;
  for (const auto& w : words) {
    oracle::BruteImage img{oracle::word_image(w, pair.first()), oracle::word_image(w, pair.second())};
    images.push_back(img);
    if (img.first.count(a) && img.second.count(b)) common.push_back(img);
  }
  const auto minimal = oracle::brute_minimal(common);
  std::set<Word> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() <= max_len && minimal.count(images[i])) out.insert(words[i]);
  }
  return out;
}

void oracle_equivalence(Check& c) {
  std::mt19937_64 rng(1008);
  for (int round = 0; round < 50; ++round) {
    const std::size_t syms = 1 + round % 2;
    const AlgebraPair pair(oracle::random_unary(rng, 1 + round % 3, syms, "A"),
                           oracle::random_unary(rng, 1 + (round / 3) % 3, syms, "B"));
    for (Element a = 0; a < pair.first().size(); ++a) {
      for (Element b = 0; b < pair.second().size(); ++b) {
        const auto r = minimal_gens(a, b, pair);
        // The monoid of a pair of 3-element maps is reached by words of length
        // well under 10, so searching to 10 sees every image pair.
        const auto expected = brute_minimal_words(a, b, pair, 10, 6);
        for (const auto& w : oracle::all_words(syms, 6)) {
          c.expect(r.language.accepts(w) == (expected.count(w) > 0),
                   "unary round " + std::to_string(round) + ": word membership differs");
        }
      }
    }
  }

  // General algebras. Minimal witnesses may exceed size 5; the clone
  // restricted to witnesses of size <= 5 must match the size-5 enumeration
  // exactly, and the full answer must match whenever every witness has
  // size <= 8 (the enumeration is then complete).
  for (int round = 0; round < 20; ++round) {
    const FiniteAlgebra alg = oracle::random_general(rng, 1 + round % 2, round % 3 != 0, "A");
    const AlgebraPair pair = AlgebraPair::same(alg);
    for (std::size_t k = 1; k <= 2; ++k) {
      auto graph = std::make_shared<const CloneGraph>(generate_clone(pair, k));
      std::size_t deepest = 0;
      for (FunctionId f = 0; f < graph->size(); ++f) deepest = std::max(deepest, graph->witness(f).size());
      const std::size_t bound = deepest <= 8 ? std::max<std::size_t>(deepest, 5) : 5;
      const auto terms = oracle::all_terms(pair.signature(), k, bound);
      const std::string where = "general round " + std::to_string(round) + " k=" + std::to_string(k);

      std::set<std::vector<Element>> enumerated;
      for (const auto& t : terms) {
        if (t.size() <= 5) enumerated.insert(oracle::brute_table(t, alg, k));
      }
      std::set<std::vector<Element>> small;
      for (FunctionId f = 0; f < graph->size(); ++f) {
        if (graph->witness(f).size() <= 5) {
          const auto t = graph->first_table(f);
          small.insert({t.begin(), t.end()});
        }
      }
      c.expect(enumerated == small, where + ": term functions of size <= 5 differ");

      for (Element a = 0; a < alg.size(); ++a) {
        for (Element b = 0; b < alg.size(); ++b) {
          std::vector<oracle::BruteImage> common;
          std::vector<oracle::BruteImage> common_small;
          for (const auto& t : terms) {
            const auto img = oracle::brute_image(t, alg, k);
            if (!img.count(a) || !img.count(b)) continue;
            common.push_back({img, img});
            if (t.size() <= 5) common_small.push_back({img, img});
          }
          std::vector<ImagePair> truncated;
          for (FunctionId f = 0; f < graph->size(); ++f) {
            const auto& img = graph->image(f);
            if (graph->witness(f).size() <= 5 && img.first.contains(a) && img.second.contains(b)) {
              truncated.push_back(img);
            }
          }
          c.expect(brute_pairs(minimal_pairs(truncated)) == oracle::brute_minimal(common_small),
                   where + ": size-5 minimal pairs differ");
          if (bound == std::max<std::size_t>(deepest, 5)) {
            const auto r = k_generalizations(a, b, graph);
            c.expect(brute_pairs(r.minimal_pairs) == oracle::brute_minimal(common),
                     where + ": minimal pairs differ from complete enumeration");
          }
        }
      }
    }
  }
}

void lgg_suite(Check& c) {
  Signature sig;
  sig.add("f", 2);
  sig.add("a", 0);
  sig.add("b", 0);
  const auto inputs = oracle::all_terms(sig, 2, 4);
  // Candidate generalizations: a generalization is never larger than its
  // instances, and four variables cover every disagreement pattern.
  const auto candidates = oracle::all_terms(sig, 4, 4);
  for (const auto& s : inputs) {
    for (const auto& t : inputs) {
      std::vector<Term> common;
      for (const auto& g : candidates) {
        if (is_instance_of(s, g) && is_instance_of(t, g)) common.push_back(g);
      }
      std::vector<Term> least;
      for (const auto& g : common) {
        if (std::all_of(common.begin(), common.end(), [&](const Term& h) { return is_instance_of(g, h); })) {
          least.push_back(g);
        }
      }
      const Term got = syntactic_lgg(s, t);
      const std::string where = to_string(s) + " / " + to_string(t);
      c.expect(!least.empty() && alpha_equivalent(got, least.front()), where + ": lgg differs from search");
      c.expect(is_instance_of(s, got) && is_instance_of(t, got), where + ": inputs do not match the lgg");
    }
  }
}

void characteristic_suite(Check& c) {
  const FiniteAlgebra ps = fixture("powerset2.json");
  const Element full = ps.element("{1,2}");
  const Term cup = parse_term("cup(x1,comp(x1))", ps.signature());
  c.expect(is_characteristic_set({cup}, full, ps, 1), "cup(x1,comp(x1)) is not characteristic for U");
  c.expect(characteristic_gens(full, ps, 1).contains(cup), "cup(x1,comp(x1)) not in ⇑U");
  c.expect(oracle::brute_image(cup, ps, 1) == std::set<Element>{full}, "image of cup(x1,comp(x1)) is not {U}");

  const FiniteAlgebra z3 = fixture("z3.json");
  const Term add = parse_term("add(x1,neg(x1))", z3.signature());
  c.expect(is_characteristic_set({add}, 0, z3, 1), "add(x1,neg(x1)) is not characteristic for 0");
  c.expect(oracle::brute_image(add, z3, 1) == std::set<Element>{0}, "image of add(x1,neg(x1)) is not {0}");
}

void setwise_suite(Check& c) {
  std::mt19937_64 rng(1011);
  for (int round = 0; round < 50; ++round) {
    const std::size_t syms = 1 + round % 2;
    const AlgebraPair pair(oracle::random_unary(rng, 1 + round % 3, syms, "A"),
                           oracle::random_unary(rng, 1 + (round / 3) % 3, syms, "B"));
    const ElementSet cs = oracle::random_subset(rng, pair.first().size());
    const ElementSet ds = oracle::random_subset(rng, pair.second().size());
    const Dfa joint = common_gens_dfa_for_sets(cs, ds, pair);
    Dfa pairwise = Dfa::universal(unary_alphabet(pair.signature()));
    for (Element a : cs.elements()) {
      for (Element b : ds.elements()) pairwise = intersect(pairwise, common_gens_dfa(a, b, pair));
    }
    c.expect(equivalent(joint, pairwise), "round " + std::to_string(round) + ": C↑D differs from the intersection");
  }
}

void type_suite(Check& c) {
  const FiniteAlgebra bare("bare", {"a", "b"}, {});
  const TypeReport empty = classify_type(AlgebraPair::same(bare));
  c.expect(empty.labels_terms == std::vector<std::string>{"unitary", "trivial"},
           "empty signature is not {unitary, trivial}");
  for (const char* name : {"loop.json", "swap.json", "chain.json"}) {
    const AlgebraPair pair = AlgebraPair::same(fixture(name));
    const TypeReport report = classify_type(pair);
    std::vector<Cardinality> sizes;
    std::vector<bool> trivial;
    for (const auto& e : report.entries) {
      const Dfa lang = minimal_gens(e.a, e.b, pair).language;
      const Cardinality size = cardinality(lang);
      c.expect(pair_label(size) == e.label_terms,
               std::string(name) + ": label " + e.label_terms + " disagrees with the automaton");
      sizes.push_back(size);
      trivial.push_back(e.trivial);
    }
    c.expect(aggregate_labels(sizes, trivial) == report.labels_terms,
             std::string(name) + ": aggregate labels disagree with the automata");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "BOOL reproduction (k=2, 200 formulas)", 1000, bool_reproduction},
      {2, "monounary golden tests", 100, monounary_golden},
      {3, "successor closed form", 0, successor_closed_form},
      {4, "powerset monolinear closed forms, |U| = 1..3", 0,
       [](Check& c) {
         powerset_monolinear(c, 1);
         powerset_monolinear(c, 2);
         const auto start = Clock::now();
         powerset_monolinear(c, 3);
         const double elapsed = ms_since(start);
         c.expect(elapsed < 5000, "|U| = 3 took " + std::to_string(elapsed) + " ms");
       }},
      {5, "isomorphism invariance (100 unary algebras)", 0, isomorphism_suite},
      {6, "homomorphism inclusions", 0, homomorphism_suite},
      {7, "permutation algebras are never nullary", 0, injective_suite},
      {8, "oracle equivalence (unary and general)", 0, oracle_equivalence},
      {9, "syntactic lgg vs exhaustive search", 0, lgg_suite},
      {10, "characteristic generalizations", 0, characteristic_suite},
      {11, "set-wise up-set equals pairwise intersection", 0, setwise_suite},
      {12, "type classifier consistency", 0, type_suite},
  };

  bool all_ok = true;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = Clock::now();
    std::string error;
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed = ms_since(start);
    std::string reason;
    if (!error.empty()) {
      reason = "exception: " + error;
    } else if (check.failures > 0) {
      reason = std::to_string(check.failures) + " failure(s), first: " + check.first.str();
    } else if (crit.limit_ms > 0 && elapsed >= crit.limit_ms) {
      reason = "took longer than " + std::to_string(static_cast<int>(crit.limit_ms)) + " ms";
    }
    const bool ok = reason.empty();
    all_ok = all_ok && ok;
    std::printf("%s %2d  %-50s %6zu checks  %9.1f ms%s%s\n", ok ? "PASS" : "FAIL", crit.id,
                crit.title.c_str(), check.checks, elapsed, ok ? "" : "  ", reason.c_str());
  }
  return all_ok ? 0 : 1;
}
