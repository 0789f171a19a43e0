#pragma once

// Brute-force reference computations used by the tests. Everything here is
// deliberately naive: direct evaluation over all assignments, exhaustive
// term and word enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "agu/algebra.hpp"
#include "agu/term.hpp"

namespace oracle {

using agu::Element;
using agu::FiniteAlgebra;
using agu::Term;

inline const agu::Operation& op_named(const FiniteAlgebra& alg, const std::string& name) {
  for (const auto& op : alg.operations()) {
    if (op.name == name) return op;
  }
  throw std::logic_error("no operation " + name);
}

// Recursive evaluation straight from the tables.
inline Element evaluate(const Term& t, const FiniteAlgebra& alg, const std::vector<Element>& env) {
  if (t.is_var()) return env.at(t.var_index() - 1);
  const auto& op = op_named(alg, t.symbol());
  std::size_t row = 0;
  for (const auto& a : t.args()) row = row * alg.size() + evaluate(a, alg, env);
  return op.table.at(row);
}

// Image over all assignments of x1..xk, k = max(1, highest variable).
inline std::set<Element> brute_image(const Term& t, const FiniteAlgebra& alg, std::size_t k = 0) {
  k = std::max<std::size_t>({k, t.max_var(), 1});
  std::set<Element> out;
  std::vector<Element> env(k, 0);
  while (true) {
    out.insert(evaluate(t, alg, env));
    std::size_t i = 0;
    while (i < k && ++env[i] == alg.size()) env[i++] = 0;
    if (i == k) break;
  }
  return out;
}

// Value table over A^k, first variable most significant.
inline std::vector<Element> brute_table(const Term& t, const FiniteAlgebra& alg, std::size_t k) {
  std::vector<Element> out;
  std::vector<Element> env(k, 0);
  std::size_t rows = 1;
  for (std::size_t i = 0; i < k; ++i) rows *= alg.size();
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t rest = r;
    for (std::size_t i = k; i-- > 0;) {
      env[i] = static_cast<Element>(rest % alg.size());
      rest /= alg.size();
    }
    out.push_back(evaluate(t, alg, env));
  }
  return out;
}

using BruteImage = std::pair<std::set<Element>, std::set<Element>>;

inline bool covers(const BruteImage& big, const BruteImage& small) {
  return std::includes(big.first.begin(), big.first.end(), small.first.begin(), small.first.end()) &&
         std::includes(big.second.begin(), big.second.end(), small.second.begin(),
                       small.second.end());
}

// The ⊆-minimal members of a list of image pairs.
inline std::set<BruteImage> brute_minimal(const std::vector<BruteImage>& all) {
  std::set<BruteImage> out;
  for (const auto& p : all) {
    bool minimal = true;
    for (const auto& q : all) {
      if (q != p && covers(p, q)) minimal = false;
    }
    if (minimal) out.insert(p);
  }
  return out;
}

inline BruteImage to_brute(const agu::ImagePair& p) {
  auto f = p.first.elements();
  auto s = p.second.elements();
  return {{f.begin(), f.end()}, {s.begin(), s.end()}};
}

// Every term over the signature and x1..xk with size <= max_size.
inline std::vector<Term> all_terms(const agu::Signature& sig, std::size_t k, std::size_t max_size) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  std::vector<Term> out;
  if (max_size == 0) return out;
  for (std::size_t i = 1; i <= k; ++i) by_size[1].push_back(Term::var(static_cast<agu::VarIndex>(i)));
  for (const auto& s : sig.symbols()) {
    if (s.arity == 0) by_size[1].push_back(Term::app(s.name));
  }
  for (std::size_t size = 2; size <= max_size; ++size) {
    for (const auto& s : sig.symbols()) {
      if (s.arity == 0) continue;
      std::vector<Term> args;
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
        if (pos == s.arity) {
          if (left == 0) by_size[size].push_back(Term::app(s.name, args));
          return;
        }
        for (std::size_t part = 1; part + (s.arity - pos - 1) <= left; ++part) {
          for (const auto& t : by_size[part]) {
            args.push_back(t);
            rec(pos + 1, left - part);
            args.pop_back();
          }
        }
      };
      rec(0, size - 1);
    }
  }
  for (const auto& level : by_size) out.insert(out.end(), level.begin(), level.end());
  return out;
}

// All words of length <= max_len over n letters, shortlex.
inline std::vector<std::vector<std::uint32_t>> all_words(std::size_t letters, std::size_t max_len) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::uint32_t l = 0; l < letters; ++l) {
        auto w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

// Image of a word in a unary algebra: apply letters left to right to every element.
inline std::set<Element> word_image(const std::vector<std::uint32_t>& w, const FiniteAlgebra& alg) {
  std::set<Element> out;
  for (Element x = 0; x < alg.size(); ++x) {
    Element y = x;
    for (auto l : w) y = alg.operations()[l].table[y];
    out.insert(y);
  }
  return out;
}

inline std::vector<std::string> letter_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline FiniteAlgebra random_unary(std::mt19937_64& rng, std::size_t n, std::size_t symbols,
                                  const std::string& name = "R") {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<agu::Operation> ops;
  for (std::size_t s = 0; s < symbols; ++s) {
    agu::Operation op{std::string(1, static_cast<char>('f' + s)), 1, {}};
    for (std::size_t i = 0; i < n; ++i) op.table.push_back(pick(rng));
    ops.push_back(std::move(op));
  }
  return FiniteAlgebra(name, letter_names(n), std::move(ops));
}

// Random algebra with a binary symbol, a unary symbol and optionally a constant.
inline FiniteAlgebra random_general(std::mt19937_64& rng, std::size_t n, bool constant,
                                    const std::string& name = "G") {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  agu::Operation g{"g", 2, {}};
  for (std::size_t i = 0; i < n * n; ++i) g.table.push_back(pick(rng));
  agu::Operation h{"h", 1, {}};
  for (std::size_t i = 0; i < n; ++i) h.table.push_back(pick(rng));
  std::vector<agu::Operation> ops{g, h};
  if (constant) ops.push_back({"c", 0, {pick(rng)}});
  return FiniteAlgebra(name, letter_names(n), std::move(ops));
}

inline agu::ElementSet random_subset(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> mask(1, (1U << n) - 1);
  const auto m = mask(rng);
  agu::ElementSet s(n);
  for (Element e = 0; e < n; ++e) {
    if ((m >> e) & 1U) s.insert(e);
  }
  return s;
}

inline Term random_term(std::mt19937_64& rng, const agu::Signature& sig, std::size_t k,
                        std::size_t depth) {
  std::uniform_int_distribution<std::size_t> coin(0, 2);
  if (depth == 0 || coin(rng) == 0) {
    std::vector<Term> leaves;
    for (std::size_t i = 1; i <= k; ++i) leaves.push_back(Term::var(static_cast<agu::VarIndex>(i)));
    for (const auto& s : sig.symbols()) {
      if (s.arity == 0) leaves.push_back(Term::app(s.name));
    }
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
    return leaves[pick(rng)];
  }
  std::vector<const agu::Signature::Symbol*> inner;
  for (const auto& s : sig.symbols()) {
    if (s.arity > 0) inner.push_back(&s);
  }
  if (inner.empty()) return random_term(rng, sig, k, 0);
  std::uniform_int_distribution<std::size_t> pick(0, inner.size() - 1);
  const auto* s = inner[pick(rng)];
  std::vector<Term> args;
  for (std::size_t i = 0; i < s->arity; ++i) args.push_back(random_term(rng, sig, k, depth - 1));
  return Term::app(s->name, std::move(args));
}

// Every unary algebra on n elements whose tables are permutations.
inline std::vector<FiniteAlgebra> permutation_algebras(std::size_t n, std::size_t symbols) {
  std::vector<std::vector<Element>> perms;
  std::vector<Element> perm(n);
  for (Element i = 0; i < n; ++i) perm[i] = i;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<FiniteAlgebra> out;
  auto build = [&](const std::vector<std::size_t>& pick) {
    std::vector<agu::Operation> ops;
    for (std::size_t s = 0; s < pick.size(); ++s) {
      ops.push_back(agu::Operation{std::string(1, static_cast<char>('f' + s)), 1, perms[pick[s]]});
    }
    out.emplace_back("perm", letter_names(n), std::move(ops));
  };
  if (symbols == 1) {
    for (std::size_t i = 0; i < perms.size(); ++i) build({i});
  } else {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (std::size_t j = 0; j < perms.size(); ++j) build({i, j});
    }
  }
  return out;
}

}  // namespace oracle
