#include "agu/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "agu/errors.hpp"

namespace agu {

Dfa::Dfa(std::vector<std::string> alphabet, std::size_t num_states, std::vector<State> delta,
         State start, std::vector<bool> finals, std::vector<std::string> labels)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      delta_(std::move(delta)),
      start_(start),
      finals_(std::move(finals)),
      labels_(std::move(labels)) {
  if (num_states_ == 0) throw InputError("a DFA needs at least one state");
  if (delta_.size() != num_states_ * alphabet_.size()) {
    throw InputError("DFA transition table is not total");
  }
  for (State q : delta_) {
    if (q >= num_states_) throw InputError("DFA transition to a missing state");
  }
  if (start_ >= num_states_) throw InputError("DFA start state out of range");
  if (finals_.size() != num_states_) throw InputError("DFA final-state vector has wrong size");
  if (labels_.empty()) labels_.assign(num_states_, "");
  if (labels_.size() != num_states_) throw InputError("DFA label vector has wrong size");
}

Dfa Dfa::universal(std::vector<std::string> alphabet) {
  std::vector<State> delta(alphabet.size(), 0);
  return Dfa(std::move(alphabet), 1, std::move(delta), 0, {true});
}

Dfa Dfa::empty(std::vector<std::string> alphabet) {
  std::vector<State> delta(alphabet.size(), 0);
  return Dfa(std::move(alphabet), 1, std::move(delta), 0, {false});
}

Dfa Dfa::of_words(std::vector<std::string> alphabet, const std::vector<Word>& words) {
  // Trie plus one sink.
  const std::size_t sigma = alphabet.size();
  std::vector<State> delta(sigma, 1);  // state 0 = root
  std::vector<State> sink_row(sigma, 1);
  delta.insert(delta.end(), sink_row.begin(), sink_row.end());  // state 1 = sink
  std::vector<bool> finals{false, false};
  for (const Word& w : words) {
    State q = 0;
    for (Letter a : w) {
      if (a >= sigma) throw InputError("word uses a letter outside the alphabet");
      State nq = delta[q * sigma + a];
      if (nq == 1) {
        nq = static_cast<State>(finals.size());
        finals.push_back(false);
        delta.insert(delta.end(), sink_row.begin(), sink_row.end());
        delta[q * sigma + a] = nq;
      }
      q = nq;
    }
    finals[q] = true;
  }
  const std::size_t n = finals.size();
  return Dfa(std::move(alphabet), n, std::move(delta), 0, std::move(finals));
}

Dfa::State Dfa::run(const Word& w) const {
  State q = start_;
  for (Letter a : w) {
    if (a >= alphabet_.size()) throw InputError("word uses a letter outside the alphabet");
    q = next(q, a);
  }
  return q;
}

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet()) throw InputError("DFA alphabet mismatch");
}

template <typename Combine>
Dfa product(const Dfa& a, const Dfa& b, Combine combine) {
  require_same_alphabet(a, b);
  const std::size_t sigma = a.alphabet().size();
  std::map<std::pair<Dfa::State, Dfa::State>, Dfa::State> ids;
  std::vector<std::pair<Dfa::State, Dfa::State>> states;
  auto id_of = [&](std::pair<Dfa::State, Dfa::State> p) {
    auto [it, inserted] = ids.try_emplace(p, static_cast<Dfa::State>(states.size()));
    if (inserted) states.push_back(p);
    return it->second;
  };
  id_of({a.start(), b.start()});
  std::vector<Dfa::State> delta;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [p, q] = states[i];
    for (Letter l = 0; l < sigma; ++l) delta.push_back(id_of({a.next(p, l), b.next(q, l)}));
  }
  std::vector<bool> finals;
  for (auto [p, q] : states) finals.push_back(combine(a.is_final(p), b.is_final(q)));
  return Dfa(a.alphabet(), states.size(), std::move(delta), 0, std::move(finals));
}

std::vector<bool> reachable(const Dfa& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::deque<Dfa::State> queue{a.start()};
  seen[a.start()] = true;
  while (!queue.empty()) {
    auto q = queue.front();
    queue.pop_front();
    for (Letter l = 0; l < a.alphabet().size(); ++l) {
      auto r = a.next(q, l);
      if (!seen[r]) {
        seen[r] = true;
        queue.push_back(r);
      }
    }
  }
  return seen;
}

std::vector<bool> coreachable(const Dfa& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<Dfa::State>> preds(n);
  for (Dfa::State q = 0; q < n; ++q) {
    for (Letter l = 0; l < a.alphabet().size(); ++l) preds[a.next(q, l)].push_back(q);
  }
  std::vector<bool> good(n, false);
  std::deque<Dfa::State> queue;
  for (Dfa::State q = 0; q < n; ++q) {
    if (a.is_final(q)) {
      good[q] = true;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    auto q = queue.front();
    queue.pop_front();
    for (auto p : preds[q]) {
      if (!good[p]) {
        good[p] = true;
        queue.push_back(p);
      }
    }
  }
  return good;
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa unite(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x || y; });
}

Dfa complement(const Dfa& a) {
  std::vector<Dfa::State> delta;
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (Dfa::State q = 0; q < a.num_states(); ++q) {
    for (Letter l = 0; l < a.alphabet().size(); ++l) delta.push_back(a.next(q, l));
    finals.push_back(!a.is_final(q));
    labels.push_back(a.label(q));
  }
  return Dfa(a.alphabet(), a.num_states(), std::move(delta), a.start(), std::move(finals),
             std::move(labels));
}

Dfa trim(const Dfa& a) {
  const auto good = coreachable(a);
  const std::size_t sigma = a.alphabet().size();
  constexpr auto kNone = static_cast<Dfa::State>(-1);
  std::vector<Dfa::State> renumber(a.num_states(), kNone);
  std::vector<Dfa::State> order;
  // BFS order keeps numbering deterministic.
  std::deque<Dfa::State> queue{a.start()};
  std::vector<bool> seen(a.num_states(), false);
  seen[a.start()] = true;
  while (!queue.empty()) {
    auto q = queue.front();
    queue.pop_front();
    if (good[q]) {
      renumber[q] = static_cast<Dfa::State>(order.size());
      order.push_back(q);
    }
    for (Letter l = 0; l < sigma; ++l) {
      auto r = a.next(q, l);
      if (!seen[r]) {
        seen[r] = true;
        queue.push_back(r);
      }
    }
  }
  bool need_sink = !good[a.start()];
  for (auto q : order) {
    for (Letter l = 0; l < sigma; ++l) need_sink = need_sink || !good[a.next(q, l)];
  }
  const auto sink = static_cast<Dfa::State>(order.size());
  const std::size_t n = order.size() + (need_sink ? 1 : 0);
  std::vector<Dfa::State> delta;
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (auto q : order) {
    for (Letter l = 0; l < sigma; ++l) {
      auto r = a.next(q, l);
      delta.push_back(good[r] ? renumber[r] : sink);
    }
    finals.push_back(a.is_final(q));
    labels.push_back(a.label(q));
  }
  if (need_sink) {
    for (Letter l = 0; l < sigma; ++l) delta.push_back(sink);
    finals.push_back(false);
    labels.push_back("dead");
  }
  const Dfa::State start = good[a.start()] ? renumber[a.start()] : sink;
  return Dfa(a.alphabet(), n, std::move(delta), start, std::move(finals), std::move(labels));
}

Dfa minimize(const Dfa& a) {
  const std::size_t sigma = a.alphabet().size();
  const auto reach = reachable(a);
  std::vector<Dfa::State> states;
  for (Dfa::State q = 0; q < a.num_states(); ++q) {
    if (reach[q]) states.push_back(q);
  }
  // Moore refinement: class ids from (class, successor classes) signatures.
  std::vector<std::size_t> cls(a.num_states(), 0);
  for (auto q : states) cls[q] = a.is_final(q) ? 1 : 0;
  std::size_t num_classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next_cls(a.num_states(), 0);
    for (auto q : states) {
      std::vector<std::size_t> sig{cls[q]};
      for (Letter l = 0; l < sigma; ++l) sig.push_back(cls[a.next(q, l)]);
      auto [it, inserted] = ids.try_emplace(std::move(sig), ids.size());
      next_cls[q] = it->second;
    }
    const bool stable = ids.size() == num_classes;
    num_classes = ids.size();
    cls = std::move(next_cls);
    if (stable) break;
  }
  // Canonical BFS numbering of classes.
  constexpr auto kNone = static_cast<Dfa::State>(-1);
  std::vector<Dfa::State> number(num_classes, kNone);
  std::vector<Dfa::State> repr;
  std::deque<Dfa::State> queue{a.start()};
  number[cls[a.start()]] = 0;
  repr.push_back(a.start());
  while (!queue.empty()) {
    auto q = queue.front();
    queue.pop_front();
    for (Letter l = 0; l < sigma; ++l) {
      auto r = a.next(q, l);
      if (number[cls[r]] == kNone) {
        number[cls[r]] = static_cast<Dfa::State>(repr.size());
        repr.push_back(r);
        queue.push_back(r);
      }
    }
  }
  std::vector<Dfa::State> delta;
  std::vector<bool> finals;
  for (auto q : repr) {
    for (Letter l = 0; l < sigma; ++l) delta.push_back(number[cls[a.next(q, l)]]);
    finals.push_back(a.is_final(q));
  }
  return Dfa(a.alphabet(), repr.size(), std::move(delta), 0, std::move(finals));
}

bool is_empty(const Dfa& a) {
  const auto reach = reachable(a);
  for (Dfa::State q = 0; q < a.num_states(); ++q) {
    if (reach[q] && a.is_final(q)) return false;
  }
  return true;
}

bool included(const Dfa& a, const Dfa& b) {
  return is_empty(intersect(a, complement(b)));
}

bool equivalent(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  return is_empty(product(a, b, [](bool x, bool y) { return x != y; }));
}

bool is_universal(const Dfa& a) { return is_empty(complement(a)); }

Cardinality cardinality(const Dfa& a) {
  const auto reach = reachable(a);
  const auto good = coreachable(a);
  const std::size_t n = a.num_states();
  const std::size_t sigma = a.alphabet().size();
  if (!good[a.start()]) return Cardinality::of_count(0);
  auto useful = [&](Dfa::State q) { return reach[q] && good[q]; };

  // Iterative DFS over useful states: a back edge means infinitely many words.
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(n, kWhite);
  std::vector<std::uint64_t> count(n, 0);
  std::vector<std::pair<Dfa::State, Letter>> stack{{a.start(), 0}};
  colour[a.start()] = kGrey;
  while (!stack.empty()) {
    auto& [q, l] = stack.back();
    if (l < sigma) {
      auto r = a.next(q, l++);
      if (!useful(r)) continue;
      if (colour[r] == kGrey) return Cardinality::infinite();
      if (colour[r] == kWhite) {
        colour[r] = kGrey;
        stack.push_back({r, 0});
      }
      continue;
    }
    std::uint64_t c = a.is_final(q) ? 1 : 0;
    for (Letter m = 0; m < sigma; ++m) {
      auto r = a.next(q, m);
      if (useful(r)) c = saturating_add(c, count[r]);
    }
    count[q] = c;
    colour[q] = kBlack;
    stack.pop_back();
  }
  return Cardinality::of_count(count[a.start()]);
}

std::vector<Word> accepted_words(const Dfa& a, std::size_t max_length, std::size_t limit) {
  const auto good = coreachable(a);
  std::vector<Word> out;
  std::vector<std::pair<Word, Dfa::State>> layer;
  if (good[a.start()]) layer.push_back({{}, a.start()});
  for (std::size_t len = 0; len <= max_length && !layer.empty(); ++len) {
    for (const auto& [w, q] : layer) {
      if (a.is_final(q)) {
        if (out.size() >= limit) return out;
        out.push_back(w);
      }
    }
    if (len == max_length) break;
    std::vector<std::pair<Word, Dfa::State>> next;
    for (const auto& [w, q] : layer) {
      for (Letter l = 0; l < a.alphabet().size(); ++l) {
        auto r = a.next(q, l);
        if (!good[r]) continue;
        Word nw = w;
        nw.push_back(l);
        next.push_back({std::move(nw), r});
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::string to_dot(const Dfa& a, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  for (Dfa::State q = 0; q < a.num_states(); ++q) {
    std::string label = a.label(q).empty() ? std::to_string(q) : a.label(q);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out << "  q" << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle")
        << ", label=\"" << escaped << "\"];\n";
  }
  out << "  __start -> q" << a.start() << ";\n";
  for (Dfa::State q = 0; q < a.num_states(); ++q) {
    // Group parallel edges into one labeled edge.
    std::map<Dfa::State, std::string> edges;
    for (Letter l = 0; l < a.alphabet().size(); ++l) {
      auto& lbl = edges[a.next(q, l)];
      if (!lbl.empty()) lbl += ",";
      lbl += a.alphabet()[l];
    }
    for (const auto& [r, lbl] : edges) {
      out << "  q" << q << " -> q" << r << " [label=\"" << lbl << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace agu
