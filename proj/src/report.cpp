#include "agu/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace agu {

using json = nlohmann::ordered_json;

std::string pair_label(const Cardinality& c) {
  switch (c.kind) {
    case Cardinality::Kind::empty: return "nullary";
    case Cardinality::Kind::one: return "unitary";
    case Cardinality::Kind::finite: return "finitary";
    case Cardinality::Kind::infinite: return "infinitary";
  }
  return "?";
}

std::vector<std::string> aggregate_labels(const std::vector<Cardinality>& sizes,
                                          const std::vector<bool>& trivial) {
  using Kind = Cardinality::Kind;
  auto all = [&](auto pred) { return std::all_of(sizes.begin(), sizes.end(), pred); };
  auto any = [&](auto pred) { return std::any_of(sizes.begin(), sizes.end(), pred); };
  std::vector<std::string> out;
  if (all([](const Cardinality& c) { return c.kind == Kind::empty; })) out.push_back("nullary");
  if (all([](const Cardinality& c) { return c.kind == Kind::one; })) out.push_back("unitary");
  if (all([](const Cardinality& c) { return c.is_finite(); }) &&
      any([](const Cardinality& c) { return c.kind == Kind::finite; })) {
    out.push_back("finitary");
  }
  if (any([](const Cardinality& c) { return c.kind == Kind::infinite; })) {
    out.push_back("infinitary");
  }
  if (std::all_of(trivial.begin(), trivial.end(), [](bool t) { return t; })) {
    out.push_back("trivial");
  }
  return out;
}

void finish_type_report(TypeReport& report) {
  std::vector<Cardinality> terms, classes;
  std::vector<bool> trivial;
  for (auto& e : report.entries) {
    e.label_terms = pair_label(e.terms);
    e.label_classes = pair_label(Cardinality::of_count(e.classes));
    terms.push_back(e.terms);
    classes.push_back(Cardinality::of_count(e.classes));
    trivial.push_back(e.trivial);
  }
  report.labels_terms = aggregate_labels(terms, trivial);
  report.labels_classes = aggregate_labels(classes, trivial);
  report.trivial = std::all_of(trivial.begin(), trivial.end(), [](bool t) { return t; });
}

std::string format_pair(const ImagePair& p, const AlgebraPair& pair) {
  return "(" + pair.first().format(p.first) + ", " + pair.second().format(p.second) + ")";
}

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> names(const FiniteAlgebra& alg, const ElementSet& s) {
  std::vector<std::string> out;
  for (Element e : s.elements()) out.push_back(alg.element_name(e));
  return out;
}

std::string labels_or_none(const std::vector<std::string>& labels) {
  return labels.empty() ? "unclassified" : join(labels, ", ");
}

}  // namespace

std::string format_text(const Summary& s, const AlgebraPair& pair) {
  std::ostringstream out;
  out << "engine: " << s.engine << (s.approximate ? " (approximate)" : "") << '\n';
  out << "minimal pairs: " << s.minimal_pairs.size() << '\n';
  for (std::size_t i = 0; i < s.minimal_pairs.size(); ++i) {
    out << "  " << format_pair(s.minimal_pairs[i], pair) << "  witness: " << to_string(s.witnesses[i])
        << '\n';
  }
  out << "language: " << s.terms.to_string() << "; " << (s.trivial ? "trivial" : "nontrivial")
      << "; " << s.language << '\n';
  out << "counts: terms=" << s.terms.to_string() << " classes=" << s.classes
      << " functions=" << s.functions << '\n';
  if (!s.members.empty()) {
    out << "members:\n";
    for (const auto& m : s.members) out << "  " << to_string(m) << '\n';
  }
  for (const auto& n : s.notes) out << "note: " << n << '\n';
  return out.str();
}

std::string format_text(const TypeReport& r, const AlgebraPair& pair) {
  std::ostringstream out;
  for (const auto& e : r.entries) {
    out << pair.first().element_name(e.a) << ", " << pair.second().element_name(e.b) << ": "
        << e.label_terms << " (terms=" << e.terms.to_string() << ", classes=" << e.classes
        << (e.trivial ? ", trivial" : "") << ")\n";
  }
  out << "type (counting terms): " << labels_or_none(r.labels_terms) << '\n';
  out << "type (counting classes): " << labels_or_none(r.labels_classes) << '\n';
  return out.str();
}

std::string format_machine(const Summary& s, const AlgebraPair& pair) {
  std::string out;
  for (std::size_t i = 0; i < s.minimal_pairs.size(); ++i) {
    json rec = {{"record", "minimal_pair"},
                {"first", names(pair.first(), s.minimal_pairs[i].first)},
                {"second", names(pair.second(), s.minimal_pairs[i].second)},
                {"witness", to_string(s.witnesses[i])}};
    out += rec.dump() + '\n';
  }
  for (const auto& m : s.members) {
    out += json{{"record", "member"}, {"term", to_string(m)}}.dump() + '\n';
  }
  json summary = {{"record", "summary"},
                  {"engine", s.engine},
                  {"cardinality", s.terms.to_string()},
                  {"classes", s.classes},
                  {"functions", s.functions},
                  {"trivial", s.trivial},
                  {"approximate", s.approximate},
                  {"language", s.language},
                  {"notes", s.notes}};
  out += summary.dump() + '\n';
  return out;
}

std::string format_machine(const TypeReport& r, const AlgebraPair& pair) {
  std::string out;
  for (const auto& e : r.entries) {
    json rec = {{"record", "pair_type"},
                {"left", pair.first().element_name(e.a)},
                {"right", pair.second().element_name(e.b)},
                {"label", e.label_terms},
                {"label_classes", e.label_classes},
                {"cardinality", e.terms.to_string()},
                {"classes", e.classes},
                {"trivial", e.trivial}};
    out += rec.dump() + '\n';
  }
  json agg = {{"record", "type"},
              {"labels", r.labels_terms},
              {"labels_classes", r.labels_classes},
              {"trivial", r.trivial}};
  out += agg.dump() + '\n';
  return out;
}

}  // namespace agu
