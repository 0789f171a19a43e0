#include "agu/algebra_io.hpp"

#include <fstream>

namespace agu {

using nlohmann::json;

namespace {

std::string row_text(const std::vector<std::string>& universe,
                     const std::vector<Element>& prefix) {
  std::string out = "(";
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) out += ",";
    out += universe[prefix[i]];
  }
  return out + ")";
}

void read_table(const json& node, std::size_t depth, const std::string& op,
                const std::vector<std::string>& universe,
                const std::map<std::string, Element, std::less<>>& index,
                std::vector<Element>& prefix, std::vector<Element>& out) {
  if (depth == 0) {
    if (!node.is_string()) {
      throw InputError("table of '" + op + "' row " + row_text(universe, prefix) +
                       ": expected an element id");
    }
    auto id = node.get<std::string>();
    auto it = index.find(id);
    if (it == index.end()) {
      throw InputError("table of '" + op + "' is not closed: row " +
                       row_text(universe, prefix) + " maps to '" + id +
                       "', which is not in the universe");
    }
    out.push_back(it->second);
    return;
  }
  if (!node.is_array()) {
    throw InputError("table of '" + op + "' row " + row_text(universe, prefix) +
                     ": expected a nested array");
  }
  if (node.size() > universe.size()) {
    throw InputError("table of '" + op + "' has too many rows at " +
                     row_text(universe, prefix));
  }
  for (std::size_t i = 0; i < universe.size(); ++i) {
    prefix.push_back(static_cast<Element>(i));
    if (i >= node.size()) {
      throw InputError("table of '" + op + "' is not total: missing row " +
                       row_text(universe, prefix) + (depth > 1 ? "..." : ""));
    }
    read_table(node[i], depth - 1, op, universe, index, prefix, out);
    prefix.pop_back();
  }
}

json write_table(const FiniteAlgebra& alg, const Operation& op, std::size_t depth,
                 std::size_t& row) {
  if (depth == 0) return alg.universe()[op.table[row++]];
  json arr = json::array();
  for (std::size_t i = 0; i < alg.size(); ++i) arr.push_back(write_table(alg, op, depth - 1, row));
  return arr;
}

}  // namespace

FiniteAlgebra algebra_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("algebra file must contain a JSON object");
  std::string name = doc.value("name", std::string("unnamed"));
  if (!doc.contains("universe") || !doc["universe"].is_array()) {
    throw InputError("algebra '" + name + "': missing \"universe\" array");
  }
  std::vector<std::string> universe;
  for (const auto& e : doc["universe"]) {
    if (!e.is_string()) throw InputError("universe entries must be strings");
    universe.push_back(e.get<std::string>());
  }
  if (universe.empty()) throw InputError("algebra '" + name + "': empty universe");
  std::map<std::string, Element, std::less<>> index;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!index.emplace(universe[i], static_cast<Element>(i)).second) {
      throw InputError("duplicate element '" + universe[i] + "'");
    }
  }

  std::vector<Operation> ops;
  if (doc.contains("operations")) {
    if (!doc["operations"].is_array()) throw InputError("\"operations\" must be an array");
    for (const auto& o : doc["operations"]) {
      if (!o.is_object() || !o.contains("name") || !o["name"].is_string() ||
          !o.contains("arity") || !o["arity"].is_number_unsigned() || !o.contains("table")) {
        throw InputError("each operation needs \"name\", non-negative \"arity\" and \"table\"");
      }
      Operation op;
      op.name = o["name"].get<std::string>();
      if (!is_valid_symbol_name(op.name)) {
        throw InputError("invalid operation name '" + op.name + "'");
      }
      op.arity = o["arity"].get<std::size_t>();
      std::vector<Element> prefix;
      prefix.reserve(op.arity);
      read_table(o["table"], op.arity, op.name, universe, index, prefix, op.table);
      ops.push_back(std::move(op));
    }
  }
  FiniteAlgebra alg(std::move(name), std::move(universe), std::move(ops));
  validate(alg);
  return alg;
}

FiniteAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path.string() + "': " + e.what());
  }
  return algebra_from_json(doc);
}

json algebra_to_json(const FiniteAlgebra& alg) {
  json ops = json::array();
  for (const auto& op : alg.operations()) {
    std::size_t row = 0;
    ops.push_back({{"name", op.name}, {"arity", op.arity},
                   {"table", write_table(alg, op, op.arity, row)}});
  }
  return {{"name", alg.name()}, {"universe", alg.universe()}, {"operations", ops}};
}

void save_algebra(const FiniteAlgebra& alg, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << algebra_to_json(alg).dump(2) << '\n';
}

}  // namespace agu
