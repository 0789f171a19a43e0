#include "agu/term.hpp"

#include <algorithm>
#include <cctype>

#include "agu/errors.hpp"

namespace agu {

bool is_variable_lexeme(std::string_view text) {
  if (text.size() < 2 || text[0] != 'x') return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool is_valid_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name[0]);
  if (!(std::isalpha(head) || head == '_')) return false;
  for (unsigned char c : name) {
    if (!(std::isalnum(c) || c == '_')) return false;
  }
  return !is_variable_lexeme(name);
}

// ---------------------------------------------------------------------------
// Signature
// ---------------------------------------------------------------------------

Signature::Signature(std::vector<Symbol> symbols) {
  for (auto& s : symbols) add(std::move(s.name), s.arity);
}

void Signature::add(std::string name, std::size_t arity) {
  if (!is_valid_symbol_name(name)) {
    throw InputError("invalid symbol name '" + name + "'");
  }
  if (index_.contains(name)) {
    throw InputError("duplicate symbol '" + name + "'");
  }
  index_.emplace(name, symbols_.size());
  symbols_.push_back({std::move(name), arity});
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Signature::arity(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InputError("unknown symbol '" + std::string(name) + "'");
  return symbols_[*i].arity;
}

bool Signature::is_unary() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const Symbol& s) { return s.arity == 1; });
}

std::size_t Signature::max_arity() const {
  std::size_t m = 0;
  for (const auto& s : symbols_) m = std::max(m, s.arity);
  return m;
}

// ---------------------------------------------------------------------------
// Term
// ---------------------------------------------------------------------------

Term Term::var(VarIndex index) {
  if (index == 0) throw InputError("variable indices start at 1");
  Term t;
  t.var_ = index;
  return t;
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  Term t;
  t.symbol_ = std::move(symbol);
  t.args_ = std::move(args);
  return t;
}

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const auto& a : args_) n += a.size();
  return n;
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

namespace {

void collect_vars(const Term& t, std::set<VarIndex>& out) {
  if (t.is_var()) {
    out.insert(t.var_index());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

}  // namespace

std::set<VarIndex> Term::vars() const {
  std::set<VarIndex> out;
  collect_vars(*this, out);
  return out;
}

VarIndex Term::max_var() const {
  if (is_var()) return var_;
  VarIndex m = 0;
  for (const auto& a : args_) m = std::max(m, a.max_var());
  return m;
}

std::size_t Term::occurrences(VarIndex index) const {
  if (is_var()) return var_ == index ? 1 : 0;
  std::size_t n = 0;
  for (const auto& a : args_) n += a.occurrences(index);
  return n;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (auto c = var_ <=> other.var_; c != 0) return c;
  if (auto c = symbol_ <=> other.symbol_; c != 0) return c;
  const std::size_t n = std::min(args_.size(), other.args_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = args_[i] <=> other.args_[i]; c != 0) return c;
  }
  return args_.size() <=> other.args_.size();
}

namespace {

void print(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += 'x';
    out += std::to_string(t.var_index());
    return;
  }
  out += t.symbol();
  if (t.args().empty()) return;
  out += '(';
  bool first = true;
  for (const auto& a : t.args()) {
    if (!first) out += ',';
    first = false;
    print(a, out);
  }
  out += ')';
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  Term term() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    auto is_ident = [](unsigned char c) { return std::isalnum(c) || c == '_'; };
    auto head = static_cast<unsigned char>(text_[pos_]);
    if (!(std::isalpha(head) || head == '_')) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'",
                       pos_);
    }
    while (pos_ < text_.size() && is_ident(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::string_view word = text_.substr(start, pos_ - start);

    if (is_variable_lexeme(word)) {
      if (word[1] == '0') {
        throw ParseError("variable index must be positive without leading zero",
                         start);
      }
      unsigned long long index = 0;
      for (char c : word.substr(1)) {
        index = index * 10 + static_cast<unsigned>(c - '0');
        if (index > UINT32_MAX) throw ParseError("variable index too large", start);
      }
      if (peek('(')) throw ParseError("variables take no arguments", pos_);
      return Term::var(static_cast<VarIndex>(index));
    }

    auto idx = sig_.find(word);
    if (!idx) throw InputError("unknown symbol '" + std::string(word) + "'");
    const std::size_t arity = sig_.symbols()[*idx].arity;

    std::vector<Term> args;
    if (peek('(')) {
      ++pos_;
      args.push_back(term());
      while (peek(',')) {
        ++pos_;
        args.push_back(term());
      }
      expect(')');
    }
    if (args.size() != arity) {
      throw InputError("symbol '" + std::string(word) + "' expects " +
                       std::to_string(arity) + " argument(s), got " +
                       std::to_string(args.size()));
    }
    return Term::app(std::string(word), std::move(args));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

Term parse_term(std::string_view text, const Signature& sig) {
  return Parser(text, sig).parse();
}

void check_term(const Term& t, const Signature& sig) {
  if (t.is_var()) return;
  const std::size_t arity = sig.arity(t.symbol());
  if (arity != t.args().size()) {
    throw InputError("symbol '" + t.symbol() + "' expects " +
                     std::to_string(arity) + " argument(s), got " +
                     std::to_string(t.args().size()));
  }
  for (const auto& a : t.args()) check_term(a, sig);
}

Term apply_substitution(const Term& t, const Substitution& s) {
  if (t.is_var()) {
    auto it = s.find(t.var_index());
    return it == s.end() ? t : it->second;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(apply_substitution(a, s));
  return Term::app(t.symbol(), std::move(args));
}

namespace {

bool match_into(const Term& s, const Term& t, Substitution& sigma) {
  if (t.is_var()) {
    auto [it, inserted] = sigma.try_emplace(t.var_index(), s);
    return inserted || it->second == s;
  }
  if (s.is_var() || s.symbol() != t.symbol() ||
      s.args().size() != t.args().size()) {
    return false;
  }
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (!match_into(s.args()[i], t.args()[i], sigma)) return false;
  }
  return true;
}

Term rename(const Term& t, std::map<VarIndex, VarIndex>& table) {
  if (t.is_var()) {
    auto [it, inserted] = table.try_emplace(
        t.var_index(), static_cast<VarIndex>(table.size() + 1));
    return Term::var(it->second);
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(rename(a, table));
  return Term::app(t.symbol(), std::move(args));
}

Term lgg(const Term& s, const Term& t,
         std::map<std::pair<Term, Term>, VarIndex>& memo) {
  if (!s.is_var() && !t.is_var() && s.symbol() == t.symbol() &&
      s.args().size() == t.args().size()) {
    std::vector<Term> args;
    args.reserve(s.args().size());
    for (std::size_t i = 0; i < s.args().size(); ++i) {
      args.push_back(lgg(s.args()[i], t.args()[i], memo));
    }
    return Term::app(s.symbol(), std::move(args));
  }
  auto [it, inserted] = memo.try_emplace(
      std::pair{s, t}, static_cast<VarIndex>(memo.size() + 1));
  return Term::var(it->second);
}

}  // namespace

std::optional<Substitution> match_term(const Term& s, const Term& t) {
  Substitution sigma;
  if (!match_into(s, t, sigma)) return std::nullopt;
  // Drop identity bindings so that matching a term against itself yields
  // the empty substitution.
  std::erase_if(sigma, [](const auto& kv) {
    return kv.second.is_var() && kv.second.var_index() == kv.first;
  });
  return sigma;
}

Term canonical_renaming(const Term& t) {
  std::map<VarIndex, VarIndex> table;
  return rename(t, table);
}

bool alpha_equivalent(const Term& a, const Term& b) {
  return canonical_renaming(a) == canonical_renaming(b);
}

Term syntactic_lgg(const Term& s, const Term& t) {
  std::map<std::pair<Term, Term>, VarIndex> memo;
  return canonical_renaming(lgg(s, t, memo));
}

}  // namespace agu
