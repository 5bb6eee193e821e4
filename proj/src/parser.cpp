#include "pilp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

namespace pilp {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Dot, Neck, ProbSep, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Neck: return "':-'";
    case Tok::ProbSep: return "'::'";
    case Tok::End: return "end of input";
  }
  return "token";
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t tl = line;
    const std::size_t tc = col;
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (is_digit(c) || ((c == '-' || c == '+') && i + 1 < text.size() && is_digit(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && is_digit(text[j])) ++j;
      if (j + 1 < text.size() && text[j] == '.' && is_digit(text[j + 1])) {
        j += 1;
        while (j < text.size() && is_digit(text[j])) ++j;
      }
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() && is_digit(text[k])) {
          while (k < text.size() && is_digit(text[k])) ++k;
          j = k;
        }
      }
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == ':' && i + 1 < text.size() && text[i + 1] == '-') {
      out.push_back({Tok::Neck, ":-", tl, tc});
      advance(2);
      continue;
    }
    if (c == ':' && i + 1 < text.size() && text[i + 1] == ':') {
      out.push_back({Tok::ProbSep, "::", tl, tc});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
    }
    out.push_back({kind, std::string(1, c), tl, tc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at(Tok kind) const { return peek().kind == kind; }

  const Token& expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind) fail(std::string("expected ") + describe(kind) + ", found " + describe(t.kind), t);
    ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& what, const Token& where) const {
    throw ParseError(what, where.line, where.column);
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      return Term::constant(t.text);
    }
    expect(Tok::Ident);
    const char first = t.text.front();
    if (std::isupper(static_cast<unsigned char>(first)) || first == '_') return Term::var(t.text);
    return Term::constant(t.text);
  }

  Atom atom() {
    const Token& name = expect(Tok::Ident);
    if (!std::islower(static_cast<unsigned char>(name.text.front()))) {
      fail("predicate names must start with a lowercase letter", name);
    }
    Atom a{name.text, {}};
    expect(Tok::LParen);
    a.args.push_back(term());
    while (at(Tok::Comma)) {
      ++pos_;
      a.args.push_back(term());
    }
    expect(Tok::RParen);
    return a;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::optional<double> parse_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::optional<std::size_t> parse_count(const std::string& text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

Program read_program(std::string_view text) {
  Reader r(text);
  std::vector<Clause> clauses;
  std::map<std::string, std::size_t> arities;
  auto check = [&](const Atom& a, const Token& where) {
    if (a.predicate == kAlwaysTrue) r.fail("always_true is reserved", where);
    if (a.arity() > 4) r.fail("predicate '" + a.predicate + "' has arity above 4", where);
    auto [it, inserted] = arities.emplace(a.predicate, a.arity());
    if (!inserted && it->second != a.arity()) {
      r.fail("predicate '" + a.predicate + "' used with arity " + std::to_string(a.arity()) +
                 " but earlier with arity " + std::to_string(it->second),
             where);
    }
  };
  while (!r.at_end()) {
    const Token start = r.peek();
    Clause c;
    c.head = r.atom();
    check(c.head, start);
    if (!clauses.empty() && c.head.predicate != clauses.front().head.predicate) {
      r.fail("all clauses must define '" + clauses.front().head.predicate + "'", start);
    }
    if (r.at(Tok::Dot)) r.fail("clause has an empty body", r.peek());
    r.expect(Tok::Neck);
    while (true) {
      const Token where = r.peek();
      if (where.kind == Tok::Dot) r.fail("expected a body literal", where);
      c.body.push_back(r.atom());
      check(c.body.back(), where);
      if (!r.at(Tok::Comma)) break;
      r.expect(Tok::Comma);
    }
    r.expect(Tok::Dot);
    clauses.push_back(std::move(c));
  }
  if (clauses.empty()) throw ParseError("no clauses", 1, 1);
  return Program(std::move(clauses));
}

}  // namespace

Program parse_program_verbatim(std::string_view text) { return read_program(text); }

Program parse_program(std::string_view text) { return read_program(text).canonical(); }

std::vector<ProbFact> parse_facts(std::string_view text) {
  Reader r(text);
  std::vector<ProbFact> out;
  while (!r.at_end()) {
    const Token start = r.peek();
    ProbFact f;
    if (start.kind == Tok::Number) {
      r.expect(Tok::Number);
      auto p = parse_double(start.text);
      if (!p) r.fail("malformed probability '" + start.text + "'", start);
      if (!(*p >= 0.0 && *p <= 1.0)) r.fail("probability " + start.text + " is outside [0,1]", start);
      f.prob = *p;
      r.expect(Tok::ProbSep);
    }
    const Token at = r.peek();
    f.atom = r.atom();
    if (!f.atom.is_ground()) r.fail("fact '" + to_string(f.atom) + "' is not ground", at);
    if (f.atom.predicate == kAlwaysTrue) r.fail("always_true is reserved", at);
    r.expect(Tok::Dot);
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

std::vector<LabeledId> read_examples(std::string_view text, std::string* head_predicate) {
  Reader r(text);
  std::vector<LabeledId> out;
  std::set<std::string> seen;
  std::string head;
  while (!r.at_end()) {
    const Token wrapper = r.expect(Tok::Ident);
    LabeledId ex;
    if (wrapper.text == "pos") {
      ex.label = Label::Positive;
    } else if (wrapper.text == "neg") {
      ex.label = Label::Negative;
    } else {
      r.fail("unknown example wrapper '" + wrapper.text + "' (expected pos or neg)", wrapper);
    }
    r.expect(Tok::LParen);
    const Token inner = r.peek();
    const Atom a = r.atom();
    r.expect(Tok::RParen);
    r.expect(Tok::Dot);
    if (a.arity() != 1 || a.args[0].is_var()) r.fail("examples must be of the form f(id) with a constant id", inner);
    if (head.empty()) {
      head = a.predicate;
    } else if (a.predicate != head) {
      r.fail("example predicate '" + a.predicate + "' differs from '" + head + "'", inner);
    }
    ex.id = a.args[0].name;
    if (!seen.insert(ex.id).second) r.fail("duplicate example id '" + ex.id + "'", inner);
    out.push_back(std::move(ex));
  }
  if (head_predicate != nullptr) *head_predicate = head;
  return out;
}

}  // namespace

std::vector<LabeledId> parse_examples(std::string_view text) { return read_examples(text, nullptr); }

std::vector<LabeledId> parse_examples(std::string_view text, std::string& head_predicate) {
  return read_examples(text, &head_predicate);
}

Bias parse_bias(std::string_view text) {
  Reader r(text);
  Bias bias;
  bool have_head = false;
  auto count_arg = [&r](const Atom& a, std::size_t i, const Token& where) {
    auto n = parse_count(a.args[i].name);
    if (a.args[i].is_var() || !n) r.fail("expected a non-negative integer in " + to_string(a), where);
    return *n;
  };
  while (!r.at_end()) {
    const Token where = r.peek();
    const Atom a = r.atom();
    r.expect(Tok::Dot);
    const std::string& d = a.predicate;
    if (d == "head_pred" || d == "body_pred") {
      if (a.arity() != 2 || a.args[0].is_var()) r.fail(d + " expects (name, arity)", where);
      PredicateSignature sig{a.args[0].name, count_arg(a, 1, where)};
      if (d == "head_pred") {
        if (have_head) r.fail("head_pred declared more than once", where);
        bias.head = sig;
        have_head = true;
      } else {
        bias.body.push_back(sig);
      }
    } else if (d == "max_vars" || d == "max_body" || d == "max_clauses") {
      if (a.arity() != 1) r.fail(d + " expects one argument", where);
      const std::size_t n = count_arg(a, 0, where);
      (d == "max_vars" ? bias.max_vars : d == "max_body" ? bias.max_body : bias.max_clauses) = n;
    } else {
      r.fail("unknown bias declaration '" + d + "'", where);
    }
  }
  if (!have_head) throw ParseError("bias: missing head_pred declaration", 1, 1);
  if (bias.body.empty()) throw ParseError("bias: no body_pred declared", 1, 1);
  try {
    bias.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return bias;
}

std::string format_real(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

namespace {

std::string letter_name(std::size_t i) {
  std::string s(1, static_cast<char>('A' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

std::string print_clause(const Clause& clause) {
  const Clause c = canonicalize(clause);
  std::set<std::string> visited;
  for (const auto& t : c.head.args) {
    if (t.is_var()) visited.insert(t.name);
  }
  std::vector<Atom> remaining = c.body;
  std::vector<Atom> ordered;
  auto touches = [&visited](const Atom& a) {
    return std::any_of(a.args.begin(), a.args.end(),
                       [&](const Term& t) { return t.is_var() && visited.count(t.name) > 0; });
  };
  auto closed = [&visited](const Atom& a) {
    return std::all_of(a.args.begin(), a.args.end(),
                       [&](const Term& t) { return !t.is_var() || visited.count(t.name) > 0; });
  };
  while (!remaining.empty()) {
    auto it = std::find_if(remaining.begin(), remaining.end(),
                           [&](const Atom& a) { return touches(a) && closed(a); });
    if (it == remaining.end()) it = std::find_if(remaining.begin(), remaining.end(), touches);
    if (it == remaining.end()) it = remaining.begin();
    for (const auto& t : it->args) {
      if (t.is_var()) visited.insert(t.name);
    }
    ordered.push_back(*it);
    remaining.erase(it);
  }

  std::map<std::string, std::string> names;
  auto rename = [&names](Atom& a) {
    for (auto& t : a.args) {
      if (!t.is_var()) continue;
      auto [it, inserted] = names.emplace(t.name, "");
      if (inserted) it->second = letter_name(names.size() - 1);
      t.name = it->second;
    }
  };
  Clause out{c.head, std::move(ordered)};
  rename(out.head);
  for (auto& a : out.body) rename(a);
  return to_string(out);
}

}  // namespace

std::string print_program(const Program& program) {
  std::string out;
  const Program canonical = program.canonical();
  for (const auto& c : canonical.clauses()) out += print_clause(c) + "\n";
  return out;
}

std::string print_facts(const std::vector<ProbFact>& facts) {
  std::string out;
  for (const auto& f : facts) {
    if (f.prob != 1.0) out += format_real(f.prob) + " :: ";
    out += to_string(f.atom) + ".\n";
  }
  return out;
}

std::string print_examples(const std::vector<LabeledId>& examples, const std::string& head_predicate) {
  std::string out;
  for (const auto& e : examples) {
    out += (e.label == Label::Positive ? "pos(" : "neg(") + head_predicate + "(" + e.id + ")).\n";
  }
  return out;
}

std::string print_bias(const Bias& bias) {
  std::string out = "head_pred(" + bias.head.name + "," + std::to_string(bias.head.arity) + ").\n";
  for (const auto& p : bias.body) out += "body_pred(" + p.name + "," + std::to_string(p.arity) + ").\n";
  out += "max_vars(" + std::to_string(bias.max_vars) + ").\n";
  out += "max_body(" + std::to_string(bias.max_body) + ").\n";
  out += "max_clauses(" + std::to_string(bias.max_clauses) + ").\n";
  return out;
}

}  // namespace pilp
