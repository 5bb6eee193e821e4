#include "pilp/logic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coded.hpp"

namespace pilp {

bool Atom::is_ground() const noexcept {
  return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_var(); });
}

std::vector<std::string> Clause::variables() const {
  std::vector<std::string> out;
  auto visit = [&out](const Atom& a) {
    for (const auto& t : a.args) {
      if (t.is_var() && std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
    }
  };
  visit(head);
  for (const auto& b : body) visit(b);
  return out;
}

Program::Program(std::vector<Clause> clauses) {
  if (clauses.empty()) throw Error("a program needs at least one clause");
  const std::string head = clauses.front().head.predicate;
  const std::size_t head_arity = clauses.front().head.arity();
  std::map<std::string, std::size_t> arities;
  auto check_arity = [&arities](const Atom& a) {
    if (a.predicate == kAlwaysTrue) throw Error("always_true is reserved and may not appear in a program");
    if (a.arity() == 0) throw Error("predicate '" + a.predicate + "' needs at least one argument");
    if (a.arity() > detail::kMaxArity) {
      throw Error("predicate '" + a.predicate + "' exceeds the maximum arity of " +
                  std::to_string(detail::kMaxArity));
    }
    auto [it, inserted] = arities.emplace(a.predicate, a.arity());
    if (!inserted && it->second != a.arity()) {
      throw Error("predicate '" + a.predicate + "' used with arities " + std::to_string(it->second) +
                  " and " + std::to_string(a.arity()));
    }
  };

  std::set<Clause> seen;
  for (auto& c : clauses) {
    if (c.head.predicate != head || c.head.arity() != head_arity) {
      throw Error("all clauses must share the head predicate " + head + "/" + std::to_string(head_arity));
    }
    if (c.body.empty()) throw Error("clause '" + to_string(c.head) + "' has an empty body");
    check_arity(c.head);
    for (const auto& b : c.body) check_arity(b);
    if (seen.insert(canonicalize(c)).second) clauses_.push_back(std::move(c));
  }
}

Program Program::canonical() const {
  std::vector<Clause> out;
  out.reserve(clauses_.size());
  for (const auto& c : clauses_) out.push_back(canonicalize(c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Program(std::move(out));
}

void Bias::validate() const {
  if (head.name.empty() || head.arity == 0) throw Error("bias: head predicate must have arity >= 1");
  if (body.empty()) throw Error("bias: no body predicates declared");
  if (max_vars == 0 || max_body == 0 || max_clauses == 0) {
    throw Error("bias: max_vars, max_body and max_clauses must be >= 1");
  }
  if (max_vars < head.arity) throw Error("bias: max_vars is smaller than the head arity");
  std::set<std::string> names;
  for (const auto& p : body) {
    if (p.name == head.name) throw Error("bias: head predicate '" + p.name + "' is also a body predicate");
    if (p.name == kAlwaysTrue) throw Error("bias: always_true is reserved");
    if (p.arity == 0 || p.arity > detail::kMaxArity) {
      throw Error("bias: body predicate '" + p.name + "' has unsupported arity " + std::to_string(p.arity));
    }
    if (!names.insert(p.name).second) throw Error("bias: body predicate '" + p.name + "' declared twice");
  }
}

Clause canonicalize(const Clause& clause) {
  detail::SymbolCodes codes({&clause});
  return codes.decode(detail::canonical(codes.encode(clause)));
}

bool alpha_equivalent(const Clause& a, const Clause& b) { return canonicalize(a) == canonicalize(b); }

namespace {

detail::CodedClause dedup_body(detail::CodedClause c) {
  std::sort(c.body.begin(), c.body.end());
  c.body.erase(std::unique(c.body.begin(), c.body.end()), c.body.end());
  return c;
}

}  // namespace

bool theta_subsumes(const Clause& general, const Clause& specific) {
  detail::SymbolCodes codes({&general, &specific});
  return detail::subsumes(dedup_body(codes.encode(general)), dedup_body(codes.encode(specific)));
}

bool program_specializes(const Program& h2, const Program& h1) {
  if (h2.head_predicate() != h1.head_predicate() || h2.head_arity() != h1.head_arity()) return false;
  std::vector<const Clause*> all;
  for (const auto& c : h2.clauses()) all.push_back(&c);
  for (const auto& c : h1.clauses()) all.push_back(&c);
  detail::SymbolCodes codes(all);
  std::vector<detail::CodedClause> general;
  for (const auto& c : h1.clauses()) general.push_back(dedup_body(codes.encode(c)));
  return std::all_of(h2.clauses().begin(), h2.clauses().end(), [&](const Clause& c) {
    const auto specific = dedup_body(codes.encode(c));
    return std::any_of(general.begin(), general.end(),
                       [&](const detail::CodedClause& g) { return detail::subsumes(g, specific); });
  });
}

std::size_t program_size(const Program& program) {
  std::size_t n = 0;
  for (const auto& c : program.clauses()) n += 1 + c.body.size();
  return n;
}

std::string to_string(const Term& term) { return term.name; }

std::string to_string(const Atom& atom) {
  std::string out = atom.predicate + "(";
  for (std::size_t i = 0; i < atom.args.size(); ++i) {
    if (i > 0) out += ",";
    out += atom.args[i].name;
  }
  return out + ")";
}

std::string to_string(const Clause& clause) {
  std::string out = to_string(clause.head) + " :- ";
  for (std::size_t i = 0; i < clause.body.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(clause.body[i]);
  }
  return out + ".";
}

}  // namespace pilp
