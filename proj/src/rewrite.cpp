#include "pilp/rewrite.hpp"

#include <algorithm>

namespace pilp {

namespace {

bool contains(std::span<const std::string> xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

std::vector<std::string> head_variables(const Clause& c) {
  std::vector<std::string> out;
  for (const auto& t : c.head.args) {
    if (t.is_var() && !contains(out, t.name)) out.push_back(t.name);
  }
  return out;
}

std::string args_text(const std::vector<std::string>& vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) out += ", ";
    out += vars[i];
  }
  return out + ")";
}

std::string atom_text(const Atom& a) {
  std::string out = a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += a.args[i].name;
  }
  return out + ")";
}

}  // namespace

std::vector<std::vector<Atom>> bodies(const Program& program) {
  std::vector<std::vector<Atom>> out;
  for (const auto& c : program.clauses()) out.push_back(c.body);
  return out;
}

std::vector<std::set<std::string>> var_sets(const Program& program) {
  std::vector<std::set<std::string>> out;
  for (const auto& c : program.clauses()) {
    const auto vars = c.variables();
    out.emplace_back(vars.begin(), vars.end());
  }
  return out;
}

std::vector<Atom> extend(std::span<const Atom> body, std::span<const std::string> target_vars,
                         std::span<const std::string> head_vars) {
  std::vector<std::string> used(head_vars.begin(), head_vars.end());
  for (const auto& a : body) {
    for (const auto& t : a.args) {
      if (!t.is_var()) continue;
      if (!contains(target_vars, t.name)) {
        throw Error("extend: body variable " + t.name + " is not in the target variable set");
      }
      if (!contains(used, t.name)) used.push_back(t.name);
    }
  }
  std::vector<Atom> out(body.begin(), body.end());
  for (const auto& v : target_vars) {
    if (!contains(used, v)) out.push_back(Atom{std::string(kAlwaysTrue), {Term::var(v)}});
  }
  return out;
}

NormalizedProgram normalize(const Program& program) {
  std::vector<std::string> appearance;
  std::vector<std::vector<std::string>> per_clause;
  for (const auto& c : program.clauses()) {
    per_clause.push_back(c.variables());
    for (const auto& v : per_clause.back()) {
      if (!contains(appearance, v)) appearance.push_back(v);
    }
  }
  auto in_every_clause = [&per_clause](const std::string& v) {
    return std::all_of(per_clause.begin(), per_clause.end(),
                       [&v](const std::vector<std::string>& vars) { return contains(vars, v); });
  };

  NormalizedProgram out{{}, {}, program};
  for (const auto& v : appearance) {
    if (!in_every_clause(v)) out.unified_vars.push_back(v);
  }
  for (const auto& v : appearance) {
    if (in_every_clause(v)) out.unified_vars.push_back(v);
  }
  for (const auto& c : program.clauses()) {
    const auto head_vars = head_variables(c);
    out.clauses.push_back(Clause{c.head, extend(c.body, out.unified_vars, head_vars)});
  }
  return out;
}

std::string render_normalized(const NormalizedProgram& normalized, const std::string& name) {
  const std::string args = args_text(normalized.unified_vars);
  std::string out;
  std::string disjunction;
  for (std::size_t i = 0; i < normalized.clauses.size(); ++i) {
    const std::string part = name + std::to_string(i) + args;
    out += part + " = ";
    const auto& body = normalized.clauses[i].body;
    for (std::size_t j = 0; j < body.size(); ++j) {
      if (j > 0) out += ", ";
      out += atom_text(body[j]);
    }
    out += "\n";
    disjunction += (i > 0 ? " or " : "") + part;
  }
  return out + name + args + " = " + disjunction + "\n";
}

}  // namespace pilp
