#include "coded.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <unordered_map>

namespace pilp::detail {

namespace {

constexpr ArgCode kUnbound = INT32_MIN;

}  // namespace

SymbolCodes::SymbolCodes(const std::vector<const Clause*>& clauses) {
  auto add_atom = [this](const Atom& atom) {
    add_predicate(atom.predicate);
    for (const auto& t : atom.args) {
      if (!t.is_var()) add_constant(t.name);
    }
  };
  for (const Clause* c : clauses) {
    add_atom(c->head);
    for (const auto& a : c->body) add_atom(a);
  }
  freeze();
}

void SymbolCodes::freeze() {
  pred_names_.clear();
  const_names_.clear();
  std::int32_t i = 0;
  for (auto& [name, code] : preds_) {
    code = i++;
    pred_names_.push_back(name);
  }
  const auto n = static_cast<std::int32_t>(consts_.size());
  i = 0;
  for (auto& [name, code] : consts_) {
    code = -(n - i);
    ++i;
    const_names_.push_back(name);
  }
}

std::int32_t SymbolCodes::predicate(const std::string& name) const {
  auto it = preds_.find(name);
  if (it == preds_.end()) throw Error("unknown predicate '" + name + "'");
  return it->second;
}

ArgCode SymbolCodes::constant(const std::string& name) const {
  auto it = consts_.find(name);
  if (it == consts_.end()) throw Error("unknown constant '" + name + "'");
  return it->second;
}

const std::string& SymbolCodes::constant_name(ArgCode code) const {
  const auto n = static_cast<ArgCode>(const_names_.size());
  return const_names_.at(static_cast<std::size_t>(code + n));
}

CodedClause SymbolCodes::encode(const Clause& clause) const {
  std::unordered_map<std::string, ArgCode> vars;
  CodedClause out;
  auto encode_atom = [&](const Atom& atom) {
    if (atom.arity() > kMaxArity) {
      throw Error("predicate '" + atom.predicate + "' exceeds the maximum arity of " +
                  std::to_string(kMaxArity));
    }
    CodedAtom a;
    a.pred = predicate(atom.predicate);
    a.arity = static_cast<std::int32_t>(atom.arity());
    for (std::size_t i = 0; i < atom.arity(); ++i) {
      const Term& t = atom.args[i];
      if (t.is_var()) {
        auto [it, inserted] = vars.emplace(t.name, static_cast<ArgCode>(vars.size()));
        a.args[i] = it->second;
      } else {
        a.args[i] = constant(t.name);
      }
    }
    return a;
  };
  out.head = encode_atom(clause.head);
  out.body.reserve(clause.body.size());
  for (const auto& b : clause.body) out.body.push_back(encode_atom(b));
  out.num_vars = static_cast<std::int32_t>(vars.size());
  return out;
}

Clause SymbolCodes::decode(const CodedClause& clause) const {
  auto decode_atom = [this](const CodedAtom& a) {
    Atom atom;
    atom.predicate = predicate_name(a.pred);
    for (std::int32_t i = 0; i < a.arity; ++i) {
      const ArgCode code = a.args[static_cast<std::size_t>(i)];
      atom.args.push_back(code >= 0 ? Term::var(variable_name(code))
                                    : Term::constant(constant_name(code)));
    }
    return atom;
  };
  Clause out;
  out.head = decode_atom(clause.head);
  for (const auto& b : clause.body) out.body.push_back(decode_atom(b));
  return out;
}

std::string variable_name(std::int32_t index) { return "V" + std::to_string(index); }

CodedClause canonical(const CodedClause& clause) {
  // Head variables keep their first-occurrence numbering; the body-only
  // variables are tried in every order and the smallest sorted body wins.
  std::vector<ArgCode> remap(static_cast<std::size_t>(clause.num_vars), kUnbound);
  ArgCode next = 0;
  for (std::int32_t i = 0; i < clause.head.arity; ++i) {
    const ArgCode v = clause.head.args[static_cast<std::size_t>(i)];
    if (v >= 0 && remap[static_cast<std::size_t>(v)] == kUnbound) remap[static_cast<std::size_t>(v)] = next++;
  }
  const ArgCode head_vars = next;
  std::vector<ArgCode> body_only;
  for (const auto& a : clause.body) {
    for (std::int32_t i = 0; i < a.arity; ++i) {
      const ArgCode v = a.args[static_cast<std::size_t>(i)];
      if (v >= 0 && remap[static_cast<std::size_t>(v)] == kUnbound) {
        remap[static_cast<std::size_t>(v)] = -2;  // placeholder, assigned per permutation
        body_only.push_back(v);
      }
    }
  }

  CodedClause out;
  out.head = clause.head;
  for (std::int32_t i = 0; i < out.head.arity; ++i) {
    ArgCode& v = out.head.args[static_cast<std::size_t>(i)];
    if (v >= 0) v = remap[static_cast<std::size_t>(v)];
  }
  out.num_vars = head_vars + static_cast<ArgCode>(body_only.size());

  std::vector<ArgCode> perm(body_only.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<CodedAtom> candidate;
  bool first = true;
  do {
    for (std::size_t j = 0; j < body_only.size(); ++j) {
      remap[static_cast<std::size_t>(body_only[j])] = head_vars + perm[j];
    }
    candidate.clear();
    for (const auto& a : clause.body) {
      CodedAtom b = a;
      for (std::int32_t i = 0; i < b.arity; ++i) {
        ArgCode& v = b.args[static_cast<std::size_t>(i)];
        if (v >= 0) v = remap[static_cast<std::size_t>(v)];
      }
      candidate.push_back(b);
    }
    std::sort(candidate.begin(), candidate.end());
    candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
    if (first || candidate < out.body) {
      out.body = candidate;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

struct Matcher {
  const CodedClause& general;
  const CodedClause& specific;
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<ArgCode> binding;
  std::vector<char> used;

  bool match(std::size_t depth) {
    if (depth == order.size()) return true;
    const CodedAtom& g = general.body[order[depth]];
    for (std::size_t si : candidates[order[depth]]) {
      if (used[si]) continue;
      const CodedAtom& s = specific.body[si];
      ArgCode bound_here[kMaxArity];
      std::size_t nbound = 0;
      bool ok = true;
      for (std::int32_t i = 0; i < g.arity && ok; ++i) {
        const ArgCode ga = g.args[static_cast<std::size_t>(i)];
        const ArgCode sa = s.args[static_cast<std::size_t>(i)];
        if (ga < 0) {
          ok = ga == sa;
        } else if (binding[static_cast<std::size_t>(ga)] == kUnbound) {
          binding[static_cast<std::size_t>(ga)] = sa;
          bound_here[nbound++] = ga;
        } else {
          ok = binding[static_cast<std::size_t>(ga)] == sa;
        }
      }
      if (ok) {
        used[si] = 1;
        if (match(depth + 1)) return true;
        used[si] = 0;
      }
      for (std::size_t k = 0; k < nbound; ++k) binding[static_cast<std::size_t>(bound_here[k])] = kUnbound;
    }
    return false;
  }
};

}  // namespace

bool subsumes(const CodedClause& general, const CodedClause& specific) {
  if (general.head.pred != specific.head.pred || general.head.arity != specific.head.arity) return false;
  if (general.body.size() > specific.body.size()) return false;

  Matcher m{general, specific, {}, {}, std::vector<ArgCode>(static_cast<std::size_t>(general.num_vars), kUnbound),
            std::vector<char>(specific.body.size(), 0)};
  for (std::int32_t i = 0; i < general.head.arity; ++i) {
    const ArgCode ga = general.head.args[static_cast<std::size_t>(i)];
    const ArgCode sa = specific.head.args[static_cast<std::size_t>(i)];
    if (ga < 0) {
      if (ga != sa) return false;
    } else if (m.binding[static_cast<std::size_t>(ga)] == kUnbound) {
      m.binding[static_cast<std::size_t>(ga)] = sa;
    } else if (m.binding[static_cast<std::size_t>(ga)] != sa) {
      return false;
    }
  }

  m.candidates.resize(general.body.size());
  for (std::size_t gi = 0; gi < general.body.size(); ++gi) {
    const CodedAtom& g = general.body[gi];
    for (std::size_t si = 0; si < specific.body.size(); ++si) {
      const CodedAtom& s = specific.body[si];
      if (s.pred == g.pred && s.arity == g.arity) m.candidates[gi].push_back(si);
    }
    if (m.candidates[gi].empty()) return false;
  }
  m.order.resize(general.body.size());
  std::iota(m.order.begin(), m.order.end(), std::size_t{0});
  std::stable_sort(m.order.begin(), m.order.end(), [&](std::size_t a, std::size_t b) {
    return m.candidates[a].size() < m.candidates[b].size();
  });
  return m.match(0);
}

}  // namespace pilp::detail
