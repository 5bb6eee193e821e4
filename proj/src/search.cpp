#include "pilp/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <map>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_set>

#include "coded.hpp"
#include "pilp/parser.hpp"

namespace pilp {

using detail::ArgCode;
using detail::CodedAtom;
using detail::CodedClause;

namespace {

/// Name interner for the constraint store. Codes only need to be consistent
/// within one store, so they are handed out in insertion order.
class Interner {
 public:
  CodedClause intern(const Clause& clause) {
    return encode(clause, [this](const std::string& n) { return intern_name(preds_, n); },
                  [this](const std::string& n) { return -1 - intern_name(consts_, n); });
  }

  /// Unknown names get codes no interned clause can use.
  CodedClause probe(const Clause& clause) const {
    std::unordered_map<std::string, std::int32_t> extra_preds;
    std::unordered_map<std::string, std::int32_t> extra_consts;
    auto pred = [&](const std::string& n) {
      auto it = preds_.find(n);
      if (it != preds_.end()) return it->second;
      return kFresh + extra_preds.emplace(n, static_cast<std::int32_t>(extra_preds.size())).first->second;
    };
    auto constant = [&](const std::string& n) {
      auto it = consts_.find(n);
      if (it != consts_.end()) return -1 - it->second;
      return -1 - kFresh - extra_consts.emplace(n, static_cast<std::int32_t>(extra_consts.size())).first->second;
    };
    return encode(clause, pred, constant);
  }

 private:
  static constexpr std::int32_t kFresh = 1 << 28;

  static std::int32_t intern_name(std::unordered_map<std::string, std::int32_t>& m, const std::string& n) {
    return m.emplace(n, static_cast<std::int32_t>(m.size())).first->second;
  }

  template <typename Pred, typename Const>
  static CodedClause encode(const Clause& clause, Pred&& pred, Const&& constant) {
    std::unordered_map<std::string, ArgCode> vars;
    auto atom = [&](const Atom& a) {
      CodedAtom out;
      out.pred = pred(a.predicate);
      out.arity = static_cast<std::int32_t>(a.arity());
      for (std::size_t i = 0; i < a.arity(); ++i) {
        const Term& t = a.args[i];
        out.args[i] = t.is_var() ? vars.emplace(t.name, static_cast<ArgCode>(vars.size())).first->second
                                 : constant(t.name);
      }
      return out;
    };
    CodedClause out;
    out.head = atom(clause.head);
    for (const auto& b : clause.body) out.body.push_back(atom(b));
    std::sort(out.body.begin(), out.body.end());
    out.body.erase(std::unique(out.body.begin(), out.body.end()), out.body.end());
    out.num_vars = static_cast<std::int32_t>(vars.size());
    return out;
  }

  std::unordered_map<std::string, std::int32_t> preds_;
  std::unordered_map<std::string, std::int32_t> consts_;
};

std::vector<std::int32_t> body_predicates(const CodedClause& c) {
  std::vector<std::int32_t> out;
  out.reserve(c.body.size());
  for (const auto& a : c.body) out.push_back(a.pred);
  std::sort(out.begin(), out.end());
  return out;
}

std::string multiset_key(const CodedAtom& head, std::span<const std::int32_t> preds) {
  std::string key(sizeof(std::int32_t) * (preds.size() + 2), '\0');
  std::memcpy(key.data(), &head.pred, sizeof head.pred);
  std::memcpy(key.data() + sizeof(std::int32_t), &head.arity, sizeof head.arity);
  if (!preds.empty()) std::memcpy(key.data() + 2 * sizeof(std::int32_t), preds.data(), sizeof(std::int32_t) * preds.size());
  return key;
}

/// Keys of every non-empty sub-multiset of the body predicates.
std::vector<std::string> sub_multiset_keys(const CodedClause& c) {
  const auto preds = body_predicates(c);
  const std::size_t n = preds.size();
  std::unordered_set<std::string> seen;
  std::vector<std::string> out;
  std::vector<std::int32_t> sub;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    sub.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(preds[i]);
    }
    std::string key = multiset_key(c.head, sub);
    if (seen.insert(key).second) out.push_back(std::move(key));
  }
  return out;
}

bool coded_specializes(std::span<const CodedClause> h2, std::span<const CodedClause> h1) {
  return std::all_of(h2.begin(), h2.end(), [&](const CodedClause& c) {
    return std::any_of(h1.begin(), h1.end(), [&](const CodedClause& a) { return detail::subsumes(a, c); });
  });
}

}  // namespace

struct ConstraintStore::Impl {
  std::vector<ConstraintRecord> records;
  std::vector<std::vector<CodedClause>> coded;
  Interner names;
  std::unordered_map<std::string, std::vector<std::size_t>> spec_by_key;
  std::unordered_map<std::string, std::vector<std::size_t>> gen_by_key;
  std::map<std::size_t, std::vector<std::size_t>> gen_by_length;
  std::vector<std::size_t> multi_spec;
  std::vector<std::size_t> multi_gen;

  bool prunes(const Program& candidate) const {
    std::vector<CodedClause> cand;
    cand.reserve(candidate.clauses().size());
    for (const auto& c : candidate.clauses()) cand.push_back(names.probe(c));

    // Specializations of a one-clause anchor: the anchor subsumes every clause.
    for (const auto& key : sub_multiset_keys(cand.front())) {
      auto it = spec_by_key.find(key);
      if (it == spec_by_key.end()) continue;
      for (std::size_t r : it->second) {
        const CodedClause& a = coded[r].front();
        if (std::all_of(cand.begin(), cand.end(), [&a](const CodedClause& c) { return detail::subsumes(a, c); })) {
          return true;
        }
      }
    }
    for (std::size_t r : multi_spec) {
      if (coded_specializes(cand, coded[r])) return true;
    }

    // Generalizations of a one-clause anchor: some clause subsumes the anchor.
    for (const auto& c : cand) {
      const auto preds = body_predicates(c);
      auto it = gen_by_key.find(multiset_key(c.head, preds));
      if (it != gen_by_key.end()) {
        for (std::size_t r : it->second) {
          if (detail::subsumes(c, coded[r].front())) return true;
        }
      }
      for (auto lit = gen_by_length.upper_bound(c.body.size()); lit != gen_by_length.end(); ++lit) {
        for (std::size_t r : lit->second) {
          const CodedClause& a = coded[r].front();
          const auto apreds = body_predicates(a);
          if (a.head.pred == c.head.pred && std::includes(apreds.begin(), apreds.end(), preds.begin(), preds.end()) &&
              detail::subsumes(c, a)) {
            return true;
          }
        }
      }
    }
    for (std::size_t r : multi_gen) {
      if (coded_specializes(coded[r], cand)) return true;
    }
    return false;
  }
};

ConstraintStore::ConstraintStore() : impl_(std::make_unique<Impl>()) {}
ConstraintStore::~ConstraintStore() = default;
ConstraintStore::ConstraintStore(ConstraintStore&&) noexcept = default;
ConstraintStore& ConstraintStore::operator=(ConstraintStore&&) noexcept = default;

void ConstraintStore::add(ConstraintRecord record) {
  Impl& s = *impl_;
  const std::size_t r = s.records.size();
  std::vector<CodedClause> coded;
  for (const auto& c : record.anchor.clauses()) coded.push_back(s.names.intern(c));
  const bool single = coded.size() == 1;
  if (record.kind == ConstraintKind::PruneSpecializations) {
    if (single) {
      s.spec_by_key[multiset_key(coded.front().head, body_predicates(coded.front()))].push_back(r);
    } else {
      s.multi_spec.push_back(r);
    }
  } else if (single) {
    s.gen_by_key[multiset_key(coded.front().head, body_predicates(coded.front()))].push_back(r);
    s.gen_by_length[coded.front().body.size()].push_back(r);
  } else {
    s.multi_gen.push_back(r);
  }
  s.coded.push_back(std::move(coded));
  s.records.push_back(std::move(record));
}

void ConstraintStore::add(std::vector<ConstraintRecord> records) {
  for (auto& r : records) add(std::move(r));
}

bool ConstraintStore::prunes(const Program& candidate) const { return impl_->prunes(candidate); }

const std::vector<ConstraintRecord>& ConstraintStore::records() const noexcept { return impl_->records; }

bool prune(const Program& candidate, const ConstraintStore& store) { return store.prunes(candidate); }

struct Generator::Impl {
  Bias bias;
  detail::SymbolCodes codes;
  CodedAtom head;
  std::vector<CodedAtom> universe;
  std::map<std::size_t, std::vector<CodedClause>> by_length;

  std::size_t size = 0;
  std::size_t max_size = 0;
  std::vector<std::vector<std::size_t>> shapes;
  std::size_t shape = 0;
  std::vector<std::size_t> idx;
  bool positioned = false;
  std::size_t pruned = 0;

  explicit Impl(Bias b) : bias(std::move(b)) {
    bias.validate();
    codes.add_predicate(bias.head.name);
    for (const auto& p : bias.body) codes.add_predicate(p.name);
    codes.freeze();

    head.pred = codes.predicate(bias.head.name);
    head.arity = static_cast<std::int32_t>(bias.head.arity);
    for (std::size_t i = 0; i < bias.head.arity; ++i) head.args[i] = static_cast<ArgCode>(i);

    const auto nv = static_cast<ArgCode>(bias.max_vars);
    for (const auto& p : bias.body) {
      CodedAtom a;
      a.pred = codes.predicate(p.name);
      a.arity = static_cast<std::int32_t>(p.arity);
      std::array<ArgCode, detail::kMaxArity> t{};
      for (;;) {
        a.args = t;
        universe.push_back(a);
        std::size_t i = p.arity;
        while (i > 0 && ++t[i - 1] == nv) t[--i] = 0;
        if (i == 0) break;
      }
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    max_size = bias.max_clauses * (bias.max_body + 1);
    size = 1;
  }

  bool well_formed(std::span<const std::size_t> pick) const {
    const auto head_vars = static_cast<ArgCode>(bias.head.arity);
    std::vector<ArgCode> parent(bias.max_vars);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](ArgCode v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      return v;
    };
    std::vector<char> used(bias.max_vars, 0);
    for (std::size_t i : pick) {
      const CodedAtom& a = universe[i];
      for (std::int32_t k = 0; k < a.arity; ++k) {
        const ArgCode v = a.args[static_cast<std::size_t>(k)];
        used[static_cast<std::size_t>(v)] = 1;
        parent[static_cast<std::size_t>(find(v))] = find(a.args[0]);
      }
    }
    for (ArgCode v = 1; v < head_vars; ++v) parent[static_cast<std::size_t>(find(v))] = find(0);
    std::size_t count = 0;
    while (count < used.size() && used[count]) ++count;
    for (std::size_t v = count; v < used.size(); ++v) {
      if (used[v]) return false;
    }
    if (count < static_cast<std::size_t>(head_vars)) return false;
    const ArgCode root = find(0);
    return std::all_of(pick.begin(), pick.end(), [&](std::size_t i) { return find(universe[i].args[0]) == root; });
  }

  const std::vector<CodedClause>& clauses(std::size_t length) {
    auto it = by_length.find(length);
    if (it != by_length.end()) return it->second;
    std::set<CodedClause> found;
    std::vector<std::size_t> pick(length);
    const std::size_t n = universe.size();
    if (length <= n) {
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        if (well_formed(pick)) {
          CodedClause c;
          c.head = head;
          for (std::size_t i : pick) c.body.push_back(universe[i]);
          ArgCode top = -1;
          for (const auto& a : c.body) {
            for (std::int32_t k = 0; k < a.arity; ++k) top = std::max(top, a.args[static_cast<std::size_t>(k)]);
          }
          c.num_vars = std::max<ArgCode>(top + 1, head.arity);
          found.insert(detail::canonical(c));
        }
        std::size_t i = length;
        while (i > 0 && pick[i - 1] == n - length + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < length; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return by_length.emplace(length, std::vector<CodedClause>(found.begin(), found.end())).first->second;
  }

  void make_shapes() {
    shapes.clear();
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t remaining, std::size_t min_len) -> void {
      if (remaining == 0) {
        shapes.push_back(cur);
        return;
      }
      if (cur.size() == bias.max_clauses) return;
      for (std::size_t l = min_len; l <= bias.max_body && l + 1 <= remaining; ++l) {
        cur.push_back(l);
        self(self, remaining - l - 1, l);
        cur.pop_back();
      }
    };
    rec(rec, size, 1);
    std::stable_sort(shapes.begin(), shapes.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
  }

  /// Smallest valid indices from position j onwards.
  bool fill(std::size_t j) {
    const auto& s = shapes[shape];
    for (; j < s.size(); ++j) {
      idx[j] = (j > 0 && s[j] == s[j - 1]) ? idx[j - 1] + 1 : 0;
      if (idx[j] >= clauses(s[j]).size()) return false;
    }
    return true;
  }

  bool advance_within_shape() {
    const auto& s = shapes[shape];
    for (std::size_t j = s.size(); j-- > 0;) {
      if (++idx[j] < clauses(s[j]).size() && fill(j + 1)) return true;
    }
    return false;
  }

  bool start_shape() {
    while (shape < shapes.size()) {
      idx.assign(shapes[shape].size(), 0);
      if (fill(0)) return true;
      ++shape;
    }
    return false;
  }

  bool step() {
    if (positioned && advance_within_shape()) return true;
    if (positioned) ++shape;
    positioned = true;
    for (;;) {
      if (shape < shapes.size() && start_shape()) return true;
      if (++size > max_size) return false;
      make_shapes();
      shape = 0;
    }
  }

  std::vector<const CodedClause*> current() {
    std::vector<const CodedClause*> out;
    const auto& s = shapes[shape];
    for (std::size_t j = 0; j < s.size(); ++j) out.push_back(&clauses(s[j])[idx[j]]);
    return out;
  }

  std::optional<Program> next(const ConstraintStore& store) {
    while (step()) {
      const auto parts = current();
      bool redundant = false;
      for (std::size_t a = 0; a < parts.size() && !redundant; ++a) {
        for (std::size_t b = 0; b < parts.size() && !redundant; ++b) {
          redundant = a != b && detail::subsumes(*parts[a], *parts[b]);
        }
      }
      if (redundant) continue;
      std::vector<Clause> cl;
      for (const auto* c : parts) cl.push_back(codes.decode(*c));
      std::sort(cl.begin(), cl.end());
      Program p(std::move(cl));
      if (store.prunes(p)) {
        ++pruned;
        continue;
      }
      return p;
    }
    return std::nullopt;
  }
};

Generator::Generator(Bias bias) : impl_(std::make_unique<Impl>(std::move(bias))) {}
Generator::~Generator() = default;
Generator::Generator(Generator&&) noexcept = default;
Generator& Generator::operator=(Generator&&) noexcept = default;

std::optional<Program> Generator::next(const ConstraintStore& store) { return impl_->next(store); }

std::size_t Generator::pruned() const noexcept { return impl_->pruned; }

std::vector<Clause> Generator::clauses_of_length(std::size_t body_length) {
  std::vector<Clause> out;
  for (const auto& c : impl_->clauses(body_length)) out.push_back(impl_->codes.decode(c));
  return out;
}

Tester::Tester(std::span<const ExampleRecord> examples, const SearchSettings& settings) : settings_(settings) {
  if (examples.empty()) throw Error("no training examples");
  examples_.reserve(examples.size());
  for (const auto& e : examples) {
    GroundedExample g(e);
    examples_.push_back(settings.tester == TesterKind::Binary ? g.thresholded(settings.bk_threshold) : std::move(g));
    if (e.label == Label::Negative) ++negatives_;
  }
}

TestResult Tester::test(const Program& program) const {
  std::vector<Prediction> preds;
  preds.reserve(examples_.size());
  for (const auto& e : examples_) {
    const double p = settings_.tester == TesterKind::Binary ? (entails(program, e) ? 1.0 : 0.0)
                                                            : evaluate(program, e, settings_.inference);
    preds.push_back(Prediction{e.id(), e.label(), p});
  }
  return make_test_result(std::move(preds));
}

double Tester::cost(const Program& program, const TestResult& result) const {
  return settings_.cost == CostKind::Mdl ? mdl(program, result.confusion) : bce(result.per_example);
}

double Tester::empty_cost() const {
  if (settings_.cost == CostKind::Mdl) return static_cast<double>(positives());
  std::vector<Prediction> preds;
  for (const auto& e : examples_) preds.push_back(Prediction{e.id(), e.label(), 0.0});
  return bce(preds);
}

ScoredProgram score_program(const Program& program, const Tester& tester) {
  ScoredProgram s{program.canonical(), {}, 0.0, 0, {}};
  s.result = tester.test(s.program);
  s.cost = tester.cost(s.program, s.result);
  s.size = program_size(s.program);
  s.text = print_program(s.program);
  return s;
}

bool better(const ScoredProgram& a, const ScoredProgram& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.size != b.size) return a.size < b.size;
  return a.text < b.text;
}

std::vector<ConstraintRecord> constrain_combo(const TestResult& result, const Program& program) {
  std::vector<ConstraintRecord> out;
  const Confusion& c = result.confusion;
  if (c.fp > 0) out.push_back({ConstraintKind::PruneGeneralizations, program});
  if (c.fn > 0 || c.fp == 0) out.push_back({ConstraintKind::PruneSpecializations, program});
  return out;
}

std::vector<ConstraintRecord> constrain_noisycombo(const TestResult& result, const Program& program,
                                                   double noise_level, std::size_t n_neg) {
  std::vector<ConstraintRecord> out;
  const Confusion& c = result.confusion;
  if (static_cast<double>(c.fp) > noise_level * static_cast<double>(n_neg)) {
    out.push_back({ConstraintKind::PruneGeneralizations, program});
  }
  if (c.fp == 0) out.push_back({ConstraintKind::PruneSpecializations, program});
  return out;
}

std::vector<ConstraintRecord> constrain_maxsynth(const TestResult& result, const Program& program,
                                                 double best_cost) {
  std::vector<ConstraintRecord> out;
  const auto size = static_cast<double>(program_size(program));
  if (size >= best_cost) out.push_back({ConstraintKind::PruneGeneralizations, program});
  if (size + 1.0 + static_cast<double>(result.confusion.fn) >= best_cost) {
    out.push_back({ConstraintKind::PruneSpecializations, program});
  }
  return out;
}

bool is_promising(const ScoredProgram& scored, const SearchSettings& settings, std::size_t n_neg) {
  const Confusion& c = scored.result.confusion;
  if (c.tp == 0) return false;
  switch (settings.constrainer) {
    case ConstrainerKind::Combo:
      return c.fp == 0;
    case ConstrainerKind::NoisyCombo:
      return static_cast<double>(c.fp) <= settings.noise_level * static_cast<double>(n_neg);
    case ConstrainerKind::MaxSynth:
      return c.tp > c.fp + scored.size;
  }
  return false;
}

namespace {

Program union_of(const Program& a, const Program& b) {
  std::vector<Clause> cl = a.clauses();
  cl.insert(cl.end(), b.clauses().begin(), b.clauses().end());
  return Program(std::move(cl)).canonical();
}

}  // namespace

ScoredProgram combine(std::span<const ScoredProgram> promising, const ScoredProgram& best_tested,
                      const Tester& tester, std::size_t max_clauses) {
  if (promising.empty()) return best_tested;
  std::optional<ScoredProgram> current;
  double current_cost = tester.empty_cost();
  std::vector<char> used(promising.size(), 0);
  for (;;) {
    std::optional<ScoredProgram> pick;
    std::size_t pick_index = 0;
    for (std::size_t i = 0; i < promising.size(); ++i) {
      if (used[i]) continue;
      std::optional<ScoredProgram> cand;
      if (!current) {
        if (promising[i].program.clauses().size() > max_clauses) continue;
        cand = promising[i];
      } else {
        Program u = union_of(current->program, promising[i].program);
        if (u.clauses().size() > max_clauses || u == current->program) continue;
        cand = score_program(u, tester);
      }
      if (!pick || better(*cand, *pick)) {
        pick = std::move(cand);
        pick_index = i;
      }
    }
    if (!pick || !(pick->cost < current_cost)) break;
    used[pick_index] = 1;
    current_cost = pick->cost;
    current = std::move(pick);
  }
  return current ? *current : best_tested;
}

LearnResult learn(const Task& task, const SearchSettings& settings) {
  if (settings.noise_level < 0.0 || settings.noise_level >= 1.0) throw Error("noise_level must lie in [0, 1)");
  task.bias.validate();
  LearnResult out;
  if (settings.constrainer == ConstrainerKind::MaxSynth && task.examples.size() < 3) {
    out.warnings.push_back("maxsynth needs at least 3 training examples; its pruning bounds are disabled");
  }

  const Tester tester(task.examples, settings);
  Bias clause_bias = task.bias;
  clause_bias.max_clauses = 1;
  Generator gen(clause_bias);
  ConstraintStore store;

  std::optional<ScoredProgram> best;
  std::vector<ScoredProgram> pool;
  std::size_t improved_at = 0;
  double best_mdl = std::numeric_limits<double>::infinity();
  const auto start = std::chrono::steady_clock::now();
  const bool combo = settings.constrainer == ConstrainerKind::Combo;
  auto perfect = [](const ScoredProgram& s) { return s.result.confusion.fp == 0 && s.result.confusion.fn == 0; };
  auto offer = [&](ScoredProgram s, std::size_t size) {
    best_mdl = std::min(best_mdl, mdl(s.program, s.result.confusion));
    if (!best || better(s, *best)) {
      best = std::move(s);
      improved_at = size;
    }
  };

  out.status = LearnStatus::Exhausted;
  for (;;) {
    if (settings.max_iterations && out.iterations >= *settings.max_iterations) {
      out.status = LearnStatus::Budget;
      break;
    }
    if (settings.budget_seconds &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >= *settings.budget_seconds) {
      out.status = LearnStatus::Budget;
      break;
    }
    auto cand = gen.next(store);
    if (!cand) break;
    const std::size_t size = program_size(*cand);
    if (best) {
      const bool stop = (combo && perfect(*best) && size >= best->size) ||
                        (settings.cost == CostKind::Mdl && static_cast<double>(size) > best->cost) ||
                        (!combo && perfect(*best) && size > improved_at + 1);
      if (stop) {
        out.status = LearnStatus::Optimal;
        break;
      }
    }
    ++out.iterations;
    ScoredProgram scored = score_program(*cand, tester);
    ++out.tested;

    switch (settings.constrainer) {
      case ConstrainerKind::Combo:
        store.add(constrain_combo(scored.result, scored.program));
        break;
      case ConstrainerKind::NoisyCombo:
        store.add(constrain_noisycombo(scored.result, scored.program, settings.noise_level, tester.negatives()));
        break;
      case ConstrainerKind::MaxSynth:
        if (task.examples.size() >= 3) {
          const double bound = std::min(best_mdl, mdl(scored.program, scored.result.confusion));
          store.add(constrain_maxsynth(scored.result, scored.program, bound));
        }
        break;
    }

    const bool promising = is_promising(scored, settings, tester.negatives());
    if (promising) pool.push_back(scored);
    offer(std::move(scored), size);
    if (promising) {
      if (pool.size() > settings.max_promising) {
        auto worst = std::max_element(pool.begin(), pool.end(), better);
        pool.erase(worst);
      }
      offer(combine(pool, *best, tester, task.bias.max_clauses), size);
    }
  }

  out.pruned = gen.pruned();
  out.constraints = store.size();
  if (!best) {
    out.status = LearnStatus::NoSolution;
  } else {
    out.best = std::move(best);
  }
  return out;
}

const char* to_string(ConstrainerKind kind) {
  switch (kind) {
    case ConstrainerKind::Combo:
      return "combo";
    case ConstrainerKind::NoisyCombo:
      return "noisycombo";
    case ConstrainerKind::MaxSynth:
      return "maxsynth";
  }
  return "?";
}

const char* to_string(CostKind kind) { return kind == CostKind::Mdl ? "mdl" : "bce"; }

const char* to_string(TesterKind kind) { return kind == TesterKind::Binary ? "binary" : "neurosymbolic"; }

const char* to_string(LearnStatus status) {
  switch (status) {
    case LearnStatus::Optimal:
      return "optimal";
    case LearnStatus::Exhausted:
      return "exhausted";
    case LearnStatus::Budget:
      return "budget";
    case LearnStatus::NoSolution:
      return "no_solution";
  }
  return "?";
}

}  // namespace pilp
