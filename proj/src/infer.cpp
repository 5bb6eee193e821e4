#include "pilp/infer.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

#include "pilp/rewrite.hpp"

namespace pilp {

double prob_and(std::span<const double> xs) {
  double p = 1.0;
  for (double x : xs) p *= x;
  return p;
}

double prob_or(std::span<const double> xs, Provenance provenance) {
  if (provenance == Provenance::Basic) {
    double s = 0.0;
    for (double x : xs) s += x;
    return std::min(1.0, s);
  }
  double miss = 1.0;
  for (double x : xs) miss *= 1.0 - x;
  return 1.0 - miss;
}

double prob_not(double x) { return 1.0 - x; }

namespace {

std::string fact_key(std::int32_t pred, std::span<const std::int32_t> args) {
  std::string key(sizeof(std::int32_t) * (args.size() + 1), '\0');
  std::memcpy(key.data(), &pred, sizeof pred);
  if (!args.empty()) std::memcpy(key.data() + sizeof pred, args.data(), sizeof(std::int32_t) * args.size());
  return key;
}

}  // namespace

GroundedExample::GroundedExample(const ExampleRecord& example) : id_(example.id), label_(example.label) {
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& f : example.facts) {
    if (!f.atom.is_ground()) throw Error("fact " + to_string(f.atom) + " is not ground");
    auto [it, inserted] = seen.emplace(to_string(f.atom), facts_.size());
    if (inserted) {
      facts_.push_back(f);
    } else {
      facts_[it->second].prob = std::max(facts_[it->second].prob, f.prob);
    }
  }
  index();
}

void GroundedExample::index() {
  auto intern_constant = [this](const std::string& name) {
    auto [it, inserted] = constant_ids_.emplace(name, static_cast<std::int32_t>(constants_.size()));
    if (inserted) constants_.push_back(name);
    return it->second;
  };
  intern_constant(id_);
  for (const auto& f : facts_) {
    auto [pit, pinserted] = pred_ids_.emplace(f.atom.predicate, static_cast<std::int32_t>(by_pred_.size()));
    if (pinserted) by_pred_.emplace_back();
    Fact coded{pit->second, {}, f.prob};
    for (const auto& t : f.atom.args) coded.args.push_back(intern_constant(t.name));
    by_pred_[static_cast<std::size_t>(coded.pred)].push_back(coded_.size());
    by_key_.emplace(fact_key(coded.pred, coded.args), coded_.size());
    coded_.push_back(std::move(coded));
  }
}

GroundedExample GroundedExample::thresholded(double threshold) const {
  GroundedExample out;
  out.id_ = id_;
  out.label_ = label_;
  for (const auto& f : facts_) {
    if (f.prob >= threshold) out.facts_.push_back(ProbFact{1.0, f.atom});
  }
  out.index();
  return out;
}

/// Backtracking grounding of one clause against one example.
class ProofEnumerator {
 public:
  ProofEnumerator(const Clause& clause, const GroundedExample& ex, std::string_view query) : ex_(ex) {
    if (clause.head.arity() != 1) throw Error("only unary head predicates can be queried");
    const auto vars = clause.variables();
    auto var_index = [&vars](const std::string& name) {
      return static_cast<std::int32_t>(std::find(vars.begin(), vars.end(), name) - vars.begin());
    };
    binding_.assign(vars.size(), kUnbound);

    auto qit = ex.constant_ids_.find(std::string(query));
    if (qit == ex.constant_ids_.end()) {
      feasible_ = false;
      return;
    }
    const Term& head_arg = clause.head.args[0];
    if (head_arg.is_var()) {
      binding_[static_cast<std::size_t>(var_index(head_arg.name))] = qit->second;
    } else if (head_arg.name != query) {
      feasible_ = false;
      return;
    }

    std::vector<Goal> goals;
    for (const auto& a : clause.body) {
      if (a.predicate == kAlwaysTrue) {
        // The domain is never empty, so always_true over a variable holds for
        // every binding and contributes no fact to a proof.
        if (a.arity() == 1 && !a.args[0].is_var() && !ex.constant_ids_.count(a.args[0].name)) feasible_ = false;
        continue;
      }
      auto pit = ex.pred_ids_.find(a.predicate);
      if (pit == ex.pred_ids_.end()) {
        feasible_ = false;
        return;
      }
      Goal g{pit->second, {}};
      for (const auto& t : a.args) {
        if (t.is_var()) {
          g.args.push_back(var_index(t.name));
        } else {
          auto cit = ex.constant_ids_.find(t.name);
          if (cit == ex.constant_ids_.end()) {
            feasible_ = false;
            return;
          }
          g.args.push_back(-1 - cit->second);
        }
      }
      goals.push_back(std::move(g));
    }
    order_goals(std::move(goals));
  }

  /// Raw fact-id sets, one per satisfying substitution (sorted, unique ids).
  std::vector<std::vector<std::size_t>> all() {
    std::vector<std::vector<std::size_t>> out;
    if (feasible_) {
      run(0, [&out, this] {
        std::vector<std::size_t> ids = stack_;
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        out.push_back(std::move(ids));
        return false;
      });
    }
    return out;
  }

  bool any() {
    return feasible_ && run(0, [] { return true; });
  }

 private:
  static constexpr std::int32_t kUnbound = -1;

  struct Goal {
    std::int32_t pred;
    std::vector<std::int32_t> args;  // >= 0 variable, < 0 constant -(id+1)
  };

  void order_goals(std::vector<Goal> goals) {
    std::vector<char> bound(binding_.size(), 0);
    for (std::size_t v = 0; v < binding_.size(); ++v) bound[v] = binding_[v] != kUnbound;
    while (!goals.empty()) {
      auto score = [&](const Goal& g) {
        std::size_t nb = 0;
        for (auto a : g.args) nb += (a < 0 || bound[static_cast<std::size_t>(a)]) ? 1 : 0;
        return nb;
      };
      std::size_t best = 0;
      for (std::size_t i = 1; i < goals.size(); ++i) {
        const std::size_t si = score(goals[i]);
        const std::size_t sb = score(goals[best]);
        if (si > sb || (si == sb && ex_.by_pred_[static_cast<std::size_t>(goals[i].pred)].size() <
                                        ex_.by_pred_[static_cast<std::size_t>(goals[best].pred)].size())) {
          best = i;
        }
      }
      for (auto a : goals[best].args) {
        if (a >= 0) bound[static_cast<std::size_t>(a)] = 1;
      }
      goals_.push_back(std::move(goals[best]));
      goals.erase(goals.begin() + static_cast<std::ptrdiff_t>(best));
    }
  }

  template <typename OnProof>
  bool run(std::size_t depth, const OnProof& on_proof) {
    if (depth == goals_.size()) return on_proof();
    const Goal& g = goals_[depth];

    bool all_bound = true;
    for (auto a : g.args) all_bound = all_bound && (a < 0 || binding_[static_cast<std::size_t>(a)] != kUnbound);
    if (all_bound) {
      std::vector<std::int32_t> args;
      args.reserve(g.args.size());
      for (auto a : g.args) args.push_back(a < 0 ? -1 - a : binding_[static_cast<std::size_t>(a)]);
      auto it = ex_.by_key_.find(fact_key(g.pred, args));
      if (it == ex_.by_key_.end() || ex_.coded_[it->second].prob <= 0.0) return false;
      stack_.push_back(it->second);
      const bool stop = run(depth + 1, on_proof);
      stack_.pop_back();
      return stop;
    }

    for (std::size_t fid : ex_.by_pred_[static_cast<std::size_t>(g.pred)]) {
      const auto& fact = ex_.coded_[fid];
      if (fact.prob <= 0.0 || fact.args.size() != g.args.size()) continue;
      std::int32_t newly[8];
      std::size_t nnew = 0;
      bool ok = true;
      for (std::size_t i = 0; i < g.args.size() && ok; ++i) {
        const std::int32_t a = g.args[i];
        if (a < 0) {
          ok = -1 - a == fact.args[i];
        } else if (binding_[static_cast<std::size_t>(a)] == kUnbound) {
          binding_[static_cast<std::size_t>(a)] = fact.args[i];
          newly[nnew++] = a;
        } else {
          ok = binding_[static_cast<std::size_t>(a)] == fact.args[i];
        }
      }
      bool stop = false;
      if (ok) {
        stack_.push_back(fid);
        stop = run(depth + 1, on_proof);
        stack_.pop_back();
      }
      for (std::size_t k = 0; k < nnew; ++k) binding_[static_cast<std::size_t>(newly[k])] = kUnbound;
      if (stop) return true;
    }
    return false;
  }

  const GroundedExample& ex_;
  bool feasible_ = true;
  std::vector<Goal> goals_;
  std::vector<std::int32_t> binding_;
  std::vector<std::size_t> stack_;
};

namespace {

std::vector<Proof> to_proofs(std::vector<std::vector<std::size_t>> sets, const GroundedExample& ex) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Proof> out;
  out.reserve(sets.size());
  std::vector<double> probs;
  for (auto& s : sets) {
    probs.clear();
    for (std::size_t id : s) probs.push_back(ex.facts()[id].prob);
    const double p = prob_and(probs);
    if (p > 0.0) out.push_back(Proof{std::move(s), p});
  }
  std::stable_sort(out.begin(), out.end(), [](const Proof& a, const Proof& b) { return a.prob > b.prob; });
  return out;
}

std::vector<Clause> clauses_for(const Program& program, const InferenceConfig& config) {
  return config.normalize ? normalize(program).clauses : program.clauses();
}

}  // namespace

std::vector<Proof> enumerate_proofs(const Clause& clause, const GroundedExample& example, std::string_view query) {
  return to_proofs(ProofEnumerator(clause, example, query).all(), example);
}

std::vector<Proof> enumerate_proofs(const Clause& clause, const ExampleRecord& example, std::string_view query) {
  return enumerate_proofs(clause, GroundedExample(example), query);
}

std::vector<Proof> program_proofs(const Program& program, const GroundedExample& example,
                                  const InferenceConfig& config) {
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& c : clauses_for(program, config)) {
    auto more = ProofEnumerator(c, example, example.id()).all();
    sets.insert(sets.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return to_proofs(std::move(sets), example);
}

double combine_proofs(std::span<const Proof> proofs, const InferenceConfig& config) {
  std::vector<double> probs;
  probs.reserve(proofs.size());
  for (const auto& p : proofs) probs.push_back(p.prob);
  std::sort(probs.begin(), probs.end(), std::greater<>());
  if (config.top_k && probs.size() > *config.top_k) probs.resize(*config.top_k);
  return prob_or(probs, config.provenance);
}

double evaluate(const Program& program, const GroundedExample& example, const InferenceConfig& config) {
  return combine_proofs(program_proofs(program, example, config), config);
}

double evaluate(const Program& program, const ExampleRecord& example, const InferenceConfig& config) {
  return evaluate(program, GroundedExample(example), config);
}

bool entails(const Program& program, const GroundedExample& example) {
  return std::any_of(program.clauses().begin(), program.clauses().end(),
                     [&](const Clause& c) { return ProofEnumerator(c, example, example.id()).any(); });
}

bool evaluate_binary(const Program& program, const GroundedExample& example, double bk_threshold) {
  return entails(program, example.thresholded(bk_threshold));
}

bool evaluate_binary(const Program& program, const ExampleRecord& example, double bk_threshold) {
  return evaluate_binary(program, GroundedExample(example), bk_threshold);
}

}  // namespace pilp
