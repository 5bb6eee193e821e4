#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "pilp/harness.hpp"
#include "pilp/infer.hpp"
#include "pilp/parser.hpp"

namespace pilp {

Program default_scene_target() {
  return parse_program_verbatim("f(A) :- has_object(A,B), vehicle(B), is_on(B,C), bridge(C).");
}

void SceneConfig::validate() const {
  auto rate = [](double r, const char* name) {
    if (!(r >= 0.0 && r <= 1.0)) throw Error(std::string(name) + " must lie in [0, 1]");
  };
  rate(relation_density, "relation_density");
  rate(near_miss_rate, "near_miss_rate");
  rate(noise.false_detection_rate, "false_detection_rate");
  rate(noise.miss_rate, "miss_rate");
  rate(noise.label_flip_rate, "label_flip_rate");
  if (noise.tp_spread < 0.0 || noise.fp_spread < 0.0) throw Error("confidence spreads must be non-negative");
  if (object_classes.empty()) throw Error("at least one object class is required");
  if (min_objects == 0 || min_objects > max_objects) throw Error("object count range is empty");
  if (target.head_arity() != 1) throw Error("the scene target must have a unary head");
}

Bias SceneConfig::bias() const {
  Bias b;
  b.head = {target.head_predicate(), 1};
  std::set<PredicateSignature> body{{"has_object", 2}};
  for (const auto& c : object_classes) body.insert({c, 1});
  for (const auto& r : relation_preds) body.insert({r, 2});
  for (const auto& c : target.clauses()) {
    for (const auto& a : c.body) body.insert({a.predicate, a.arity()});
  }
  b.body.assign(body.begin(), body.end());
  return b;
}

DetectorNoise noise_tier(std::string_view tier) {
  DetectorNoise n;
  if (tier == "none") return n;
  if (tier == "easy") {
    n.tp_mean = 0.85;
    n.tp_spread = 0.1;
    n.false_detection_rate = 0.05;
    n.miss_rate = 0.05;
  } else if (tier == "intermediate") {
    n.tp_mean = 0.75;
    n.tp_spread = 0.15;
    n.false_detection_rate = 0.15;
    n.miss_rate = 0.10;
  } else if (tier == "hard") {
    n.tp_mean = 0.65;
    n.tp_spread = 0.2;
    n.false_detection_rate = 0.25;
    n.miss_rate = 0.15;
    n.label_flip_rate = 0.06;
  } else {
    throw Error("unknown noise tier '" + std::string(tier) + "'");
  }
  return n;
}

std::vector<std::string> noise_tiers() { return {"none", "easy", "intermediate", "hard"}; }

namespace {

constexpr std::string_view kHasObject = "has_object";

struct Scene {
  std::string id;
  std::vector<std::string> objects;
  std::map<std::string, std::set<std::string>> classes;
  std::set<Atom> relations;

  std::string add_object() {
    objects.push_back("o" + std::to_string(objects.size() + 1));
    classes[objects.back()];
    return objects.back();
  }

  std::vector<ProbFact> ground_truth() const {
    std::vector<ProbFact> out;
    for (const auto& o : objects) {
      out.push_back({1.0, Atom{std::string(kHasObject), {Term::constant(id), Term::constant(o)}}});
      for (const auto& c : classes.at(o)) out.push_back({1.0, Atom{c, {Term::constant(o)}}});
    }
    for (const auto& r : relations) out.push_back({1.0, r});
    return out;
  }
};

class SceneBuilder {
 public:
  explicit SceneBuilder(const SceneConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    for (const auto& c : cfg.object_classes) class_set_.insert(c);
  }

  ExampleRecord positive(const std::string& id) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      Scene s = instantiate(id, pick_clause(), std::nullopt);
      fill(s);
      if (entailed(s)) return detect(s, Label::Positive);
    }
    throw Error("could not build a positive scene for the target pattern");
  }

  ExampleRecord negative(const std::string& id) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      Scene s;
      s.id = id;
      if (chance(cfg_.near_miss_rate)) {
        const Clause& c = pick_clause();
        s = instantiate(id, c, breakable(c));
      }
      fill(s);
      if (!entailed(s)) return detect(s, Label::Negative);
    }
    throw Error("could not build a negative scene; the target pattern is too general");
  }

 private:
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  const std::string& random_class() { return cfg_.object_classes[uniform(cfg_.object_classes.size())]; }

  const Clause& pick_clause() { return cfg_.target.clauses()[uniform(cfg_.target.clauses().size())]; }

  bool implicit(const Atom& a, const std::string& head_var) const {
    return a.predicate == kHasObject && a.arity() == 2 && a.args[0].is_var() && a.args[0].name == head_var;
  }

  /// A random literal of `c` that a near miss may break, if any.
  std::optional<std::size_t> breakable(const Clause& c) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      if (!implicit(c.body[i], c.head.args[0].name)) idx.push_back(i);
    }
    if (idx.empty()) return std::nullopt;
    return idx[uniform(idx.size())];
  }

  Scene instantiate(const std::string& id, const Clause& c, std::optional<std::size_t> broken) {
    Scene s;
    s.id = id;
    const std::string& head_var = c.head.args[0].name;
    std::map<std::string, std::string> binding;
    auto ground = [&](const Term& t) {
      if (!t.is_var()) return t.name;
      if (t.name == head_var) return id;
      auto it = binding.find(t.name);
      if (it == binding.end()) it = binding.emplace(t.name, s.add_object()).first;
      return it->second;
    };
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      const Atom& a = c.body[i];
      if (implicit(a, head_var)) {
        ground(a.args[1]);
        continue;
      }
      Atom g{a.predicate, {}};
      for (const auto& t : a.args) g.args.push_back(Term::constant(ground(t)));
      if (broken && *broken == i) {
        if (g.arity() == 1 && class_set_.count(g.predicate) && cfg_.object_classes.size() > 1) {
          std::string other = random_class();
          while (other == g.predicate) other = random_class();
          s.classes[g.args[0].name].insert(other);
        } else if (g.arity() == 2 && g.args[0] != g.args[1] && chance(0.5)) {
          std::swap(g.args[0], g.args[1]);
          s.relations.insert(std::move(g));
        }
        continue;
      }
      if (g.arity() == 1 && class_set_.count(g.predicate) && s.classes.count(g.args[0].name)) {
        s.classes[g.args[0].name].insert(g.predicate);
      } else {
        s.relations.insert(std::move(g));
      }
    }
    return s;
  }

  /// Distractor objects up to a random scene size, random classes for
  /// unlabeled objects and random relations.
  void fill(Scene& s) {
    const std::size_t target_n =
        cfg_.min_objects + uniform(cfg_.max_objects - cfg_.min_objects + 1);
    while (s.objects.size() < target_n) s.add_object();
    for (const auto& o : s.objects) {
      if (s.classes[o].empty()) s.classes[o].insert(random_class());
    }
    if (cfg_.relation_preds.empty()) return;
    for (const auto& a : s.objects) {
      for (const auto& b : s.objects) {
        if (a != b && chance(cfg_.relation_density)) {
          const auto& r = cfg_.relation_preds[uniform(cfg_.relation_preds.size())];
          s.relations.insert(Atom{r, {Term::constant(a), Term::constant(b)}});
        }
      }
    }
  }

  bool entailed(const Scene& s) const {
    return evaluate_binary(cfg_.target, ExampleRecord{s.id, Label::Positive, s.ground_truth()}, 0.5);
  }

  static double rounded(double p) { return std::clamp(std::round(p * 1000.0) / 1000.0, 0.001, 1.0); }

  double draw(double mean, double spread) {
    if (spread <= 0.0) return rounded(mean);
    return rounded(std::normal_distribution<double>(mean, spread)(rng_));
  }

  double relation_confidence() {
    if (cfg_.relation_confidence == RelationConfidence::Certain) return 1.0;
    const double margin = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    return rounded(1.0 / (1.0 + std::exp(-8.0 * margin)));
  }

  ExampleRecord detect(const Scene& s, Label label) {
    const DetectorNoise& n = cfg_.noise;
    ExampleRecord ex{s.id, label, {}};
    std::set<std::string> kept;
    for (const auto& o : s.objects) {
      if (chance(n.miss_rate)) continue;
      kept.insert(o);
      ex.facts.push_back({1.0, Atom{std::string(kHasObject), {Term::constant(s.id), Term::constant(o)}}});
      for (const auto& c : s.classes.at(o)) ex.facts.push_back({draw(n.tp_mean, n.tp_spread), Atom{c, {Term::constant(o)}}});
    }
    for (const auto& r : s.relations) {
      const bool visible = std::all_of(r.args.begin(), r.args.end(),
                                       [&](const Term& t) { return t.name == s.id || kept.count(t.name); });
      if (visible) ex.facts.push_back({relation_confidence(), r});
    }
    std::size_t next = s.objects.size();
    const std::vector<std::string> real(kept.begin(), kept.end());
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
      if (!chance(n.false_detection_rate)) continue;
      const std::string o = "o" + std::to_string(++next);
      ex.facts.push_back({1.0, Atom{std::string(kHasObject), {Term::constant(s.id), Term::constant(o)}}});
      ex.facts.push_back({draw(n.fp_mean, n.fp_spread), Atom{random_class(), {Term::constant(o)}}});
      if (!real.empty() && !cfg_.relation_preds.empty() && chance(0.5)) {
        const auto& r = cfg_.relation_preds[uniform(cfg_.relation_preds.size())];
        Atom rel{r, {Term::constant(o), Term::constant(real[uniform(real.size())])}};
        if (chance(0.5)) std::swap(rel.args[0], rel.args[1]);
        ex.facts.push_back({relation_confidence(), std::move(rel)});
      }
    }
    if (chance(n.label_flip_rate)) ex.label = label == Label::Positive ? Label::Negative : Label::Positive;
    return ex;
  }

  const SceneConfig& cfg_;
  std::mt19937_64 rng_;
  std::set<std::string> class_set_;
};

std::string example_id(std::size_t i, std::size_t total) {
  const int width = std::max<int>(4, static_cast<int>(std::to_string(total).size()));
  char buf[32];
  std::snprintf(buf, sizeof buf, "s%0*zu", width, i);
  return buf;
}

}  // namespace

Task synth_generate(const SceneConfig& config, std::size_t n_pos, std::size_t n_neg) {
  config.validate();
  if (n_pos == 0 || n_neg == 0) throw Error("synth_generate needs at least one positive and one negative");
  SceneBuilder builder(config);
  Task task{config.bias(), {}};
  const std::size_t total = n_pos + n_neg;
  for (std::size_t i = 0; i < n_pos; ++i) task.examples.push_back(builder.positive(example_id(i, total)));
  for (std::size_t i = 0; i < n_neg; ++i) task.examples.push_back(builder.negative(example_id(n_pos + i, total)));
  return task;
}

}  // namespace pilp
