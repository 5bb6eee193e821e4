#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pilp/facts.hpp"
#include "pilp/logic.hpp"

namespace pilp {

enum class Provenance : unsigned char { Basic, NoisyOr };

struct InferenceConfig {
  /// Number of most probable proofs kept; nullopt means unlimited.
  std::optional<std::size_t> top_k = 3;
  Provenance provenance = Provenance::Basic;
  /// Evaluate the always_true-extended program rather than the clauses as written.
  bool normalize = true;
};

/// AND: product; empty conjunction is 1.
double prob_and(std::span<const double> xs);
/// OR: min(1, sum) for basic provenance, 1 - prod(1 - x) for noisy-or; empty is 0.
double prob_or(std::span<const double> xs, Provenance provenance = Provenance::Basic);
double prob_not(double x);

/// An example's facts indexed for grounding. The grounding domain is the set
/// of constants in the facts plus the example id; atoms outside the fact list
/// have probability 0. Repeated ground atoms keep their highest probability.
class GroundedExample {
 public:
  explicit GroundedExample(const ExampleRecord& example);

  const std::string& id() const noexcept { return id_; }
  Label label() const noexcept { return label_; }
  const std::vector<ProbFact>& facts() const noexcept { return facts_; }
  std::size_t num_constants() const noexcept { return constants_.size(); }

  /// Copy keeping only facts with prob >= threshold, each made certain.
  GroundedExample thresholded(double threshold) const;

 private:
  friend class ProofEnumerator;

  GroundedExample() = default;
  void index();

  struct Fact {
    std::int32_t pred;
    std::vector<std::int32_t> args;
    double prob;
  };

  std::string id_;
  Label label_ = Label::Positive;
  std::vector<ProbFact> facts_;
  std::vector<std::string> constants_;
  std::unordered_map<std::string, std::int32_t> constant_ids_;
  std::unordered_map<std::string, std::int32_t> pred_ids_;
  std::vector<Fact> coded_;
  std::vector<std::vector<std::size_t>> by_pred_;
  std::unordered_map<std::string, std::size_t> by_key_;
};

/// Set of distinct ground facts (indices into GroundedExample::facts()) whose
/// conjunction proves the query; always_true atoms are not recorded.
struct Proof {
  std::vector<std::size_t> facts;
  double prob = 1.0;

  bool operator==(const Proof&) const = default;
};

/// All proofs of `clause` with its first head variable bound to `query`.
/// Proofs with identical fact sets are merged; zero-probability proofs are
/// dropped. Sorted by descending probability, then by fact set.
std::vector<Proof> enumerate_proofs(const Clause& clause, const GroundedExample& example, std::string_view query);
std::vector<Proof> enumerate_proofs(const Clause& clause, const ExampleRecord& example, std::string_view query);

/// Proofs of every clause of `program`, merged and sorted as above.
std::vector<Proof> program_proofs(const Program& program, const GroundedExample& example,
                                  const InferenceConfig& config);

/// Probability that the example id satisfies the program.
double evaluate(const Program& program, const GroundedExample& example, const InferenceConfig& config = {});
double evaluate(const Program& program, const ExampleRecord& example, const InferenceConfig& config = {});

/// True iff some grounding of a clause uses only facts with prob > 0.
bool entails(const Program& program, const GroundedExample& example);

/// Classical entailment after keeping only facts with prob >= bk_threshold.
bool evaluate_binary(const Program& program, const GroundedExample& example, double bk_threshold = 0.5);
bool evaluate_binary(const Program& program, const ExampleRecord& example, double bk_threshold = 0.5);

/// Combines already-merged proofs: top-k by probability, then prob_or.
double combine_proofs(std::span<const Proof> proofs, const InferenceConfig& config);

}  // namespace pilp
