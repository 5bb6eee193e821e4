#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pilp/facts.hpp"
#include "pilp/infer.hpp"
#include "pilp/logic.hpp"
#include "pilp/score.hpp"

namespace pilp {

enum class ConstraintKind : unsigned char { PruneGeneralizations, PruneSpecializations };

struct ConstraintRecord {
  ConstraintKind kind;
  Program anchor;
};

/// Constraint set with indexes for the two pruning directions.
///
/// A prune_specializations record removes every program that specializes its
/// anchor; a prune_generalizations record removes every program the anchor
/// specializes.
class ConstraintStore {
 public:
  ConstraintStore();
  ~ConstraintStore();
  ConstraintStore(ConstraintStore&&) noexcept;
  ConstraintStore& operator=(ConstraintStore&&) noexcept;

  void add(ConstraintRecord record);
  void add(std::vector<ConstraintRecord> records);

  bool prunes(const Program& candidate) const;

  const std::vector<ConstraintRecord>& records() const noexcept;
  std::size_t size() const noexcept { return records().size(); }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// prune(candidate, store) from the search loop.
bool prune(const Program& candidate, const ConstraintStore& store);

/// Size-ordered enumerator of canonical, head-connected, constant-free
/// programs within a bias. Within one size, programs come in a fixed order.
class Generator {
 public:
  explicit Generator(Bias bias);
  ~Generator();
  Generator(Generator&&) noexcept;
  Generator& operator=(Generator&&) noexcept;

  /// Next candidate not pruned by `store`, or nullopt once the space is used up.
  std::optional<Program> next(const ConstraintStore& store);

  /// Candidates skipped because a constraint pruned them.
  std::size_t pruned() const noexcept;

  /// All canonical clauses with exactly `body_length` body literals.
  std::vector<Clause> clauses_of_length(std::size_t body_length);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

enum class ConstrainerKind : unsigned char { Combo, NoisyCombo, MaxSynth };
enum class CostKind : unsigned char { Mdl, Bce };
enum class TesterKind : unsigned char { Neurosymbolic, Binary };

struct SearchSettings {
  ConstrainerKind constrainer = ConstrainerKind::NoisyCombo;
  CostKind cost = CostKind::Bce;
  TesterKind tester = TesterKind::Neurosymbolic;
  double noise_level = 0.15;
  /// Facts below this confidence are dropped by the binary tester.
  double bk_threshold = 0.5;
  InferenceConfig inference;
  std::optional<std::size_t> max_iterations;
  std::optional<double> budget_seconds;
  std::uint64_t seed = 0;
  std::size_t max_promising = 64;
};

/// Tests programs against a fixed example set.
class Tester {
 public:
  Tester(std::span<const ExampleRecord> examples, const SearchSettings& settings);

  /// Predicted probabilities, selected threshold and confusion counts.
  TestResult test(const Program& program) const;
  double cost(const Program& program, const TestResult& result) const;
  /// Cost of predicting every example negative.
  double empty_cost() const;

  std::size_t size() const noexcept { return examples_.size(); }
  std::size_t negatives() const noexcept { return negatives_; }
  std::size_t positives() const noexcept { return examples_.size() - negatives_; }

 private:
  SearchSettings settings_;
  std::vector<GroundedExample> examples_;
  std::size_t negatives_ = 0;
};

struct ScoredProgram {
  Program program;
  TestResult result;
  double cost = 0.0;
  std::size_t size = 0;
  /// print_program text; the last tie-breaker.
  std::string text;
};

ScoredProgram score_program(const Program& program, const Tester& tester);

/// Lower cost first, then smaller size, then smaller text.
bool better(const ScoredProgram& a, const ScoredProgram& b);

std::vector<ConstraintRecord> constrain_combo(const TestResult& result, const Program& program);
std::vector<ConstraintRecord> constrain_noisycombo(const TestResult& result, const Program& program,
                                                   double noise_level, std::size_t n_neg);
std::vector<ConstraintRecord> constrain_maxsynth(const TestResult& result, const Program& program,
                                                 double best_cost);

/// Whether a tested program joins the combiner's pool under `settings`.
bool is_promising(const ScoredProgram& scored, const SearchSettings& settings, std::size_t n_neg);

/// Greedy union of promising programs: repeatedly adds the program whose
/// union with the current selection has the lowest cost, while that lowers
/// the cost and the union stays within `max_clauses`. Falls back to
/// `best_tested` when the pool is empty.
ScoredProgram combine(std::span<const ScoredProgram> promising, const ScoredProgram& best_tested,
                      const Tester& tester, std::size_t max_clauses);

struct Task {
  Bias bias;
  std::vector<ExampleRecord> examples;
};

enum class LearnStatus : unsigned char {
  /// Stopped because no later candidate can beat the best program.
  Optimal,
  /// Hypothesis space consumed.
  Exhausted,
  /// Iteration or time budget reached with at least one tested program.
  Budget,
  /// Nothing was tested.
  NoSolution,
};

struct LearnResult {
  std::optional<ScoredProgram> best;
  LearnStatus status = LearnStatus::NoSolution;
  std::size_t iterations = 0;
  std::size_t tested = 0;
  std::size_t pruned = 0;
  std::size_t constraints = 0;
  std::vector<std::string> warnings;
};

LearnResult learn(const Task& task, const SearchSettings& settings);

const char* to_string(ConstrainerKind kind);
const char* to_string(CostKind kind);
const char* to_string(TesterKind kind);
const char* to_string(LearnStatus status);

}  // namespace pilp
