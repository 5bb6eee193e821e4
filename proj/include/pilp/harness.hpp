#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pilp/facts.hpp"
#include "pilp/logic.hpp"
#include "pilp/score.hpp"
#include "pilp/search.hpp"

namespace pilp {

/// Exit codes shared by the command-line tool and the run_* helpers.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitNoSolution = 3;

/// Bundle layout: bias.pl, exs.pl and facts/<id>.pl for every example id.
Task read_task(const std::filesystem::path& dir);
void write_task(const std::filesystem::path& dir, const Task& task);

struct DetectorNoise {
  /// Confidence of real detections: normal(mean, spread), clamped to (0, 1].
  double tp_mean = 1.0;
  double tp_spread = 0.0;
  /// Expected spurious detections per real object.
  double false_detection_rate = 0.0;
  double fp_mean = 0.3;
  double fp_spread = 0.15;
  double miss_rate = 0.0;
  double label_flip_rate = 0.0;
};

/// f(A) :- has_object(A,B), vehicle(B), is_on(B,C), bridge(C).
Program default_scene_target();

enum class RelationConfidence : unsigned char { Certain, GeometricMargin };

struct SceneConfig {
  std::vector<std::string> object_classes{"vehicle", "bridge", "roundabout", "road"};
  std::vector<std::string> relation_preds{"is_on", "is_close"};
  std::size_t min_objects = 3;
  std::size_t max_objects = 6;
  /// Chance that an ordered pair of distinct objects gets a random relation.
  double relation_density = 0.15;
  /// Share of negatives built as the target pattern with one literal broken.
  double near_miss_rate = 0.5;
  Program target = default_scene_target();
  DetectorNoise noise;
  RelationConfidence relation_confidence = RelationConfidence::Certain;
  std::uint64_t seed = 0;

  /// Throws pilp::Error when a rate lies outside [0, 1] or the ranges are empty.
  void validate() const;
  /// Head of the target, has_object/2, every class and relation predicate.
  Bias bias() const;
};

/// Noise presets: "none", "easy", "intermediate", "hard".
DetectorNoise noise_tier(std::string_view tier);
std::vector<std::string> noise_tiers();

/// Positive scenes instantiate the target pattern at least once, negatives
/// never do; detector noise then turns the scenes into probabilistic facts.
/// Example ids are s0000, s0001, ... with the positives first.
Task synth_generate(const SceneConfig& config, std::size_t n_pos, std::size_t n_neg);

struct EvalReport {
  double f1 = 0.0;
  Confusion confusion;
  double bce = 0.0;
  double threshold = 0.5;
  std::size_t examples = 0;
  std::vector<Prediction> predictions;
};

/// Probabilities from the configured tester, binarized at `threshold`.
EvalReport evaluate_program(const Program& program, std::span<const ExampleRecord> examples,
                            const SearchSettings& settings, double threshold);

/// Deterministic result-file text: the program, then a `% metrics: {...}`
/// line. Wall time is included only when given.
std::string format_result(const LearnResult& result, const SearchSettings& settings,
                          std::optional<double> wall_seconds = std::nullopt);

/// Replacements for the bundle's bias bounds.
struct BiasOverrides {
  std::optional<std::size_t> max_vars;
  std::optional<std::size_t> max_body;
  std::optional<std::size_t> max_clauses;

  void apply(Bias& bias) const;
};

struct LearnOptions {
  BiasOverrides bias;
  bool record_wall_time = false;
};

/// Learns from the bundle in `task_dir` and writes the result file to
/// `out_path`. Diagnostics go to `log`. Returns one of the kExit* codes.
int run_learn(const std::filesystem::path& task_dir, const SearchSettings& settings,
              const std::filesystem::path& out_path, std::ostream& log, const LearnOptions& options = {});

/// Evaluates the program in `program_file` on every example of the bundle.
/// The threshold comes from `threshold`, else from the file's metrics line,
/// else 0.5. Throws pilp::Error on malformed input or an empty example set.
EvalReport run_eval(const std::filesystem::path& program_file, const std::filesystem::path& task_dir,
                    const SearchSettings& settings, std::optional<double> threshold = std::nullopt);

/// Threshold stored in a result file's metrics line, if any.
std::optional<double> stored_threshold(std::string_view result_text);

struct ModelSpec {
  std::string name;
  SearchSettings settings;
};

/// Propper: neurosymbolic tester, noisycombo, bce.
ModelSpec propper_model();
/// Classical baseline: binary tester at 0.5, combo, mdl.
ModelSpec binary_popper_model();

struct SweepGrid {
  std::vector<std::size_t> train_sizes{1, 2, 4, 8};
  std::vector<std::string> tiers{"easy", "intermediate", "hard"};
  std::vector<ModelSpec> models{propper_model(), binary_popper_model()};
  std::size_t repetitions = 5;
  /// Examples per class in each tier's dataset; the test set is whatever a
  /// split leaves out.
  std::size_t pool_per_class = 40;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  /// Overrides SceneConfig::bias() when set.
  std::optional<Bias> bias;
};

struct SweepRecord {
  std::string tier;
  std::string model;
  std::size_t train_size = 0;
  std::size_t repetition = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> train_ids;
  std::string program;
  double threshold = 0.5;
  Confusion test_confusion;
  double f1 = 0.0;
  std::string status;
};

struct SweepCell {
  std::string tier;
  std::string model;
  std::size_t train_size = 0;
  double mean_f1 = 0.0;
  double std_f1 = 0.0;
  std::size_t runs = 0;
};

struct SweepReport {
  std::vector<SweepRecord> records;
  std::vector<SweepCell> cells;

  std::string to_json() const;
  std::string table() const;
};

/// Aggregates records into cells (sample standard deviation).
std::vector<SweepCell> summarize(std::span<const SweepRecord> records);

SweepReport run_sweep(const SceneConfig& base, const SweepGrid& grid);

}  // namespace pilp
