#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pilp/facts.hpp"
#include "pilp/logic.hpp"

namespace pilp {

struct Prediction {
  std::string id;
  Label label = Label::Positive;
  double prob = 0.0;
};

struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  bool operator==(const Confusion&) const = default;
};

/// Predictions of one hypothesis on a set of examples, binarized at `threshold`.
struct TestResult {
  std::vector<Prediction> per_example;
  double threshold = 0.5;
  Confusion confusion;

  std::size_t positives() const noexcept { return confusion.tp + confusion.fn; }
  std::size_t negatives() const noexcept { return confusion.tn + confusion.fp; }
};

inline constexpr double kBceEpsilon = 1e-7;
inline constexpr std::size_t kThresholdCandidates = 15;

/// Mean binary cross-entropy with probabilities clamped to [eps, 1 - eps].
/// Lower is better. Throws pilp::Error on an empty list.
double bce(std::span<const Prediction> results);

/// A prediction counts as positive iff prob >= threshold.
Confusion confusion(std::span<const Prediction> results, double threshold);

/// size(h) + fn + fp.
double mdl(const Program& program, const Confusion& conf);

/// The fifteen interior candidates i/16, i = 1..15.
std::array<double, kThresholdCandidates> threshold_candidates();

/// Candidate maximizing tp + tn; the smallest one wins ties.
double select_threshold(std::span<const Prediction> results);

/// 2tp / (2tp + fp + fn), or 0 when the denominator is 0.
double f1(const Confusion& conf);

/// Selects the threshold and fills in the confusion counts.
TestResult make_test_result(std::vector<Prediction> predictions);
TestResult make_test_result(std::vector<Prediction> predictions, double threshold);

}  // namespace pilp
