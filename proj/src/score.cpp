#include "pilp/score.hpp"

#include <algorithm>
#include <cmath>

namespace pilp {

double bce(std::span<const Prediction> results) {
  if (results.empty()) throw Error("bce: no predictions");
  double sum = 0.0;
  for (const auto& r : results) {
    const double p = std::clamp(r.prob, kBceEpsilon, 1.0 - kBceEpsilon);
    sum += r.label == Label::Positive ? std::log(p) : std::log(1.0 - p);
  }
  return -sum / static_cast<double>(results.size());
}

Confusion confusion(std::span<const Prediction> results, double threshold) {
  Confusion c;
  for (const auto& r : results) {
    const bool predicted = r.prob >= threshold;
    if (r.label == Label::Positive) {
      ++(predicted ? c.tp : c.fn);
    } else {
      ++(predicted ? c.fp : c.tn);
    }
  }
  return c;
}

double mdl(const Program& program, const Confusion& conf) {
  return static_cast<double>(program_size(program) + conf.fn + conf.fp);
}

std::array<double, kThresholdCandidates> threshold_candidates() {
  std::array<double, kThresholdCandidates> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(i + 1) / 16.0;
  return out;
}

double select_threshold(std::span<const Prediction> results) {
  double best = 0.0;
  std::size_t best_correct = 0;
  bool first = true;
  for (double t : threshold_candidates()) {
    const Confusion c = confusion(results, t);
    const std::size_t correct = c.tp + c.tn;
    if (first || correct > best_correct) {
      best = t;
      best_correct = correct;
      first = false;
    }
  }
  return best;
}

double f1(const Confusion& conf) {
  const std::size_t denom = 2 * conf.tp + conf.fp + conf.fn;
  return denom == 0 ? 0.0 : 2.0 * static_cast<double>(conf.tp) / static_cast<double>(denom);
}

TestResult make_test_result(std::vector<Prediction> predictions) {
  const double t = select_threshold(predictions);
  return make_test_result(std::move(predictions), t);
}

TestResult make_test_result(std::vector<Prediction> predictions, double threshold) {
  TestResult r;
  r.confusion = confusion(predictions, threshold);
  r.per_example = std::move(predictions);
  r.threshold = threshold;
  return r;
}

}  // namespace pilp
