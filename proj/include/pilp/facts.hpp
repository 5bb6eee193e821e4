#pragma once

#include <string>
#include <vector>

#include "pilp/logic.hpp"

namespace pilp {

/// Probability-annotated ground atom, e.g. `0.7 :: vehicle(o1).`
struct ProbFact {
  double prob = 1.0;
  Atom atom;

  bool operator==(const ProbFact&) const = default;
};

enum class Label : unsigned char { Negative, Positive };

struct LabeledId {
  std::string id;
  Label label = Label::Positive;

  bool operator==(const LabeledId&) const = default;
};

/// One example: the query entity, its label and its own background facts.
struct ExampleRecord {
  std::string id;
  Label label = Label::Positive;
  std::vector<ProbFact> facts;
};

}  // namespace pilp
