#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pilp/infer.hpp"
#include "pilp/parser.hpp"
#include "pilp/rewrite.hpp"

namespace {

using pilp::Atom;
using pilp::Term;

const char* kVehicleOrBridge =
    "f(A) :- has_object(A,B), vehicle(B).\n"
    "f(A) :- has_object(A,B), bridge(C), is_on(B,C).\n";

std::vector<Atom> body_of(const std::string& text) {
  return pilp::parse_program_verbatim("f(A) :- " + text + ".").clauses().front().body;
}

std::string render(const std::vector<Atom>& atoms) {
  std::string out;
  for (const auto& a : atoms) out += (out.empty() ? "" : ", ") + pilp::to_string(a);
  return out;
}

TEST(Bodies, TwoClauseProgram) {
  const auto b = pilp::bodies(pilp::parse_program_verbatim(kVehicleOrBridge));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(render(b[0]), "has_object(A,B), vehicle(B)");
  EXPECT_EQ(render(b[1]), "has_object(A,B), bridge(C), is_on(B,C)");
  EXPECT_EQ(pilp::bodies(pilp::parse_program_verbatim("f(A) :- vehicle(A).")).size(), 1u);
}

TEST(Bodies, NeverIncludeHeads) {
  oracle::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    for (const auto& body : pilp::bodies(oracle::random_program(rng))) {
      for (const auto& a : body) EXPECT_NE(a.predicate, "f");
    }
  }
}

TEST(VarSets, TwoClauseProgram) {
  const auto v = pilp::var_sets(pilp::parse_program_verbatim(kVehicleOrBridge));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], (std::set<std::string>{"A", "B"}));
  EXPECT_EQ(v[1], (std::set<std::string>{"A", "B", "C"}));
  EXPECT_EQ(pilp::var_sets(pilp::parse_program_verbatim("f(A) :- vehicle(A).")).front(), std::set<std::string>{"A"});
}

TEST(Extend, AddsDummiesInTargetOrder) {
  const std::vector<std::string> cab{"C", "A", "B"};
  EXPECT_EQ(render(pilp::extend(body_of("has_object(A,B), vehicle(B)"), cab)),
            "has_object(A,B), vehicle(B), always_true(C)");
  const std::vector<std::string> abc{"A", "B", "C"};
  EXPECT_EQ(render(pilp::extend(body_of("vehicle(A)"), abc)), "vehicle(A), always_true(B), always_true(C)");
  const std::vector<std::string> own{"A", "B"};
  EXPECT_EQ(render(pilp::extend(body_of("has_object(A,B), vehicle(B)"), own)), "has_object(A,B), vehicle(B)");
  const std::vector<std::string> too_few{"A"};
  EXPECT_THROW(pilp::extend(body_of("has_object(A,B)"), too_few), pilp::Error);
}

TEST(Normalize, TwoClauseProgramDisplay) {
  const auto n = pilp::normalize(pilp::parse_program_verbatim(kVehicleOrBridge));
  EXPECT_EQ(n.unified_vars, (std::vector<std::string>{"C", "A", "B"}));
  EXPECT_EQ(pilp::render_normalized(n),
            "g0(C, A, B) = has_object(A, B), vehicle(B), always_true(C)\n"
            "g1(C, A, B) = has_object(A, B), bridge(C), is_on(B, C)\n"
            "g(C, A, B) = g0(C, A, B) or g1(C, A, B)\n");
}

TEST(Normalize, SingleClauseHasNoDummies) {
  const auto p = pilp::parse_program_verbatim("f(A) :- has_object(A,B), vehicle(B).");
  const auto n = pilp::normalize(p);
  ASSERT_EQ(n.clauses.size(), 1u);
  EXPECT_EQ(n.clauses.front(), p.clauses().front());
}

TEST(Normalize, EveryClauseCoversTheUnifiedVariables) {
  oracle::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto n = pilp::normalize(oracle::random_program(rng, 3));
    const std::set<std::string> all(n.unified_vars.begin(), n.unified_vars.end());
    for (const auto& c : n.clauses) {
      const auto vars = c.variables();
      EXPECT_EQ(std::set<std::string>(vars.begin(), vars.end()), all);
    }
  }
}

TEST(Normalize, PreservesProbability) {
  oracle::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto p = oracle::random_program(rng, 3);
    const auto ex = oracle::random_example(rng);
    pilp::InferenceConfig on{std::nullopt, pilp::Provenance::Basic, true};
    pilp::InferenceConfig off{std::nullopt, pilp::Provenance::Basic, false};
    EXPECT_NEAR(pilp::evaluate(p, ex, on), pilp::evaluate(p, ex, off), 1e-12);
  }
}

}  // namespace
