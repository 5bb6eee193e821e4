#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pilp/logic.hpp"
#include "pilp/parser.hpp"

namespace {

using pilp::Clause;
using pilp::parse_program_verbatim;

Clause clause(const std::string& text) { return parse_program_verbatim(text).clauses().front(); }

const char* kVehicleOrBridge =
    "f(A) :- has_object(A,B), vehicle(B).\n"
    "f(A) :- has_object(A,B), bridge(C), is_on(B,C).\n";

TEST(Canonicalize, RenamesByFirstOccurrenceAfterSort) {
  EXPECT_EQ(pilp::to_string(pilp::canonicalize(clause("f(A) :- vehicle(B), has_object(A,B)."))),
            "f(V0) :- has_object(V0,V1), vehicle(V1).");
  EXPECT_EQ(pilp::to_string(pilp::canonicalize(clause("f(A) :- has_object(A,B)."))), "f(V0) :- has_object(V0,V1).");
}

TEST(Canonicalize, AlphaEquivalenceIgnoresNamesAndOrder) {
  EXPECT_TRUE(pilp::alpha_equivalent(clause("f(X) :- is_on(Y,Z), has_object(X,Y)."),
                                     clause("f(A) :- has_object(A,B), is_on(B,C).")));
  EXPECT_FALSE(pilp::alpha_equivalent(clause("f(X) :- is_on(Y,X)."), clause("f(X) :- is_on(X,Y).")));
}

TEST(Canonicalize, Idempotent) {
  oracle::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Clause c = oracle::random_clause(rng);
    const Clause once = pilp::canonicalize(c);
    EXPECT_EQ(pilp::canonicalize(once), once);
    EXPECT_TRUE(pilp::alpha_equivalent(c, once));
  }
}

TEST(ThetaSubsumes, Examples) {
  EXPECT_TRUE(pilp::theta_subsumes(clause("f(A) :- vehicle(B)."), clause("f(A) :- vehicle(B), bridge(C).")));
  EXPECT_FALSE(
      pilp::theta_subsumes(clause("f(A) :- vehicle(B), bridge(B)."), clause("f(A) :- vehicle(B), bridge(C).")));
  const Clause c = clause("f(A) :- has_object(A,B), is_on(B,C), bridge(C).");
  EXPECT_TRUE(pilp::theta_subsumes(c, c));
}

TEST(ThetaSubsumes, AgreesWithBruteForce) {
  oracle::Rng rng(7);
  std::size_t positives = 0;
  for (int i = 0; i < 2000; ++i) {
    const Clause g = oracle::random_clause(rng, 3, 2);
    const Clause s = oracle::random_clause(rng, 4, 4);
    const bool expected = oracle::subsumes(g, s);
    positives += expected;
    ASSERT_EQ(pilp::theta_subsumes(g, s), expected) << pilp::to_string(g) << "  vs  " << pilp::to_string(s);
  }
  EXPECT_GT(positives, 50u);
}

TEST(ThetaSubsumes, TransitiveOnRandomTriples) {
  oracle::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Clause a = oracle::random_clause(rng, 2, 1);
    const Clause b = oracle::random_clause(rng, 3, 2);
    const Clause c = oracle::random_clause(rng, 4, 3);
    if (pilp::theta_subsumes(a, b) && pilp::theta_subsumes(b, c)) EXPECT_TRUE(pilp::theta_subsumes(a, c));
  }
}

TEST(ProgramSpecializes, Examples) {
  const auto h_vb = parse_program_verbatim("f(A) :- vehicle(B), bridge(C).");
  const auto h_v = parse_program_verbatim("f(A) :- vehicle(B).");
  const auto h_b = parse_program_verbatim("f(A) :- bridge(B).");
  EXPECT_TRUE(pilp::program_specializes(h_vb, h_v));
  EXPECT_TRUE(pilp::program_specializes(h_v, h_v));
  EXPECT_FALSE(pilp::program_specializes(h_v, h_b));
}

TEST(ProgramSize, CountsHeadsAndBodies) {
  EXPECT_EQ(pilp::program_size(parse_program_verbatim("f(A) :- has_object(A,B), vehicle(B).")), 3u);
  EXPECT_EQ(pilp::program_size(parse_program_verbatim(kVehicleOrBridge)), 7u);
}

TEST(Program, RejectsInvalidClauses) {
  EXPECT_THROW(parse_program_verbatim("f(A) :- vehicle(A).\ng(A) :- vehicle(A)."), pilp::Error);
  EXPECT_THROW(parse_program_verbatim("f(A) :- always_true(A)."), pilp::Error);
  EXPECT_THROW(pilp::Program(std::vector<Clause>{}), pilp::Error);
}

TEST(Program, DropsAlphaDuplicates) {
  const auto p = parse_program_verbatim("f(A) :- vehicle(B), has_object(A,B).\nf(X) :- has_object(X,Y), vehicle(Y).");
  EXPECT_EQ(p.clauses().size(), 1u);
}

TEST(Bias, Validation) {
  pilp::Bias b;
  b.head = {"f", 1};
  b.body = {{"vehicle", 1}};
  EXPECT_NO_THROW(b.validate());
  b.max_vars = 0;
  EXPECT_THROW(b.validate(), pilp::Error);
}

}  // namespace
