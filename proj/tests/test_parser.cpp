#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pilp/parser.hpp"

namespace {

using pilp::Label;

TEST(ParseProgram, SingleClause) {
  const auto p = pilp::parse_program("f(A) :- has_object(A,B), vehicle(B).");
  ASSERT_EQ(p.clauses().size(), 1u);
  EXPECT_EQ(pilp::program_size(p), 3u);
}

TEST(ParseProgram, TableProgramParses) {
  const auto p = pilp::parse_program("f(A) :- has_object(A,B), person(B), is_on(B,C), car(C).");
  EXPECT_EQ(pilp::program_size(p), 5u);
}

TEST(ParseProgram, SyntaxErrorsCarryPosition) {
  try {
    pilp::parse_program("f(A) :- .");
    FAIL() << "expected a parse error";
  } catch (const pilp::ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_GT(e.column(), 1u);
  }
  EXPECT_THROW(pilp::parse_program("f(A) :- vehicle(A)"), pilp::ParseError);
  EXPECT_THROW(pilp::parse_program("f(A) :- vehicle(A,)."), pilp::ParseError);
  EXPECT_THROW(pilp::parse_program(""), pilp::Error);
}

TEST(ParseProgram, CommentsAndWhitespace) {
  const auto p = pilp::parse_program("% learned\nf(A) :-\n   has_object(A,B),  % object\n   vehicle(B).\n");
  EXPECT_EQ(pilp::program_size(p), 3u);
}

TEST(ParseFacts, Examples) {
  const auto f = pilp::parse_facts("0.7 :: vehicle(o1).\nhas_object(img1,o1).\n");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].prob, 0.7);
  EXPECT_EQ(pilp::to_string(f[0].atom), "vehicle(o1)");
  EXPECT_EQ(f[1].prob, 1.0);
  EXPECT_EQ(pilp::to_string(f[1].atom), "has_object(img1,o1)");
  EXPECT_THROW(pilp::parse_facts("1.3 :: vehicle(o1)."), pilp::ParseError);
  EXPECT_THROW(pilp::parse_facts("0.5 :: vehicle(X)."), pilp::ParseError);
}

TEST(ParseFacts, ProbabilitiesRoundTripExactly) {
  oracle::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const double p = rng.real();
    const auto text = pilp::format_real(p);
    EXPECT_EQ(pilp::parse_facts(text + " :: vehicle(o1).").front().prob, p) << text;
  }
  EXPECT_EQ(pilp::format_real(0.7), "0.7");
}

TEST(ParseExamples, Examples) {
  const auto e = pilp::parse_examples("pos(f(img1)).\nneg(f(img2)).\n");
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0], (pilp::LabeledId{"img1", Label::Positive}));
  EXPECT_EQ(e[1], (pilp::LabeledId{"img2", Label::Negative}));
  EXPECT_THROW(pilp::parse_examples("pos(f(img1)).\npos(f(img1))."), pilp::ParseError);
  std::string head;
  pilp::parse_examples("neg(g(x)).", head);
  EXPECT_EQ(head, "g");
}

TEST(ParseBias, FullDeclarationSet) {
  const auto b = pilp::parse_bias(
      "head_pred(f,1).\nbody_pred(has_object,2).\nbody_pred(vehicle,1).\n"
      "max_vars(3).\nmax_body(2).\nmax_clauses(1).\n");
  EXPECT_EQ(b.head, (pilp::PredicateSignature{"f", 1}));
  ASSERT_EQ(b.body.size(), 2u);
  EXPECT_EQ(b.body[0], (pilp::PredicateSignature{"has_object", 2}));
  EXPECT_EQ(b.max_vars, 3u);
  EXPECT_EQ(b.max_body, 2u);
  EXPECT_EQ(b.max_clauses, 1u);
  EXPECT_EQ(pilp::parse_bias(pilp::print_bias(b)), b);
}

TEST(ParseBias, DefaultsAndErrors) {
  const auto b = pilp::parse_bias("head_pred(f,1).\nbody_pred(vehicle,1).\nmax_vars(4).\nmax_body(4).\n");
  EXPECT_EQ(b.max_clauses, 2u);
  EXPECT_THROW(pilp::parse_bias("head_pred(f,1).\nhead_pred(g,1).\nbody_pred(vehicle,1)."), pilp::Error);
}

TEST(PrintProgram, OneLinePerClause) {
  const auto one = pilp::print_program(pilp::parse_program("f(X) :- vehicle(Y), has_object(X,Y)."));
  EXPECT_EQ(one, "f(A) :- has_object(A,B), vehicle(B).\n");
  const auto two = pilp::print_program(pilp::parse_program(
      "f(A) :- has_object(A,B), vehicle(B).\nf(A) :- has_object(A,B), bridge(C), is_on(B,C)."));
  EXPECT_EQ(std::count(two.begin(), two.end(), '\n'), 2);
}

TEST(PrintProgram, RoundTripIsAlphaEquivalent) {
  oracle::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto p = oracle::random_program(rng);
    const auto back = pilp::parse_program(pilp::print_program(p));
    EXPECT_EQ(back, p.canonical()) << pilp::print_program(p);
  }
}

TEST(PrintFacts, RoundTrip) {
  oracle::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto ex = oracle::random_example(rng);
    EXPECT_EQ(pilp::parse_facts(pilp::print_facts(ex.facts)), ex.facts);
  }
}

TEST(PrintExamples, RoundTrip) {
  const std::vector<pilp::LabeledId> ids{{"a", Label::Positive}, {"b", Label::Negative}};
  EXPECT_EQ(pilp::parse_examples(pilp::print_examples(ids, "f")), ids);
}

}  // namespace
