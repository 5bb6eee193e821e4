#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pilp/error.hpp"
#include "pilp/facts.hpp"
#include "pilp/logic.hpp"

namespace pilp {

/// Parses `head :- b1, ..., bn.` clauses and returns the canonical program.
Program parse_program(std::string_view text);

/// Same grammar as parse_program, but keeps clause order, literal order and
/// variable names exactly as written.
Program parse_program_verbatim(std::string_view text);

/// Lines of `P :: atom.` or `atom.` (P = 1.0). Facts are returned in file order.
std::vector<ProbFact> parse_facts(std::string_view text);

/// Lines of `pos(f(id)).` / `neg(f(id)).`; duplicate ids are rejected.
std::vector<LabeledId> parse_examples(std::string_view text);
/// As above; also reports the wrapped head predicate (empty for no examples).
std::vector<LabeledId> parse_examples(std::string_view text, std::string& head_predicate);

/// head_pred/2, body_pred/2, max_vars/1, max_body/1, max_clauses/1 declarations.
Bias parse_bias(std::string_view text);

/// One clause per line in `f(A) :- p(A,B), q(B).` form, variables named
/// A, B, C, ... Literals are listed by walking outward from the head.
std::string print_program(const Program& program);

std::string print_facts(const std::vector<ProbFact>& facts);
std::string print_examples(const std::vector<LabeledId>& examples, const std::string& head_predicate);
std::string print_bias(const Bias& bias);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

}  // namespace pilp
