#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "pilp/logic.hpp"

namespace pilp {

/// A program whose clauses all range over the same variable set. Variables a
/// clause does not use are bound by always_true/1 literals.
struct NormalizedProgram {
  std::vector<std::string> unified_vars;
  std::vector<Clause> clauses;
  Program source;
};

/// Clause bodies in clause order.
std::vector<std::vector<Atom>> bodies(const Program& program);

/// Per-clause set of variables, head included.
std::vector<std::set<std::string>> var_sets(const Program& program);

/// Appends always_true(X) for every X in `target_vars` that neither `body`
/// nor `head_vars` mentions, in `target_vars` order. Throws pilp::Error if the
/// body uses a variable outside `target_vars`.
std::vector<Atom> extend(std::span<const Atom> body, std::span<const std::string> target_vars,
                         std::span<const std::string> head_vars = {});

/// Unifies the argument sets of all clauses. The unified order lists the
/// variables missing from at least one clause first, then the variables every
/// clause shares; each group keeps first-appearance order.
NormalizedProgram normalize(const Program& program);

/// Display form, one line per extended clause plus the disjunction:
///   g0(C, A, B) = has_object(A, B), vehicle(B), always_true(C)
///   g(C, A, B) = g0(C, A, B) or g1(C, A, B)
std::string render_normalized(const NormalizedProgram& normalized, const std::string& name = "g");

}  // namespace pilp
