#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pilp/error.hpp"

namespace pilp {

/// Reserved unary predicate that holds for every constant of an example.
inline constexpr std::string_view kAlwaysTrue = "always_true";

enum class TermKind : unsigned char { Variable, Constant };

struct Term {
  TermKind kind = TermKind::Variable;
  std::string name;

  static Term var(std::string name) { return {TermKind::Variable, std::move(name)}; }
  static Term constant(std::string name) { return {TermKind::Constant, std::move(name)}; }

  bool is_var() const noexcept { return kind == TermKind::Variable; }

  auto operator<=>(const Term&) const = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  std::size_t arity() const noexcept { return args.size(); }
  bool is_ground() const noexcept;

  auto operator<=>(const Atom&) const = default;
};

struct Clause {
  Atom head;
  std::vector<Atom> body;

  /// Variables in order of first occurrence, head first.
  std::vector<std::string> variables() const;

  auto operator<=>(const Clause&) const = default;
};

/// A non-empty set of definite clauses sharing one head predicate.
///
/// Construction validates the clauses (non-empty bodies, consistent head
/// predicate and arity, no use of the reserved always_true predicate) and
/// drops clauses that are alpha-equivalent to an earlier one. Clause order is
/// otherwise preserved; use canonical() for an order-independent form.
class Program {
 public:
  explicit Program(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  const std::string& head_predicate() const noexcept { return clauses_.front().head.predicate; }
  std::size_t head_arity() const noexcept { return clauses_.front().head.arity(); }

  /// Every clause canonicalized, clauses sorted, duplicates removed.
  Program canonical() const;

  bool operator==(const Program&) const = default;

 private:
  std::vector<Clause> clauses_;
};

struct PredicateSignature {
  std::string name;
  std::size_t arity = 0;

  auto operator<=>(const PredicateSignature&) const = default;
};

/// Language bias bounding the hypothesis space.
struct Bias {
  PredicateSignature head;
  std::vector<PredicateSignature> body;
  std::size_t max_vars = 4;
  std::size_t max_body = 4;
  std::size_t max_clauses = 2;

  /// Throws pilp::Error when an invariant is violated.
  void validate() const;

  bool operator==(const Bias&) const = default;
};

/// Renames variables to V0, V1, ... in first-occurrence order and sorts the
/// body by (predicate, argument tuple); duplicate literals collapse. Two
/// clauses are alpha-equivalent iff their canonical forms are equal.
Clause canonicalize(const Clause& clause);

bool alpha_equivalent(const Clause& a, const Clause& b);

/// True iff some substitution maps `general`'s head onto `specific`'s head
/// and `general`'s body into a sub-multiset of `specific`'s body.
bool theta_subsumes(const Clause& general, const Clause& specific);

/// True iff every clause of `h2` is theta-subsumed by some clause of `h1`.
bool program_specializes(const Program& h2, const Program& h1);

/// Number of literals, heads included.
std::size_t program_size(const Program& program);

std::string to_string(const Term& term);
std::string to_string(const Atom& atom);
std::string to_string(const Clause& clause);

}  // namespace pilp
