#pragma once

// Integer-coded clauses used by canonicalization, subsumption and the
// hypothesis generator.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pilp/logic.hpp"

namespace pilp::detail {

inline constexpr std::size_t kMaxArity = 4;

/// Argument code: >= 0 is a variable index, < 0 a constant.
using ArgCode = std::int32_t;

struct CodedAtom {
  std::int32_t pred = 0;
  std::int32_t arity = 0;
  std::array<ArgCode, kMaxArity> args{};

  auto operator<=>(const CodedAtom&) const = default;
};

struct CodedClause {
  CodedAtom head;
  std::vector<CodedAtom> body;
  std::int32_t num_vars = 0;

  auto operator<=>(const CodedClause&) const = default;
};

/// Maps predicate and constant names to codes whose integer order matches
/// the lexicographic order of the names.
class SymbolCodes {
 public:
  SymbolCodes() = default;
  /// Collects every predicate and constant of the given clauses.
  explicit SymbolCodes(const std::vector<const Clause*>& clauses);

  void add_predicate(const std::string& name) { preds_.emplace(name, 0); }
  void add_constant(const std::string& name) { consts_.emplace(name, 0); }
  /// Assigns codes; must be called after the last add_*.
  void freeze();

  std::int32_t predicate(const std::string& name) const;
  ArgCode constant(const std::string& name) const;
  const std::string& predicate_name(std::int32_t code) const { return pred_names_.at(code); }
  const std::string& constant_name(ArgCode code) const;

  CodedClause encode(const Clause& clause) const;
  Clause decode(const CodedClause& clause) const;

 private:
  std::map<std::string, std::int32_t> preds_;
  std::map<std::string, std::int32_t> consts_;
  std::vector<std::string> pred_names_;
  std::vector<std::string> const_names_;
};

CodedClause canonical(const CodedClause& clause);

bool subsumes(const CodedClause& general, const CodedClause& specific);

std::string variable_name(std::int32_t index);

}  // namespace pilp::detail
