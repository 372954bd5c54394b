#pragma once

// Problem files: line-oriented text with named sections.
//
//   [problem]            id, about
//   [space]              independent, dependent, order, parameters
//   [equations]          one expression per line
//   [symmetries NAME?]   generators, NAME = coord: expr; coord: expr
//   [fields NAME?]       other fields, same syntax
//   [chart NAME]         forward, inverse, field, aux, canonical, after
//   [reduction NAME]     target, aux, after
//   [solution NAME]      stage, parent, reduced, antiderivative
//   [checks]             op args => expected | key=value ...
//
// A section argument on [symmetries]/[fields] places the fields on the
// reduced space of that stage. Charts and reductions are stages: each one
// reduces the parent system, or the reduced system of the stage named by
// `after`. Lines starting with '#' are comments.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liereduce/jet.hpp"

namespace liereduce {

using NamedExprs = std::vector<std::pair<std::string, Expr>>;

struct FieldDef {
  std::string name;
  std::string stage;  // empty: parent space
  bool symmetry = false;
  NamedExprs coefficients;
  int line = 0;
};

struct StageDef {
  std::string name;
  std::string after;
  bool chart = false;
  std::string field;
  std::vector<std::string> target_independent;
  std::vector<std::string> target_dependent;
  std::vector<Expr> forward;
  std::vector<Expr> inverse;
  /// Dependent variable eliminated: canonical chart coordinate or the
  /// reduction target.
  std::string target;
  std::vector<std::string> aux;
  JetSpace source;   // space the stage starts from
  JetSpace chart_space;  // chart target space (charts only)
  JetSpace reduced;  // space of the reduced system
  int line = 0;
};

/// Solution pair for a stage. The parent side is written in the stage's
/// chart coordinates, or in its source coordinates for a plain reduction.
struct SolutionDef {
  std::string name;
  std::string stage;
  std::optional<NamedExprs> parent;
  std::optional<NamedExprs> reduced;
  std::optional<Expr> antiderivative;
  int line = 0;
};

struct CheckDef {
  std::string op;
  std::vector<std::string> args;
  std::string expected;
  std::string origin;    // "stated" or "derived"
  std::string conflict;  // value the source states when it disagrees with the oracle
  int line = 0;

  std::string label() const;
};

struct Problem {
  std::string id;
  std::string about;
  std::filesystem::path path;
  JetSpace space;
  std::vector<Expr> equations;
  std::vector<FieldDef> fields;
  std::vector<StageDef> stages;
  std::vector<SolutionDef> solutions;
  std::vector<CheckDef> checks;

  int symmetry_count() const;
  const FieldDef* field(const std::string& name) const;
  const StageDef* stage(const std::string& name) const;
  const SolutionDef* solution(const std::string& name) const;
  /// Space a field lives on.
  const JetSpace& space_of(const FieldDef& f) const;
};

Problem parse_problem(const std::string& text, const std::string& origin = "<string>");
/// Throws ParseError with the 1-based line number on malformed or invalid
/// files, Error when the file cannot be read.
Problem load_problem(const std::filesystem::path& path);

/// Splits "a: e1; b: e2" and parses each expression against `space`.
NamedExprs parse_named(const std::string& text, const JetSpace& space);

}  // namespace liereduce
