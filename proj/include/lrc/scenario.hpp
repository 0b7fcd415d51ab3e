#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "lrc/expression.hpp"
#include "lrc/forms.hpp"

namespace lrc {

/// Semantic problem in a scenario file, naming the offending field.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& field, const std::string& what, int line = 0)
      : std::runtime_error(field + ": " + what + (line > 0 ? " (line " + std::to_string(line) + ")" : "")),
        field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Source text of a form literal and where it sits in the scenario file.
struct FormSource {
  std::string text;
  int line = 1;
  int column = 1;
};

struct Scenario {
  std::string name;
  Chart chart;
  SplittingPtr splitting;
  SplittingPtr alt_splitting;  // null when absent
  std::optional<FormSource> omega;
  std::uint64_t seed = 1;
  std::size_t cases = 25;
  int max_arity = 5;
};

/// Sectioned key = value text:
///
///   [scenario]     name, seed, cases, max_arity
///   [chart]        leaf = x1, x2      transverse = u1, u2
///   [splitting]    u2.x1 = <expr>     (V_u2^x1; absent entries are zero)
///   [alt_splitting]  same keys as [splitting]
///   [omega]        form = <form literal>
///
/// '#' starts a comment.  Syntax errors throw ParseError (line, column); semantic ones ScenarioError.
Scenario parse_scenario(const std::string& text, const std::string& default_name = "scenario");
Scenario load_scenario(const std::string& path);

}  // namespace lrc
