#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/foliation.hpp"
#include "lrc/scenario.hpp"

namespace lrc {

/// A suite cannot run with the given scenario (missing [omega], [alt_splitting], unknown name ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CaseRecord {
  std::string id;
  bool passed = true;
  std::string witness;  // "<n> term(s): <residual>" for failures
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  bool all_passed() const;
};

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cases;
  std::optional<int> max_arity;
  BracketMutation mutation = BracketMutation::None;
};

/// fn, foliation, jacobiator, morphism, presymplectic, splitting, derived, transfer, all.
const std::vector<std::string>& suite_names();

/// Every sub-suite restarts the generator from the seed, so "all" reproduces the single suites.
SuiteReport run_suite(const Scenario& sc, const std::string& suite, const RunOptions& opt = {});

/// Number of additive terms at the top level of a printed residual.
std::size_t term_count(const std::string& residual);

/// Parse the names accepted by the mutation hook ("drop-parity", ...); throws ConfigError.
BracketMutation parse_mutation(const std::string& name);

}  // namespace lrc
