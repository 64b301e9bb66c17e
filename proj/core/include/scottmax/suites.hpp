#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scottmax/sequence.hpp"

namespace scottmax {

/// Outcome of one invariant family checked by a suite.
struct CheckResult {
  std::string label;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::string first_counterexample;
  double seconds = 0;

  bool ok() const { return violations == 0; }
};

struct SuiteReport {
  std::string scope;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool ok() const;
};

struct SuiteOptions {
  Nat bound = 3;          // truncation entry/index bound
  Nat depth = 3;          // truncation sequence length
  Nat random_bound = 50;  // entries for randomized instances
  Nat random_depth = 8;   // lengths for randomized instances
  std::uint64_t random_cases = 10000;
  std::uint64_t seed = 20240521;
  std::size_t max_elems = 4;  // finite-poset enumeration size
};

/// Prefix order on sequences: order axioms, compact elements, prefix sups,
/// upper bounds versus comparability.
SuiteReport run_sequence_suite(const SuiteOptions& opt);

/// The domain L on a truncation plus randomized instances.
SuiteReport run_domain_suite(const SuiteOptions& opt);

/// Every poset on at most max_elems points, plus the two-chain fixture.
SuiteReport run_finite_suite(const SuiteOptions& opt);

}  // namespace scottmax
