#pragma once

// Predictor-versus-oracle verification suites shared by the CLI and the
// acceptance tests.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "taufact/lemma_predictors.hpp"
#include "taufact/tau_engine.hpp"

namespace taufact {

struct CaseResult {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t passed() const;
  std::size_t failed() const { return cases.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

struct SuiteOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  EnumerationBudget budget{};
  unsigned max_census_primes = 8;  // per sampled element
  unsigned max_i = 5;              // `main` suite
  unsigned search_bound = 10;      // witness-prime search
  unsigned pool_per_class = 3;     // distinct witness primes drawn per class
};

inline constexpr std::string_view kSuiteNames[] = {"lemma1", "lemma2", "lemma3", "lemma4", "main", "hfd-z-small"};

/// The Z[x] ideal used as the test bed for each class: (4, x), (2, x^2+1),
/// (2, x^2+x+1), (2, x^2+x).
Ideal setup_ideal(IsoClass cls);

/// Random censuses over setup_ideal(cls), materialized with witness primes,
/// predictor compared against the oracle. For Z4, Z2X_X2P1 and F4 every
/// oracle-atomic element must also have a single atomic length.
SuiteReport run_lemma_suite(IsoClass cls, const SuiteOptions& opts);

/// elasticity(x^i (x+1)^i) = i/2 with lengths 2 and i, for i = 2..max_i.
SuiteReport run_main_suite(const SuiteOptions& opts);

/// Every product of at most six primes below 50 under (n): elasticity 1 for
/// n = 1, 2, 3; at most 2 for n = 12, 18 (attainment reported).
SuiteReport run_hfd_z_small(const SuiteOptions& opts);

/// Dispatch by name; Error(ParseError) for unknown suites.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts);

}  // namespace taufact
