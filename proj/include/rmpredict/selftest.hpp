#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rmp {

struct LawResult {
  std::string law;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_counterexample;
};

struct SelftestOptions {
  std::size_t exhaustive_atoms = 4;   // uniform universe checked on every term triple
  std::size_t random_universes = 1000;
  std::size_t max_random_atoms = 10;
  std::size_t samples_per_universe = 40;
  std::uint64_t seed = 0;
  bool include_tnorm = true;
};

struct SelftestReport {
  std::vector<LawResult> laws;
  bool all_passed() const;
  std::size_t total_checks() const;
  std::string summary() const;
};

// Mereology laws (parts, components, Axiom A, class, implication laws 1-7),
// weight axioms and m1-m14, rough inclusion properties, and the t-norm suite.
SelftestReport run_algebra_selftest(const SelftestOptions& options = {});

}  // namespace rmp
