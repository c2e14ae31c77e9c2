#pragma once

// Cross-module identity suites run by `sigmod8 selfcheck`: Morita,
// van der Blij, BK = 4 Arf, Gauss sum vs classification, and closed vs
// general Wall form. Deterministic given the seed.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sigmod8/fibration.hpp"

namespace sigmod8 {

using ClosedWallFn = std::function<RatSymForm(const SymplecticMatrix&, const SymplecticMatrix&)>;

struct SelfcheckOptions {
  std::size_t max_dim = 5;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  /// Closed-form Wall evaluator under test.
  ClosedWallFn closed_wall = wall_form_closed;
};

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Smallest failing instance found, empty when the suite passed.
  std::string counterexample;

  bool passed() const noexcept { return failures == 0; }
};

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options);

}  // namespace sigmod8
