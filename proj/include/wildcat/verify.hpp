#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wildcat/motion_plan.hpp"

namespace wildcat {

struct VerifyParams {
  std::size_t samples = 10000;
  double delta = 1e-3;
  double epsilon = 5e-2;
  std::uint64_t seed = 0;
  std::size_t time_samples = 32;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  // first failing pair, empty on success
};

struct VerificationReport {
  std::size_t strata_count = 0;
  std::size_t expected_strata = 0;
  std::size_t samples = 0;
  std::size_t continuity_pairs = 0;  // perturbed pairs that were compared
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult& check(const std::string& name) const;
};

/// Checks, in order: graph, strata-count, closed, partition, section,
/// continuity. Partition and section are exhaustive over pairs of cell
/// representatives (vertices and edge parameters 1/4, 1/2, 3/4) and also run
/// on the samples. Sampling is seeded and sequential, so reports are
/// reproducible.
VerificationReport verify_plan(const MotionPlan& plan, const MultiGraph& g,
                               const VerifyParams& params = {});

}  // namespace wildcat
