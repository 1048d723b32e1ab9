#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eisenlab/report.hpp"

namespace eisenlab::verify {

struct VerifyOptions {
  std::string suite = "core";  // core, recipe, full
  double perturb = 0.0;        // added to every log Gamma value while the suite runs
  std::uint64_t seed = 20240917;
};

std::vector<std::string> suite_names();

/// Runs the registered identity checks of a suite in declared order.
std::vector<MomentReport> run_verify_suite(const VerifyOptions& opt);

}  // namespace eisenlab::verify
