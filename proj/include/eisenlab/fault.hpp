#pragma once

#include <atomic>

namespace eisenlab::fault {

/// Additive offset applied to every binary64 log_gamma result. Zero in normal
/// runs; `verify --perturb` sets it to check that the suite notices.
inline std::atomic<double> log_gamma_offset{0.0};

}  // namespace eisenlab::fault
