#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "eisenlab/errors.hpp"

namespace eisenlab {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

enum class AccumulatorMode { standard, compensated, double_word };

/// Accuracy contract handed to truncating evaluators.
struct PrecisionBudget {
  double target_abs_err = 1e-12;
  int max_terms = 2000;
  AccumulatorMode accumulator_mode = AccumulatorMode::compensated;

  // binary64 kernels cannot promise better than this in standard mode.
  static constexpr double kStandardFloor = 1e-14;

  void validate() const {
    if (!(target_abs_err > 0.0)) throw InvalidArgument("target_abs_err must be positive");
    if (accumulator_mode == AccumulatorMode::standard && target_abs_err < kStandardFloor)
      throw InvalidArgument("target_abs_err below the binary64 floor in standard mode");
    if (max_terms <= 0) throw InvalidArgument("max_terms must be positive");
  }
};

/// Running sum over real or complex terms with a selectable error model.
template <class T>
class Accumulator {
 public:
  explicit Accumulator(AccumulatorMode mode = AccumulatorMode::compensated) : mode_(mode) {}

  void add(const T& x) {
    switch (mode_) {
      case AccumulatorMode::standard:
        sum_ += x;
        break;
      case AccumulatorMode::compensated: {  // Kahan
        T y = x - comp_;
        T t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
        break;
      }
      case AccumulatorMode::double_word: {  // TwoSum, error carried in comp_
        T t = sum_ + x;
        T bp = t - sum_;
        T err = (sum_ - (t - bp)) + (x - bp);
        sum_ = t;
        comp_ += err;
        break;
      }
    }
  }

  Accumulator& operator+=(const T& x) {
    add(x);
    return *this;
  }

  T value() const { return mode_ == AccumulatorMode::double_word ? sum_ + comp_ : sum_; }

 private:
  AccumulatorMode mode_;
  T sum_{};
  T comp_{};
};

inline double rel_err(Complex a, Complex b) {
  double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace eisenlab
