#pragma once

#include <cmath>

#include "expectile/errors.hpp"

namespace expectile {

/// Asymmetry level of an expectile, strictly inside (0, 1).
class AlphaLevel {
 public:
  explicit AlphaLevel(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0)) {
      throw InvalidAlpha("alpha must lie in the open interval (0, 1)");
    }
  }

  double value() const noexcept { return value_; }
  AlphaLevel complement() const { return AlphaLevel(1.0 - value_); }

  bool is_half() const noexcept { return value_ == 0.5; }
  bool below_half() const noexcept { return value_ < 0.5; }
  bool above_half() const noexcept { return value_ > 0.5; }

  friend bool operator==(AlphaLevel a, AlphaLevel b) noexcept {
    return a.value_ == b.value_;
  }

 private:
  double value_;
};

}  // namespace expectile
