#pragma once

#include <cmath>

namespace pants {

// Neumaier's variant of Kahan summation. Merging two accumulators is
// associative up to the residual rounding of the carried corrections.
class CompensatedSum {
 public:
  CompensatedSum() = default;

  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.carry_);
  }

  CompensatedSum& operator+=(double v) {
    add(v);
    return *this;
  }

  [[nodiscard]] double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace pants
