#include "pants/pants_geometry.hpp"

#include <cmath>

#include <fmt/format.h>

#include "pants/errors.hpp"

namespace pants {

Length::Length(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw domain_error(fmt::format("length must be positive and finite, got {}", value));
  }
}

XCoord::XCoord(double value, DomainMode mode) : value_(value), mode_(mode) {
  const bool ok = mode == DomainMode::strict
                      ? (value >= kBoundaryMargin && value < kLimitOne)
                      : (value > 0.0 && value <= kLimitOne);
  if (!ok) {
    throw domain_error(fmt::format(
        "coordinate {} outside the admissible range ({} mode requires {})", value,
        mode == DomainMode::strict ? "strict" : "limit",
        mode == DomainMode::strict ? "1e-9 <= x < 1 - 1e-9" : "0 < x <= 1 - 1e-9"));
  }
}

XCoord length_to_x(Length l, DomainMode mode) { return XCoord(std::exp(-0.5 * l.value()), mode); }

Length x_to_length(XCoord x) { return Length(-2.0 * std::log(x.value())); }

double cosh_m(int i, Length l1, Length l2, Length l3) {
  const std::array<double, 3> half{0.5 * l1.value(), 0.5 * l2.value(), 0.5 * l3.value()};
  if (i < 1 || i > 3) throw domain_error(fmt::format("cosh_m: index {} not in {{1,2,3}}", i));
  const int a = i - 1;
  const int b = (a + 1) % 3;
  const int c = (a + 2) % 3;
  return (std::cosh(half[a]) + std::cosh(half[b]) * std::cosh(half[c])) /
         (std::sinh(half[b]) * std::sinh(half[c]));
}

double y_coord(int j, const PantsShape& p) {
  if (j < 1 || j > 3) throw domain_error(fmt::format("y_coord: index {} not in {{1,2,3}}", j));
  const auto x = p.values();
  const double xj = x[j - 1];
  const double xi = x[j % 3];
  const double xk = x[(j + 1) % 3];
  const double prod = x[0] * x[1] * x[2];
  return (xj * xk + xi) * (xj * xi + xk) / ((xi * xk + xj) * (1.0 + prod));
}

double torus_tanh2_q(const TorusPantsShape& s) {
  const double x = s.boundary.value();
  const double y2 = s.waist.value() * s.waist.value();
  return (x + 1.0) * (x + 1.0) * y2 / ((x + y2) * (x * y2 + 1.0));
}

double torus_tanh2_h(const TorusPantsShape& s) {
  const double x = s.boundary.value();
  const double y2 = s.waist.value() * s.waist.value();
  return (x + y2) / (x * y2 + 1.0);
}

double torus_sech2_p(const TorusPantsShape& s) {
  const double x = s.boundary.value();
  const double y2 = s.waist.value() * s.waist.value();
  return (1.0 - x) * (1.0 - x) * y2 / ((x + y2) * (x * y2 + 1.0));
}

}  // namespace pants
