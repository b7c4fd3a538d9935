#include "pants/special_functions.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/constants/constants.hpp>
#include <fmt/format.h>

#include "pants/errors.hpp"

namespace pants {
namespace {

constexpr double kStandardFloor = 1e-15;
constexpr double kExtendedFloor = 1e-40;
constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw domain_error(fmt::format("{}: argument {} outside [0,1]", what, x));
  }
}

void check_tolerance(const Accuracy& acc) {
  if (!(acc.abs_tol >= kStandardFloor)) {
    throw accuracy_error(fmt::format(
        "requested abs_tol {} below the {:g} floor of a double-valued result",
        acc.abs_tol, kStandardFloor));
  }
}

// Raw power series on [0, 1/2]; stops once the geometric tail bound
// x^(k+1) / ((k+1)^2 (1-x)) drops below tol / 4.
template <typename Real>
Real li2_series(const Real& x, double tol) {
  if (x == 0) return Real(0);
  const Real tail_scale = 1 / (1 - x);
  Real power = x;
  Real sum = 0;
  for (long k = 1;; ++k) {
    sum += power / (Real(k) * k);
    power *= x;
    const Real next_k = Real(k + 1);
    if (power * tail_scale / (next_k * next_k) < tol / 4) break;
  }
  return sum;
}

double log_product(double x) {
  // log(x) log(1-x) -> 0 at both endpoints.
  if (x < 1e-300 || 1.0 - x < 1e-16) return 0.0;
  return std::log(x) * std::log1p(-x);
}

double rogers_standard(double x, double tol) {
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kZeta2;
  if (x > 0.5) return kZeta2 - rogers_standard(1.0 - x, tol);
  return li2_series(x, tol) + 0.5 * log_product(x);
}

double li2_standard(double x, double tol) {
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kZeta2;
  if (x <= 0.5) return li2_series(x, tol);
  return kZeta2 - log_product(x) - li2_series(1.0 - x, tol);
}

ExtendedReal zeta2_extended() {
  const ExtendedReal pi = boost::math::constants::pi<ExtendedReal>();
  return pi * pi / 6;
}

ExtendedReal log_product_extended(const ExtendedReal& x) {
  if (x == 0 || x == 1) return ExtendedReal(0);
  return boost::multiprecision::log(x) * boost::multiprecision::log1p(-x);
}

void check_extended(const ExtendedReal& x, double abs_tol, const char* what) {
  if (!(x >= 0 && x <= 1)) {
    throw domain_error(fmt::format("{}: argument {} outside [0,1]", what,
                                   x.convert_to<double>()));
  }
  if (!(abs_tol >= kExtendedFloor)) {
    throw accuracy_error(fmt::format("requested abs_tol {} below the extended floor {:g}",
                                     abs_tol, kExtendedFloor));
  }
}

}  // namespace

double minimum_tolerance(PrecisionMode mode) {
  return mode == PrecisionMode::standard ? kStandardFloor : kExtendedFloor;
}

double clamp_unit(double v, double slack) {
  if (v < 0.0 && v >= -slack) return 0.0;
  if (v > 1.0 && v <= 1.0 + slack) return 1.0;
  return v;
}

ExtendedReal li2_extended(const ExtendedReal& x, double abs_tol) {
  check_extended(x, abs_tol, "li2");
  if (x == 0) return ExtendedReal(0);
  if (x == 1) return zeta2_extended();
  if (x <= 0.5) return li2_series(x, abs_tol);
  return zeta2_extended() - log_product_extended(x) - li2_series(ExtendedReal(1 - x), abs_tol);
}

ExtendedReal rogers_l_extended(const ExtendedReal& x, double abs_tol) {
  check_extended(x, abs_tol, "rogers_l");
  if (x == 0) return ExtendedReal(0);
  if (x == 1) return zeta2_extended();
  if (x > 0.5) return zeta2_extended() - rogers_l_extended(ExtendedReal(1 - x), abs_tol);
  return li2_series(x, abs_tol) + log_product_extended(x) / 2;
}

double li2(double x, Accuracy acc) {
  check_unit(x, "li2");
  check_tolerance(acc);
  if (acc.mode == PrecisionMode::extended) {
    return li2_extended(ExtendedReal(x), kExtendedFloor).convert_to<double>();
  }
  return li2_standard(x, acc.abs_tol);
}

double rogers_l(double x, Accuracy acc) {
  check_unit(x, "rogers_l");
  check_tolerance(acc);
  if (acc.mode == PrecisionMode::extended) {
    return rogers_l_extended(ExtendedReal(x), kExtendedFloor).convert_to<double>();
  }
  return rogers_standard(x, acc.abs_tol);
}

double lasso(double a, double b, Accuracy acc) {
  if (!(a > 0.0 && a < 1.0) || !(b > 0.0 && b < 1.0)) {
    throw domain_error(fmt::format("lasso: arguments ({}, {}) must lie in (0,1)", a, b));
  }
  const double denom = 1.0 - a * b;
  return rogers_l(b, acc) + rogers_l(clamp_unit((1.0 - b) / denom), acc) -
         rogers_l(clamp_unit((1.0 - a) / denom), acc);
}

}  // namespace pants
