#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace pants {

enum class PrecisionMode { standard, extended };

// Target absolute error for a dilogarithm evaluation. Standard mode runs in
// native double; extended mode runs the same algorithm in 50-digit software
// floating point.
struct Accuracy {
  double abs_tol = 1e-15;
  PrecisionMode mode = PrecisionMode::standard;
};

using ExtendedReal = boost::multiprecision::cpp_bin_float_50;

// Smallest tolerance a mode accepts. The double-returning entry points are
// bounded by the standard floor in either mode since their result is a double.
[[nodiscard]] double minimum_tolerance(PrecisionMode mode);

// Li2(x) = sum_{k>=1} x^k / k^2 on [0,1].
[[nodiscard]] double li2(double x, Accuracy acc = {});

// Rogers' dilogarithm L(x) = Li2(x) + log(x) log(1-x) / 2, with L(0) = 0 and
// L(1) = pi^2/6. Arguments above 1/2 are reflected through
// L(x) + L(1-x) = pi^2/6.
[[nodiscard]] double rogers_l(double x, Accuracy acc = {});

// La(a,b) = L(b) + L((1-b)/(1-ab)) - L((1-a)/(1-ab)) for a, b in (0,1).
[[nodiscard]] double lasso(double a, double b, Accuracy acc = {});

[[nodiscard]] ExtendedReal li2_extended(const ExtendedReal& x, double abs_tol = 1e-40);
[[nodiscard]] ExtendedReal rogers_l_extended(const ExtendedReal& x, double abs_tol = 1e-40);

// Maps values within `slack` of [0,1] onto the interval; anything further out
// is left untouched so that the caller's domain check still fires.
[[nodiscard]] double clamp_unit(double v, double slack = 1e-12);

}  // namespace pants
