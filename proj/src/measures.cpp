#include "pants/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "pants/errors.hpp"
#include "pants/special_functions.hpp"

namespace pants {
namespace {

// Evaluates L on a computed argument, reporting it to the sink first.
class RogersTerm {
 public:
  explicit RogersTerm(const ArgumentSink* sink) : sink_(sink) {}

  double operator()(double arg) const {
    if (sink_ != nullptr) (*sink_)(arg);
    return rogers_l(clamp_unit(arg));
  }

 private:
  const ArgumentSink* sink_;
};

constexpr std::array<std::array<int, 3>, 6> kOrderedTriples{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

double phi_x_impl(const PantsShape& p, const ArgumentSink* sink) {
  const RogersTerm L(sink);
  const auto x = p.values();
  const double prod1 = 1.0 + x[0] * x[1] * x[2];
  double sum = 0.0;
  for (const auto& [i, j, k] : kOrderedTriples) {
    const double xi = x[i];
    const double xj = x[j];
    const double xk = x[k];
    const double den = xj + xi * xi * xj + xi * xk + xi * xj * xj * xk;
    const double one_minus_xk2 = one_minus_sq(xk);
    sum += 2.0 * L((xi * xk + xj) * prod1 / den) - 2.0 * L(xj * one_minus_xk2 / den) -
           L((xj * xk + xi) * (xj * xi + xk) / ((xi * xk + xj) * prod1)) -
           L(xi * xi * xj * xj * one_minus_xk2 * one_minus_xk2 /
             ((xk + xi * xj) * (xi + xj * xk) * (xj + xi * xk) * prod1));
  }
  return 4.0 * sum;
}

double phi_y_impl(Length l1, Length l2, Length l3, const ArgumentSink* sink) {
  const RogersTerm L(sink);
  const std::array<double, 3> x{length_to_x(l1).value(), length_to_x(l2).value(),
                                length_to_x(l3).value()};
  std::array<double, 3> y{};
  for (int j = 0; j < 3; ++j) {
    const double c = cosh_m(j + 1, l1, l2, l3);
    y[j] = (c - 1.0) / (c + 1.0);
  }
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double xi2 = x[i] * x[i];
    const double one_minus_xi2 = one_minus_sq(x[i]);
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const double yj = y[j];
      const double den = 1.0 - xi2 * yj;
      sum += 2.0 * L(one_minus_xi2 / den) - 2.0 * L((1.0 - yj) / den) - L(yj) -
             L((1.0 - yj) * (1.0 - yj) * xi2 / (one_minus_xi2 * one_minus_xi2 * yj));
    }
  }
  return 4.0 * sum;
}

double eta_impl(const TorusPantsShape& s, const ArgumentSink* sink) {
  const RogersTerm L(sink);
  const double x = s.boundary.value();
  const double y2 = s.waist.value() * s.waist.value();
  const double d = (x + y2) * (x * y2 + 1.0);
  const double one_minus_y2 = one_minus_sq(s.waist.value());
  return 8.0 * L((x + 1.0) * (x + 1.0) * y2 / d) - 8.0 * L((1.0 - x) * (1.0 - x) * y2 / d) -
         16.0 * L((1.0 - x) / (1.0 + y2)) + 16.0 * L((x * y2 + 1.0) / (1.0 + y2)) -
         16.0 * L((x + y2) / (x * y2 + 1.0)) - 16.0 * L(one_minus_y2 / (1.0 + x)) +
         16.0 * L((x * y2 + 1.0) / (1.0 + x));
}

}  // namespace

double phi_x(const PantsShape& p) { return phi_x_impl(p, nullptr); }
double phi_x(const PantsShape& p, const ArgumentSink& sink) { return phi_x_impl(p, &sink); }

double phi_x(double x1, double x2, double x3, DomainMode mode) {
  return phi_x_impl(PantsShape{XCoord(x1, mode), XCoord(x2, mode), XCoord(x3, mode)}, nullptr);
}

double phi_y(Length l1, Length l2, Length l3) { return phi_y_impl(l1, l2, l3, nullptr); }
double phi_y(Length l1, Length l2, Length l3, const ArgumentSink& sink) {
  return phi_y_impl(l1, l2, l3, &sink);
}

double eta(const TorusPantsShape& s) { return eta_impl(s, nullptr); }
double eta(const TorusPantsShape& s, const ArgumentSink& sink) { return eta_impl(s, &sink); }

double eta(double x, double y, DomainMode mode) {
  return eta_impl(TorusPantsShape{XCoord(x, mode), XCoord(y, mode)}, nullptr);
}

double phi_diag_lower_bound(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw domain_error(fmt::format("phi_diag_lower_bound: t = {} outside [0,1]", t));
  }
  if (t == 0.0) return 0.0;
  const double t3 = t * t * t;
  return -24.0 * t3 * std::log(t) + 24.0 * t3;
}

double dphi_dx1(const PantsShape& p) {
  const auto [x1, x2, x3] = p.values();
  const double prod = x1 * x2 * x3;
  const double p1 = 1.0 + prod;
  const double one_minus_x1sq = one_minus_sq(x1);

  const double a1 = -16.0 * (x1 + x2 * x3) / (one_minus_x1sq * p1);
  const double a23 = -16.0 * x2 * x3 / p1;
  const double b1 = -8.0 * x2 * x3 * (1.0 + x1 * x1 + 2.0 * prod) / (x1 * (x1 + x2 * x3) * p1);
  const double b2 = 8.0 * x3 * one_minus_sq(x2) / ((x2 + x1 * x3) * p1);
  const double b3 = 8.0 * x2 * one_minus_sq(x3) / ((x3 + x1 * x2) * p1);
  const double c1 = (16.0 * x1 + 8.0 * x2 * x3 + 8.0 * x1 * x1 * x2 * x3) / (one_minus_x1sq * p1);
  const double c23 = 8.0 * x2 * x3 / p1;

  const double x1sq = x1 * x1;
  const double x2sq = x2 * x2;
  const double x3sq = x3 * x3;
  const double m_num = 16.0 * x1sq * x1sq * (x2sq + x3sq + x2sq * x3sq) +
                       8.0 * x1sq * x1 * x2 * x3 * (4.0 + x1sq + 3.0 * x2sq + 3.0 * x3sq) +
                       8.0 * x2sq * x3sq * (4.0 * x1sq - 2.0) -
                       8.0 * x1 * x2 * x3 * (1.0 + x2sq + x3sq);
  const double m_den =
      x1 * one_minus_x1sq * (x1 + x2 * x3) * (x2 + x1 * x3) * (x3 + x1 * x2);
  const double m = -m_num / m_den;

  return a1 * std::log(x1) + a23 * std::log(x2) + a23 * std::log(x3) +
         b1 * std::log(one_minus_x1sq) + b2 * std::log(one_minus_sq(x2)) +
         b3 * std::log(one_minus_sq(x3)) + c1 * std::log(x1 + x2 * x3) +
         c23 * std::log(x2 + x1 * x3) + c23 * std::log(x3 + x1 * x2) + m * std::log1p(prod);
}

double deta_dx(const TorusPantsShape& s) {
  const double x = s.boundary.value();
  const double y = s.waist.value();
  const double y2 = y * y;
  const double one_minus_x = 1.0 - x;

  const double A = one_minus_x * y2 * (1.0 + x * x + 2.0 * x * y2);
  const double B = one_minus_x * x * (1.0 - y2 * y2);
  const double C = 2.0 * x * y2 * one_minus_x * (x + y2);
  const double D = one_minus_x * one_minus_x * (1.0 + x) * y2;
  const double E = x * (1.0 + y2) * (x + y2);
  const double M = 8.0 / (one_minus_x * x * (x + y2) * (1.0 + x * y2));

  return M * (A * -std::log1p(-x) + B * std::log(one_minus_sq(y)) +
              C * std::log((1.0 + x * y2) / y) + D * std::log1p(x * y2) +
              E * std::log((x + y2) / (x + x * x * y2)));
}

double deta_dy(const TorusPantsShape& s) {
  const double x = s.boundary.value();
  const double y = s.waist.value();
  const double y2 = y * y;
  const double one_minus_y2 = one_minus_sq(y);

  const double a = one_minus_sq(x) * y2 * one_minus_y2;
  const double b = x * y2 * one_minus_y2 * (x + y2);
  const double c = (1.0 + x) * y2 * (x + y2);
  const double d = x * one_minus_y2 * (1.0 + 2.0 * x * y2 + y2 * y2);
  const double m = 16.0 / (y * one_minus_y2 * (x + y2) * (1.0 + x * y2));

  return m * (a * std::log1p(-x) + b * -std::log(x) +
              c * std::log((x + y2) / (y2 * (1.0 + x * y2))) +
              d * std::log((1.0 + x * y2) / one_minus_y2));
}

double default_fd_step(double x) { return 1e-6 * std::max(std::abs(x), 1e-3); }

std::vector<double> fd_gradient(const ScalarField& f, std::span<const double> point,
                                std::optional<double> step) {
  std::vector<double> probe(point.begin(), point.end());
  std::vector<double> grad(point.size());
  for (std::size_t c = 0; c < point.size(); ++c) {
    const double h = step.value_or(default_fd_step(point[c]));
    if (!(h > 0.0) || point[c] - h <= 0.0 || point[c] + h >= 1.0) {
      throw domain_error(fmt::format(
          "fd_gradient: coordinate {} = {} lacks a margin of {} from the ends of (0,1)", c,
          point[c], h));
    }
    probe[c] = point[c] + h;
    const double up = f(probe);
    probe[c] = point[c] - h;
    const double down = f(probe);
    probe[c] = point[c];
    grad[c] = (up - down) / (2.0 * h);
  }
  return grad;
}

}  // namespace pants
