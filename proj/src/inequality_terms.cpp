#include "pants/inequality_terms.hpp"

#include <cmath>

#include "pants/pants_geometry.hpp"

namespace pants::terms {

double symmetrization_a(double x, double y, double z) {
  const double p = 1.0 + x * y * z;
  return one_minus_sq(y) * z * std::log(one_minus_sq(y)) / ((y + x * z) * p) +
         y * one_minus_sq(z) * std::log(one_minus_sq(z)) / ((x * y + z) * p) -
         2.0 * (1.0 - y * z) * std::log1p(-y * z) / ((1.0 + x) * p);
}

double symmetrization_b(double x, double y, double z) {
  const double p = 1.0 + x * y * z;
  const double yz = y * z;
  return -yz * std::log(y) / p - yz * std::log(z) / p - 2.0 * yz * std::log1p(x) / p +
         yz * std::log(x * y + z) / p + yz * std::log(y + x * z) / p -
         (1.0 - x) * (y - z) * (y - z) * std::log1p(x * y * z) /
             ((1.0 + x) * (x * y + z) * (y + x * z));
}

double claim_h0(double y, double z) {
  return z * z * one_minus_sq(y) * std::log(one_minus_sq(y)) +
         y * y * one_minus_sq(z) * std::log(one_minus_sq(z)) -
         2.0 * y * z * (1.0 - y * z) * std::log1p(-y * z);
}

double claim_h1(double y, double z) {
  return z * (y + z) * one_minus_sq(y) * std::log(one_minus_sq(y)) +
         y * (y + z) * one_minus_sq(z) * std::log(one_minus_sq(z)) -
         2.0 * (y * y + z * z) * (1.0 - y * z) * std::log1p(-y * z);
}

double claim_h2(double y, double z) {
  return 2.0 * z * (y + z) * one_minus_sq(y) * std::log(one_minus_sq(y)) +
         2.0 * y * (y + z) * one_minus_sq(z) * std::log(one_minus_sq(z)) -
         2.0 * (y + z) * (y + z) * (1.0 - y * z) * std::log1p(-y * z);
}

double diag_g(double x) {
  const double poly =
      2.0 - x + 3.0 * x * x - 4.0 * std::pow(x, 3) + 9.0 * std::pow(x, 4) -
      9.0 * std::pow(x, 5) + 2.0 * std::pow(x, 6);
  return x * poly / (2.0 * (1.0 + x) * (1.0 - x) * (1.0 - x + x * x)) + std::log1p(-x);
}

namespace {

double g_prime_denominator(double x) {
  const double q = 1.0 - x + x * x;
  return (1.0 - x) * (1.0 - x) * (1.0 + x) * (1.0 + x) * q * q;
}

}  // namespace

double diag_g_prime(double x) {
  const double poly = 5.0 - 15.0 * x + 34.0 * x * x - 46.0 * std::pow(x, 3) +
                      28.0 * std::pow(x, 4) + 4.0 * std::pow(x, 5) - 18.0 * std::pow(x, 6) +
                      13.0 * std::pow(x, 7) - 3.0 * std::pow(x, 8);
  return x * x * poly / g_prime_denominator(x);
}

double diag_g_prime_factored(double x) {
  const double u = 1.0 - x;
  const double inner = 5.0 - 5.0 * x + 19.0 * x * x - 3.0 * std::pow(x, 3) +
                       3.0 * std::pow(x, 4) + 13.0 * std::pow(x, 5) + 5.0 * std::pow(x, 6);
  const double num = 2.0 * std::pow(x, 8) + 10.0 * std::pow(x, 7) * u + u * u * inner;
  return x * x * num / g_prime_denominator(x);
}

double diag_f_prime(double x) {
  const double x3 = x * x * x;
  const double m = 24.0 / ((1.0 - x) * x * (1.0 + x3));
  const double a = x * (1.0 + x) * (1.0 - x) * (1.0 - x);
  const double b = 3.0 * (1.0 - x) * std::pow(x, 6);
  const double c = (1.0 + x3) * (1.0 - x);
  const double d = x * (1.0 + x);
  const double h = x * x * one_minus_sq(x);
  const double q = 1.0 - x + x * x;
  return m * (a * std::log1p(-x) + b * std::log(x) + c * std::log1p(x3) - d * std::log(q) +
              h * std::log(q / (1.0 - x)) - 2.0 * (1.0 + x3) * (1.0 - x) * x3);
}

double eta_minus_phi_dx(double x, double y) {
  const double y2 = y * y;
  const double one_minus_y2 = one_minus_sq(y);
  const double m = 8.0 / (x * (1.0 + x) * (x + y2) * (1.0 + x * y2));
  const double a = (1.0 - x) * x * one_minus_y2 * one_minus_y2;
  const double b = a;
  const double c = (1.0 - x) * (1.0 + x) * (1.0 + x) * y2;
  const double d = x * (1.0 + x) * y2 * (x + y2);
  const double h = x * one_minus_y2 * (x + y2);
  return m * (a * std::log(one_minus_y2) - b * std::log1p(x * y2) +
              c * std::log((1.0 + x) / (1.0 + x * y2)) +
              d * std::log((x + y2) / (1.0 + x * y2)) +
              h * std::log((x + y2) / (x * (1.0 + x * y2))));
}

std::array<double, 3> geometric_step(const std::array<double, 3>& p) {
  const double first = std::sqrt(p[0]) * std::sqrt(std::sqrt(p[1] * p[2]));
  return {first, first, std::sqrt(p[1] * p[2])};
}

IterateExponents iterate_exponents(int n) {
  const double quarter_n = std::pow(0.25, n);
  return {1.0 / 3.0 + (2.0 / 3.0) * quarter_n, 1.0 / 3.0 - (1.0 / 3.0) * quarter_n};
}

std::array<double, 3> geometric_iterate_closed_form(const std::array<double, 3>& p, int n) {
  const auto [a, b] = iterate_exponents(n);
  const double first = std::pow(p[0], a) * std::pow(p[1], b) * std::pow(p[2], b);
  return {first, first, std::pow(p[0], 2.0 * b - a) * std::pow(p[1], a) * std::pow(p[2], a)};
}

}  // namespace pants::terms
