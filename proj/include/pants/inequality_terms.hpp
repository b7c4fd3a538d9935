#pragma once

#include <array>

// Intermediate expressions from the monotonicity and convexity arguments for
// phi and eta. Each one is evaluated in the factored form it is stated in; the
// verification suites check their signs pointwise.
namespace pants::terms {

// d/dx [phi(x,y,z) - phi(x, sqrt(yz), sqrt(yz))] = 8 (A + B).
[[nodiscard]] double symmetrization_a(double x, double y, double z);
[[nodiscard]] double symmetrization_b(double x, double y, double z);

// A (1+xyz)(xy+z)(xz+y)(1+x) = x^2 h2 + (x - x^2) h1 + (1 - x^2) h0.
[[nodiscard]] double claim_h0(double y, double z);
[[nodiscard]] double claim_h1(double y, double z);
[[nodiscard]] double claim_h2(double y, double z);

// Auxiliary g with f'(x) >= 24(1-x)/(1-x+x^2) g(x), where
// f(x) = phi(x,x,x) + 24 x^3 log x - 24 x^3.
[[nodiscard]] double diag_g(double x);
[[nodiscard]] double diag_g_prime(double x);
// Same derivative with its numerator written as a sum of positive terms.
[[nodiscard]] double diag_g_prime_factored(double x);
// Closed form of f'(x).
[[nodiscard]] double diag_f_prime(double x);

// d/dx [eta(x,y) - phi(x,y,y)].
[[nodiscard]] double eta_minus_phi_dx(double x, double y);

// f(x,y,z) = (x^(1/2) y^(1/4) z^(1/4), x^(1/2) y^(1/4) z^(1/4), y^(1/2) z^(1/2)).
[[nodiscard]] std::array<double, 3> geometric_step(const std::array<double, 3>& p);

struct IterateExponents {
  double a;
  double b;
};

// a_n = 1/3 + (2/3) 4^-n, b_n = 1/3 - (1/3) 4^-n.
[[nodiscard]] IterateExponents iterate_exponents(int n);

// f^n(x,y,z) = (x^a y^b z^b, x^a y^b z^b, x^(2b-a) y^a z^a).
[[nodiscard]] std::array<double, 3> geometric_iterate_closed_form(const std::array<double, 3>& p,
                                                                  int n);

}  // namespace pants::terms
