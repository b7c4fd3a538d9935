#pragma once

#include <span>

#include "pants/pants_geometry.hpp"

namespace pants {

// Upper bound 2 pi^2 (g-1) e^(L/2) / (L+6) on the number of geodesic pants of
// total boundary length at most L on a closed genus-g surface. `log_bound`
// stays finite where `bound` overflows.
struct CountingBound {
  int genus;
  double total_length;
  double bound;
  double log_bound;
};

[[nodiscard]] CountingBound np_upper_bound(int genus, Length total_length);

// 4 (L+6) e^(-L/2): a floor for the measure of any pants of total boundary
// length L, strictly below phi at the symmetric point exp(-L/6).
[[nodiscard]] double min_measure_floor(Length total_length);

// Volume of the unit tangent bundle, 8 pi^2 (g-1).
[[nodiscard]] double unit_tangent_volume(int genus);

struct BudgetReport {
  bool ok;
  double total;
  double budget;
};

// Compensated total of a list of measures against 8 pi^2 (g-1), allowing a
// relative slack of 1e-12. Negative entries are rejected.
[[nodiscard]] BudgetReport budget_check(std::span<const double> measures, int genus);

}  // namespace pants
