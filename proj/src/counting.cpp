#include "pants/counting.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pants/compensated_sum.hpp"
#include "pants/errors.hpp"

namespace pants {
namespace {

void check_genus(int genus) {
  if (genus < 2) throw domain_error(fmt::format("genus must be at least 2, got {}", genus));
}

}  // namespace

double unit_tangent_volume(int genus) {
  check_genus(genus);
  return 8.0 * std::numbers::pi * std::numbers::pi * (genus - 1);
}

CountingBound np_upper_bound(int genus, Length total_length) {
  check_genus(genus);
  const double L = total_length.value();
  const double log_bound = std::log(2.0 * std::numbers::pi * std::numbers::pi * (genus - 1)) +
                           0.5 * L - std::log(L + 6.0);
  return {genus, L, std::exp(log_bound), log_bound};
}

double min_measure_floor(Length total_length) {
  const double L = total_length.value();
  return 4.0 * (L + 6.0) * std::exp(-0.5 * L);
}

BudgetReport budget_check(std::span<const double> measures, int genus) {
  const double budget = unit_tangent_volume(genus);
  CompensatedSum sum;
  for (const double m : measures) {
    if (!(m >= 0.0)) throw domain_error(fmt::format("measure {} is negative or NaN", m));
    sum.add(m);
  }
  const double total = sum.value();
  return {total <= budget * (1.0 + 1e-12), total, budget};
}

}  // namespace pants
