#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pants {

enum class Sampling { uniform, random };

// Sampling box [min, max]^d. Uniform grids place `count` points per axis
// (endpoints included); random grids draw count^d points from a seeded
// 64-bit Mersenne twister.
struct GridSpec {
  double min = 0.01;
  double max = 0.99;
  int count = 64;
  Sampling sampling = Sampling::uniform;
  std::uint64_t seed = 0;
};

// Throws domain_error unless 0 < min < max < 1 and count >= 2.
void validate(const GridSpec& grid);

// Strict claims pass when lhs - rhs > kStrictFloor; non-strict claims pass
// when lhs - rhs >= -slack, with slack kSignSlack for the sign of a single
// closed-form expression and kValueSlack for comparisons between two
// evaluated measures.
inline constexpr double kStrictFloor = 1e-14;
inline constexpr double kSignSlack = 1e-14;
inline constexpr double kValueSlack = 1e-12;

// A failed point with enough data to replay it.
struct Failure {
  std::string check;
  std::vector<double> point;
  double lhs;
  double rhs;
  double margin;
};

struct CheckSummary {
  std::string name;
  bool strict;
  std::size_t points;
  double worst_margin;
  bool pass;
};

struct VerificationReport {
  std::string suite;
  std::size_t points_checked = 0;
  // First failures in evaluation order, capped at kMaxRecordedFailures;
  // failure_count has the total.
  std::vector<Failure> failures;
  std::size_t failure_count = 0;
  double worst_margin = 0.0;
  bool pass = true;
  // Set when a coordinate was evaluated at 1 - 1e-9 in place of 1.
  bool limit_mode = false;
  std::vector<CheckSummary> checks;
};

inline constexpr std::size_t kMaxRecordedFailures = 64;

// `threads` bounds the worker count used to evaluate grid points; results do
// not depend on it.
[[nodiscard]] VerificationReport suite_monotone_phi(const GridSpec& grid, unsigned threads = 1);
[[nodiscard]] VerificationReport suite_monotone_eta(const GridSpec& grid, unsigned threads = 1);
[[nodiscard]] VerificationReport suite_eta_dominates(const GridSpec& grid, unsigned threads = 1);
[[nodiscard]] VerificationReport suite_symmetrization(const GridSpec& grid, unsigned threads = 1);
[[nodiscard]] VerificationReport suite_geometric_mean(const GridSpec& grid, unsigned threads = 1);
[[nodiscard]] VerificationReport suite_diag_lower_bound(const GridSpec& grid, unsigned threads = 1);
[[nodiscard]] VerificationReport suite_degeneration(const GridSpec& grid, unsigned threads = 1);

[[nodiscard]] std::vector<VerificationReport> run_all(const GridSpec& grid, unsigned threads = 1);

// Suite names as used on the command line ("monotone-phi", ..., "degeneration").
[[nodiscard]] const std::vector<std::string>& suite_names();
[[nodiscard]] VerificationReport run_suite(const std::string& name, const GridSpec& grid,
                                           unsigned threads = 1);

}  // namespace pants
