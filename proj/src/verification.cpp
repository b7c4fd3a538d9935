#include "pants/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "pants/errors.hpp"
#include "pants/inequality_terms.hpp"
#include "pants/measures.hpp"

namespace pants {
namespace {

using Coords = std::array<double, 3>;
using Values = std::vector<double>;

// Offset used for forward differences on randomly sampled grids.
constexpr double kRandomForwardStep = 1e-3;
constexpr std::size_t kIterateSamples = 100;
constexpr int kIterateDepth = 10;

struct PointSet {
  int dims = 0;
  std::vector<Coords> coords;
  // next[p][axis]: index of the forward neighbour along `axis`, or -1.
  std::vector<std::array<long, 3>> next;
  std::size_t base_count = 0;
};

PointSet make_points(const GridSpec& grid, int dims, const std::vector<int>& forward_axes) {
  validate(grid);
  PointSet set;
  set.dims = dims;
  const auto n = static_cast<std::size_t>(grid.count);
  std::size_t total = 1;
  for (int d = 0; d < dims; ++d) total *= n;
  set.base_count = total;
  set.coords.resize(total);
  set.next.assign(total, {-1, -1, -1});

  if (grid.sampling == Sampling::uniform) {
    std::vector<double> axis(n);
    for (std::size_t i = 0; i < n; ++i) {
      axis[i] = i + 1 == n ? grid.max
                           : grid.min + (grid.max - grid.min) * static_cast<double>(i) /
                                            static_cast<double>(n - 1);
    }
    for (std::size_t lin = 0; lin < total; ++lin) {
      std::size_t rest = lin;
      std::size_t stride = 1;
      Coords c{0.0, 0.0, 0.0};
      for (int d = 0; d < dims; ++d) {
        const std::size_t idx = rest % n;
        rest /= n;
        c[d] = axis[idx];
        if (idx + 1 < n) set.next[lin][d] = static_cast<long>(lin + stride);
        stride *= n;
      }
      set.coords[lin] = c;
    }
    for (int d = dims; d < 3; ++d) {
      for (auto& nx : set.next) nx[d] = -1;
    }
    return set;
  }

  std::mt19937_64 rng(grid.seed);
  std::uniform_real_distribution<double> dist(grid.min, grid.max);
  for (std::size_t p = 0; p < total; ++p) {
    Coords c{0.0, 0.0, 0.0};
    for (int d = 0; d < dims; ++d) c[d] = dist(rng);
    set.coords[p] = c;
  }
  for (std::size_t p = 0; p < total; ++p) {
    for (const int axis : forward_axes) {
      Coords shifted = set.coords[p];
      shifted[axis] += kRandomForwardStep;
      if (shifted[axis] >= kLimitOne) continue;
      set.next[p][axis] = static_cast<long>(set.coords.size());
      set.coords.push_back(shifted);
      set.next.push_back({-1, -1, -1});
    }
  }
  return set;
}

std::vector<Values> evaluate(const PointSet& points, const std::function<Values(const Coords&)>& field,
                             unsigned threads) {
  std::vector<Values> out(points.coords.size());
  const std::size_t total = out.size();
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) out[i] = field(points.coords[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < total; i += workers) out[i] = field(points.coords[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

struct Comparison {
  double lhs;
  double rhs;
};

class ReportBuilder {
 public:
  ReportBuilder(std::string suite, bool limit_mode) {
    report_.suite = std::move(suite);
    report_.limit_mode = limit_mode;
  }

  std::size_t add_check(std::string name, bool strict, double slack = 0.0) {
    report_.checks.push_back({std::move(name), strict, 0, std::numeric_limits<double>::infinity(), true});
    slack_.push_back(slack);
    return report_.checks.size() - 1;
  }

  void record(std::size_t check, std::span<const double> point, Comparison c) {
    CheckSummary& s = report_.checks[check];
    const double margin = c.lhs - c.rhs;
    ++s.points;
    s.worst_margin = std::min(s.worst_margin, margin);
    worst_ = std::min(worst_, margin);
    const bool ok = s.strict ? margin > kStrictFloor : margin >= -slack_[check];
    if (ok) return;
    s.pass = false;
    ++report_.failure_count;
    if (report_.failures.size() < kMaxRecordedFailures) {
      report_.failures.push_back({s.name, {point.begin(), point.end()}, c.lhs, c.rhs, margin});
    }
  }

  void add_points(std::size_t n) { report_.points_checked += n; }

  VerificationReport finish() {
    for (auto& s : report_.checks) {
      if (s.points == 0) s.worst_margin = 0.0;
    }
    report_.worst_margin = std::isfinite(worst_) ? worst_ : 0.0;
    report_.pass = report_.failure_count == 0;
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::vector<double> slack_;
  double worst_ = std::numeric_limits<double>::infinity();
};

// Point-local view handed to each check.
struct PointView {
  const PointSet& set;
  const std::vector<Values>& values;
  std::size_t index;

  [[nodiscard]] const Values& here() const { return values[index]; }
  [[nodiscard]] const Values* forward(int axis) const {
    const long n = set.next[index][axis];
    return n < 0 ? nullptr : &values[static_cast<std::size_t>(n)];
  }
};

struct CheckSpec {
  std::string name;
  bool strict;
  double slack;
  std::function<std::optional<Comparison>(const PointView&)> compare;
};

struct GridSuite {
  std::string name;
  int dims;
  std::vector<int> forward_axes;
  bool limit_mode;
  std::function<Values(const Coords&)> field;
  std::vector<CheckSpec> checks;
};

std::vector<std::size_t> register_checks(ReportBuilder& builder, const std::vector<CheckSpec>& checks) {
  std::vector<std::size_t> ids;
  for (const auto& c : checks) ids.push_back(builder.add_check(c.name, c.strict, c.slack));
  return ids;
}

void run_grid(ReportBuilder& builder, const GridSuite& suite, const GridSpec& grid, unsigned threads) {
  const PointSet points = make_points(grid, suite.dims, suite.forward_axes);
  const std::vector<Values> values = evaluate(points, suite.field, threads);
  const auto ids = register_checks(builder, suite.checks);
  builder.add_points(points.base_count);
  for (std::size_t p = 0; p < points.base_count; ++p) {
    const PointView view{points, values, p};
    const std::span<const double> coords(points.coords[p].data(), static_cast<std::size_t>(suite.dims));
    for (std::size_t c = 0; c < suite.checks.size(); ++c) {
      if (const auto cmp = suite.checks[c].compare(view)) builder.record(ids[c], coords, *cmp);
    }
  }
}

VerificationReport run_simple(const GridSuite& suite, const GridSpec& grid, unsigned threads) {
  ReportBuilder builder(suite.name, suite.limit_mode);
  run_grid(builder, suite, grid, threads);
  return builder.finish();
}

CheckSpec positive(std::string name, std::size_t slot) {
  return {std::move(name), true, 0.0, [slot](const PointView& v) -> std::optional<Comparison> {
            return Comparison{v.here()[slot], 0.0};
          }};
}

CheckSpec nonnegative(std::string name, std::size_t slot) {
  return {std::move(name), false, kSignSlack,
          [slot](const PointView& v) -> std::optional<Comparison> {
            return Comparison{v.here()[slot], 0.0};
          }};
}

CheckSpec dominates(std::string name, std::size_t big, std::size_t small) {
  return {std::move(name), false, kValueSlack,
          [big, small](const PointView& v) -> std::optional<Comparison> {
            return Comparison{v.here()[big], v.here()[small]};
          }};
}

// value[slot] at the forward neighbour along `axis` exceeds its value here.
CheckSpec increasing(std::string name, std::size_t slot, int axis) {
  return {std::move(name), true, 0.0, [slot, axis](const PointView& v) -> std::optional<Comparison> {
            const Values* fwd = v.forward(axis);
            if (fwd == nullptr) return std::nullopt;
            return Comparison{(*fwd)[slot], v.here()[slot]};
          }};
}

// value[big] - value[small] is nondecreasing along `axis`.
CheckSpec gap_nondecreasing(std::string name, std::size_t big, std::size_t small, int axis) {
  return {std::move(name), false, kValueSlack,
          [big, small, axis](const PointView& v) -> std::optional<Comparison> {
            const Values* fwd = v.forward(axis);
            if (fwd == nullptr) return std::nullopt;
            return Comparison{(*fwd)[big] - (*fwd)[small], v.here()[big] - v.here()[small]};
          }};
}

TorusPantsShape torus_shape(const Coords& c) { return {XCoord(c[0]), XCoord(c[1])}; }
PantsShape pants_shape(const Coords& c) { return {XCoord(c[0]), XCoord(c[1]), XCoord(c[2])}; }

}  // namespace

void validate(const GridSpec& grid) {
  if (grid.count < 2) {
    throw domain_error(fmt::format("grid count must be at least 2 (got {}); empty grids are rejected", grid.count));
  }
  if (!(grid.min > 0.0 && grid.min < grid.max && grid.max < 1.0)) {
    throw domain_error(fmt::format("grid bounds must satisfy 0 < min < max < 1 (got [{}, {}])",
                                   grid.min, grid.max));
  }
}

VerificationReport suite_monotone_phi(const GridSpec& grid, unsigned threads) {
  return run_simple(
      {"monotone-phi", 3, {0}, false,
       [](const Coords& c) -> Values {
         const PantsShape p = pants_shape(c);
         return {phi_x(p), dphi_dx1(p)};
       },
       {positive("dphi/dx1 > 0", 1), increasing("phi increases along x1", 0, 0)}},
      grid, threads);
}

VerificationReport suite_monotone_eta(const GridSpec& grid, unsigned threads) {
  return run_simple(
      {"monotone-eta", 2, {0, 1}, false,
       [](const Coords& c) -> Values {
         const TorusPantsShape s = torus_shape(c);
         return {eta(s), deta_dx(s), deta_dy(s)};
       },
       {positive("deta/dx > 0", 1), positive("deta/dy > 0", 2),
        increasing("eta increases along x", 0, 0), increasing("eta increases along y", 0, 1)}},
      grid, threads);
}

VerificationReport suite_eta_dominates(const GridSpec& grid, unsigned threads) {
  return run_simple(
      {"eta-dominates", 2, {0}, false,
       [](const Coords& c) -> Values {
         return {eta(torus_shape(c)), phi_x(c[0], c[1], c[1]), terms::eta_minus_phi_dx(c[0], c[1])};
       },
       {dominates("eta(x,y) >= phi(x,y,y)", 0, 1),
        gap_nondecreasing("eta(x,y) - phi(x,y,y) nondecreasing in x", 0, 1, 0),
        positive("d/dx [eta(x,y) - phi(x,y,y)] > 0", 2)}},
      grid, threads);
}

VerificationReport suite_symmetrization(const GridSpec& grid, unsigned threads) {
  return run_simple(
      {"symmetrization", 3, {0}, false,
       [](const Coords& c) -> Values {
         const auto [x, y, z] = c;
         const double s = std::sqrt(y * z);
         return {phi_x(pants_shape(c)),
                 phi_x(x, s, s),
                 terms::symmetrization_a(x, y, z),
                 terms::symmetrization_b(x, y, z),
                 terms::claim_h0(y, z),
                 terms::claim_h1(y, z),
                 terms::claim_h2(y, z)};
       },
       {dominates("phi(x,y,z) >= phi(x,sqrt(yz),sqrt(yz))", 0, 1),
        gap_nondecreasing("phi(x,y,z) - phi(x,sqrt(yz),sqrt(yz)) nondecreasing in x", 0, 1, 0),
        nonnegative("A >= 0", 2), nonnegative("B >= 0", 3), nonnegative("h0 >= 0", 4),
        nonnegative("h1 >= 0", 5), nonnegative("h2 >= 0", 6)}},
      grid, threads);
}

VerificationReport suite_geometric_mean(const GridSpec& grid, unsigned threads) {
  ReportBuilder builder("geometric-mean", false);
  run_grid(builder,
           {"geometric-mean", 3, {}, false,
            [](const Coords& c) -> Values {
              const auto [x, y, z] = c;
              const double s = std::sqrt(y * z);
              const double t = std::cbrt(x * y * z);
              return {phi_x(pants_shape(c)), phi_x(x, s, s), phi_x(t, t, t), phi_diag_lower_bound(t)};
            },
            {dominates("phi(x,y,z) >= phi(t,t,t)", 0, 2),
             dominates("phi(x,sqrt(yz),sqrt(yz)) >= phi(t,t,t)", 1, 2),
             positive("phi(t,t,t) > -24t^3 log t + 24t^3", 2)}},
           grid, threads);

  // Iterates of f on seeded samples: closed-form exponents and monotone decay.
  const std::size_t exponents = builder.add_check("f^n matches closed-form exponents (1e-12)", false, 0.0);
  const std::size_t decay = builder.add_check("phi(f^n) nonincreasing in n", false, kValueSlack);
  std::mt19937_64 rng(grid.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> dist(grid.min, grid.max);
  for (std::size_t s = 0; s < kIterateSamples; ++s) {
    const Coords start{dist(rng), dist(rng), dist(rng)};
    Coords current = start;
    double previous = phi_x(pants_shape(current));
    for (int n = 1; n <= kIterateDepth; ++n) {
      current = terms::geometric_step(current);
      const Coords closed = terms::geometric_iterate_closed_form(start, n);
      double err = 0.0;
      for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(current[i] - closed[i]));
      const std::array<double, 4> point{start[0], start[1], start[2], static_cast<double>(n)};
      builder.record(exponents, point, {1e-12, err});
      const double value = phi_x(pants_shape(current));
      builder.record(decay, point, {previous, value});
      previous = value;
    }
  }
  builder.add_points(kIterateSamples);
  return builder.finish();
}

VerificationReport suite_diag_lower_bound(const GridSpec& grid, unsigned threads) {
  return run_simple(
      {"diag-bound", 1, {}, false,
       [](const Coords& c) -> Values {
         const double x = c[0];
         return {phi_x(x, x, x), phi_diag_lower_bound(x), terms::diag_g(x), terms::diag_g_prime(x),
                 terms::diag_g_prime_factored(x)};
       },
       {{"phi(x,x,x) > -24x^3 log x + 24x^3", true, 0.0,
         [](const PointView& v) -> std::optional<Comparison> {
           return Comparison{v.here()[0], v.here()[1]};
         }},
        positive("g(x) > 0", 2), positive("g'(x) > 0", 3), positive("g'(x) > 0 (factored numerator)", 4)}},
      grid, threads);
}

VerificationReport suite_degeneration(const GridSpec& grid, unsigned threads) {
  return run_simple(
      {"degeneration", 3, {0}, true,
       [](const Coords& c) -> Values {
         const auto [x, y, z] = c;
         return {phi_x(x, y * z, kLimitOne, DomainMode::limit), phi_x(pants_shape(c))};
       },
       {dominates("phi(x,yz,1) >= phi(x,y,z)", 0, 1),
        gap_nondecreasing("phi(x,yz,1) - phi(x,y,z) nondecreasing in x", 0, 1, 0)}},
      grid, threads);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"monotone-phi",   "monotone-eta", "eta-dominates",
                                              "symmetrization", "geometric-mean", "diag-bound",
                                              "degeneration"};
  return names;
}

VerificationReport run_suite(const std::string& name, const GridSpec& grid, unsigned threads) {
  if (name == "monotone-phi") return suite_monotone_phi(grid, threads);
  if (name == "monotone-eta") return suite_monotone_eta(grid, threads);
  if (name == "eta-dominates") return suite_eta_dominates(grid, threads);
  if (name == "symmetrization") return suite_symmetrization(grid, threads);
  if (name == "geometric-mean") return suite_geometric_mean(grid, threads);
  if (name == "diag-bound") return suite_diag_lower_bound(grid, threads);
  if (name == "degeneration") return suite_degeneration(grid, threads);
  throw domain_error(fmt::format("unknown suite '{}'", name));
}

std::vector<VerificationReport> run_all(const GridSpec& grid, unsigned threads) {
  validate(grid);
  std::vector<VerificationReport> reports;
  for (const auto& name : suite_names()) reports.push_back(run_suite(name, grid, threads));
  return reports;
}

}  // namespace pants
