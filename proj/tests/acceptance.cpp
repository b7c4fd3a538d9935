// Acceptance run: one PASS/FAIL line per criterion, with the measured
// quantity, its threshold and the wall time.
//
// Usage: acceptance [--expect-red N[,N...]]
// Exits 0 when the set of failing criteria equals the expected-red set
// (empty by default), 1 otherwise.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "pants/counting.hpp"
#include "pants/inequality_terms.hpp"
#include "pants/measures.hpp"
#include "pants/special_functions.hpp"
#include "pants/torus_enumeration.hpp"
#include "pants/verification.hpp"

using namespace pants;

namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

// Cutoff at which the McShane partial sum of the Markov torus first comes
// within 1e-3 of 1/2 (gap 1.0e-4; at height 4 the gap is still 1.05e-3).
constexpr std::int64_t kMcShaneHeight = 5;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds; 0 means no limit
  std::function<Outcome()> run;
};

std::string sci(double v) { return fmt::format("{:.3e}", v); }

Outcome rogers_function() {
  const double endpoint = std::abs(rogers_l(1.0) - kZeta2);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = (i + 0.5) / 10000.0;
    worst = std::max(worst, std::abs(rogers_l(x) + rogers_l(1.0 - x) - kZeta2));
  }
  return {endpoint < 1e-12 && worst < 1e-11,
          fmt::format("|L(1)-pi^2/6| = {} (< 1e-12), reflection residual {} (< 1e-11) on 1e4 points",
                      sci(endpoint), sci(worst))};
}

Outcome two_forms() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const double x1 = u(rng), x2 = u(rng), x3 = u(rng);
    const double a = phi_x(x1, x2, x3);
    const double b = phi_y(Length(-2 * std::log(x1)), Length(-2 * std::log(x2)), Length(-2 * std::log(x3)));
    worst = std::max(worst, std::abs(a - b) / std::max(1.0, a));
  }
  return {worst < 1e-9, fmt::format("max |phi_x - phi_y| / max(1, phi) = {} (< 1e-9) on 1e3 triples", sci(worst))};
}

Outcome derivatives() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  const ScalarField phi_f = [](std::span<const double> p) { return phi_x(p[0], p[1], p[2]); };
  const ScalarField eta_f = [](std::span<const double> p) { return eta(p[0], p[1]); };
  const auto mixed = [](double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); };
  double worst_phi = 0.0, worst_eta = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const std::array<double, 3> p{u(rng), u(rng), u(rng)};
    const double closed = dphi_dx1({XCoord(p[0]), XCoord(p[1]), XCoord(p[2])});
    worst_phi = std::max(worst_phi, mixed(closed, fd_gradient(phi_f, p)[0]));
  }
  for (int n = 0; n < 1000; ++n) {
    const std::array<double, 2> q{u(rng), u(rng)};
    const TorusPantsShape s{XCoord(q[0]), XCoord(q[1])};
    const auto g = fd_gradient(eta_f, q);
    worst_eta = std::max({worst_eta, mixed(deta_dx(s), g[0]), mixed(deta_dy(s), g[1])});
  }
  return {worst_phi < 1e-5 && worst_eta < 1e-5,
          fmt::format("max mixed error dphi/dx1 {} , deta {} (< 1e-5) on 1e3 points each", sci(worst_phi),
                      sci(worst_eta))};
}

double check_margin(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c.worst_margin;
  }
  return -INFINITY;
}

Outcome monotonicity() {
  const auto phi = suite_monotone_phi(GridSpec{0.01, 0.99, 64});
  const auto eta_r = suite_monotone_eta(GridSpec{0.01, 0.99, 256});
  const double m_phi = check_margin(phi, "dphi/dx1 > 0");
  const double m_x = check_margin(eta_r, "deta/dx > 0");
  const double m_y = check_margin(eta_r, "deta/dy > 0");
  const bool ok = phi.pass && eta_r.pass && m_phi > kStrictFloor && m_x > kStrictFloor && m_y > kStrictFloor;
  return {ok, fmt::format("64^3: min dphi/dx1 {} ; 256^2: min deta/dx {} , deta/dy {} (> 1e-14); suites {} / {}",
                          sci(m_phi), sci(m_x), sci(m_y), phi.pass ? "pass" : "fail",
                          eta_r.pass ? "pass" : "fail")};
}

Outcome inequalities() {
  const GridSpec g{};
  std::vector<std::string> parts;
  bool ok = true;
  for (const char* name : {"eta-dominates", "symmetrization", "geometric-mean", "diag-bound", "degeneration"}) {
    const auto r = run_suite(name, g);
    ok = ok && r.pass;
    parts.push_back(fmt::format("{} {} ({} pts, worst {})", name, r.pass ? "pass" : "FAIL", r.points_checked,
                                sci(r.worst_margin)));
  }
  std::string detail;
  for (std::size_t i = 0; i < parts.size(); ++i) detail += (i ? "; " : "") + parts[i];
  return {ok, detail};
}

Outcome geometric_iterate() {
  std::mt19937_64 rng(3141);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  double worst_exp = 0.0;
  double worst_step = INFINITY;
  for (int s = 0; s < 100; ++s) {
    const std::array<double, 3> p0{u(rng), u(rng), u(rng)};
    std::array<double, 3> p = p0;
    double prev = phi_x(p[0], p[1], p[2]);
    for (int n = 1; n <= 10; ++n) {
      p = terms::geometric_step(p);
      const auto c = terms::geometric_iterate_closed_form(p0, n);
      for (int i = 0; i < 3; ++i) worst_exp = std::max(worst_exp, std::abs(p[i] - c[i]));
      const double v = phi_x(p[0], p[1], p[2]);
      worst_step = std::min(worst_step, prev - v);
      prev = v;
    }
  }
  const bool ok = worst_exp < 1e-12 && worst_step >= -kValueSlack;
  return {ok, fmt::format("max |f^n - closed form| {} (< 1e-12); min phi(f^n) - phi(f^(n+1)) {} (>= -1e-12) "
                          "at 100 triples, n <= 10",
                          sci(worst_exp), sci(worst_step))};
}

Outcome enumeration() {
  const TraceTriple m = cusped_torus_from_length(Length(2 * std::acosh(1.5)), Branch::minus);
  const bool seed_ok = m.tx == 3.0 && m.ty == 3.0 && m.tz == 3.0;
  std::vector<double> quadrant, full;
  for (const auto& r : enumerate_slopes(m, MaxTrace{15})) {
    full.push_back(r.trace);
    if (r.slope.p >= 0) quadrant.push_back(r.trace);
  }
  const bool spot = quadrant == std::vector<double>{3, 3, 3, 6, 6, 15, 15, 15, 15} &&
                    full == std::vector<double>{3, 3, 3, 6, 6, 6, 15, 15, 15, 15, 15, 15};
  // Markov triples: every node is 3 * (a, b, c) with a^2 + b^2 + c^2 = 3abc.
  bool markov_ok = true;
  std::size_t nodes = 0;
  double worst = 0.0;
  walk_markov_tree(m, MaxDenominator{290}, [&](const MarkovNode& n) {
    ++nodes;
    const double x = n.traces[0], y = n.traces[1], z = n.traces[2];
    const double f = x * x + y * y + z * z - x * y * z - 2.0;
    worst = std::max(worst, std::abs(f + 2.0) / std::max(1.0, x * y * z));
    if (x * y * z < 1e15) {
      const double a = x / 3, b = y / 3, c = z / 3;
      markov_ok = markov_ok && a * a + b * b + c * c == 3 * a * b * c;
    }
  });
  const bool ok = seed_ok && spot && markov_ok && nodes >= 100000 && worst < 1e-10;
  return {ok, fmt::format("seed (3,3,3) {}; spot-check traces {}; {} nodes, max relative Fricke residual {} "
                          "(< 1e-10); Markov equation {}",
                          seed_ok ? "ok" : "wrong", spot ? "3,3,3,6,6,15,15,... ok" : "MISMATCH", nodes,
                          sci(worst), markov_ok ? "exact" : "VIOLATED")};
}

Outcome mcshane() {
  const TraceTriple m = cusped_torus_from_length(Length(2 * std::acosh(1.5)), Branch::minus);
  double prev = 0.0;
  bool increasing = true, below = true;
  for (std::int64_t n = 1; n <= kMcShaneHeight; ++n) {
    const double v = mcshane_partial_sum(m, MaxDenominator{n}).value;
    increasing = increasing && v > prev;
    below = below && v < 0.5;
    prev = v;
  }
  const double gap = 0.5 - prev;
  return {increasing && below && gap < 1e-3,
          fmt::format("N* = {} (max denominator): S = {:.15f}, 0.5 - S = {} (< 1e-3); strictly increasing {}; "
                      "below 0.5 {}",
                      kMcShaneHeight, prev, sci(gap), increasing ? "yes" : "NO", below ? "yes" : "NO")};
}

Outcome eta_stability() {
  const TraceTriple p = torus_from_lengths(Length(2), Length(2), Branch::plus);
  const TraceTriple m = torus_from_lengths(Length(2), Length(2), Branch::minus);
  const TraceTriple reroot{p.tx, p.tx * p.tz - p.ty, p.tz};
  const auto s4 = eta_partial_sum(p, Length(2), MaxTrace{1e4});
  const auto s6 = eta_partial_sum(p, Length(2), MaxTrace{1e6});
  const double tail = std::abs(s6.value - s4.value);
  const double branch = std::abs(eta_partial_sum(m, Length(2), MaxTrace{1e6}).value - s6.value);
  const double seed = std::abs(eta_partial_sum(reroot, Length(2), MaxTrace{1e6}).value - s6.value);
  return {tail < 1e-6 && branch < 1e-10 && seed < 1e-10,
          fmt::format("S(1e6) = {:.12f}; |S(1e6) - S(1e4)| = {} (< 1e-6); branch diff {} , re-rooted diff {} "
                      "(< 1e-10)",
                      s6.value, sci(tail), sci(branch), sci(seed))};
}

Outcome counting_chain() {
  double worst = INFINITY;
  for (int i = 1; i <= 400; ++i) {
    const double l = 40.0 * i / 400;
    const double t = std::exp(-l / 6);
    const DomainMode mode = t < kLimitOne ? DomainMode::strict : DomainMode::limit;
    worst = std::min(worst, phi_x(t, t, t, mode) - min_measure_floor(Length(l)));
  }
  const double bound = np_upper_bound(2, Length(6)).bound;
  const double want = std::numbers::pi * std::numbers::pi * std::exp(3.0) / 6;
  const double rel_bound = std::abs(bound - want) / want;
  const double budget = unit_tangent_volume(2);
  const double rel_budget = std::abs(budget - 78.956835208714868951) / 78.956835208714868951;
  const bool ok = worst > 0.0 && rel_bound < 5e-13 && rel_budget < 5e-13;
  return {ok, fmt::format("min phi - floor {} (> 0) over 400 L in (0,40]; NP(2,6) = {:.15g} (rel err {}); "
                          "8pi^2 = {:.15g} (rel err {})",
                          sci(worst), bound, sci(rel_bound), budget, sci(rel_budget))};
}

std::set<int> parse_ids(const char* text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_red;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-red") == 0 && i + 1 < argc) {
      expect_red = parse_ids(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--expect-red N[,N...]]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "Rogers function", 1, rogers_function},
      {2, "Two-form equality", 5, two_forms},
      {3, "Derivative closed forms", 10, derivatives},
      {4, "Monotonicity suites", 60, monotonicity},
      {5, "Inequality suites", 120, inequalities},
      {6, "Geometric-mean iterate", 0, geometric_iterate},
      {7, "Enumeration correctness", 0, enumeration},
      {8, "McShane oracle", 60, mcshane},
      {9, "Eta slope-sum stability", 0, eta_stability},
      {10, "Counting chain", 0, counting_chain},
  };

  std::set<int> red;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit == 0 || secs < c.time_limit;
    const bool pass = o.pass && in_time;
    if (!pass) red.insert(c.id);
    const std::string limit = c.time_limit > 0 ? fmt::format(" (limit {:g} s)", c.time_limit) : "";
    std::printf("%s  %2d  %-26s %s [%.2f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                secs, limit.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - red.size(), criteria.size());
  if (red != expect_red) {
    std::string want, got;
    for (int i : expect_red) want += fmt::format(" {}", i);
    for (int i : red) got += fmt::format(" {}", i);
    std::fprintf(stderr, "failing criteria {{%s }} differ from expected {{%s }}\n", got.c_str(), want.c_str());
    return 1;
  }
  return 0;
}
