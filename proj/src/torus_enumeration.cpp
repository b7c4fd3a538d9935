#include "pants/torus_enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "pants/compensated_sum.hpp"
#include "pants/errors.hpp"
#include "pants/measures.hpp"

namespace pants {
namespace {

constexpr double kTraceCeiling = 1e300;
constexpr double kFrickeTolerance = 1e-9;

// Sign-coherent homology vector of a curve together with its trace.
struct Vertex {
  std::int64_t p;
  std::int64_t q;
  double trace;
};

std::int64_t height(const Vertex& v) { return std::max(std::abs(v.p), std::abs(v.q)); }

bool same_curve(std::int64_t p, std::int64_t q, const Vertex& w) {
  return (p == w.p && q == w.q) || (p == -w.p && q == -w.q);
}

// Third vertex of the triangle across edge (u, v) from `opposite`.
Vertex flip(const Vertex& u, const Vertex& v, const Vertex& opposite) {
  std::int64_t p = u.p + v.p;
  std::int64_t q = u.q + v.q;
  if (same_curve(p, q, opposite)) {
    p = u.p - v.p;
    q = u.q - v.q;
  }
  return {p, q, u.trace * v.trace - opposite.trace};
}

void check_overflow(const Vertex& v) {
  if (!std::isfinite(v.trace) || v.trace > kTraceCeiling) {
    const Slope s = canonical_slope(v.p, v.q);
    throw std::overflow_error(fmt::format(
        "trace overflow at slope ({}, {}); lower the cutoff", s.p, s.q));
  }
}

void validate(const TraceTriple& t) {
  if (!(t.tx > 2.0 && t.ty > 2.0 && t.tz > 2.0)) {
    throw domain_error(
        fmt::format("trace triple ({}, {}, {}) must have all traces > 2", t.tx, t.ty, t.tz));
  }
  const double f = fricke_boundary_trace(t);
  const double scale = std::max(1.0, t.tx * t.ty * t.tz);
  if (f > -2.0 + kFrickeTolerance * scale) {
    throw domain_error(fmt::format(
        "trace triple ({}, {}, {}) has boundary trace {} > -2; not a hyperbolic one-holed torus",
        t.tx, t.ty, t.tz, f));
  }
}

void validate(const Cutoff& cutoff) {
  std::visit(
      [](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, MaxDenominator>) {
          if (c.n < 1) throw domain_error(fmt::format("max denominator must be positive, got {}", c.n));
        } else {
          if (!(c.t > 0.0)) throw domain_error(fmt::format("max trace must be positive, got {}", c.t));
        }
      },
      cutoff);
}

std::array<Vertex, 3> root_triangle(const TraceTriple& t) {
  return {Vertex{1, 0, t.tx}, Vertex{0, 1, t.ty}, Vertex{1, 1, t.tz}};
}

// Markov moves on the largest trace while they decrease it. On the result
// every move increases the moved trace, and so does every later move.
std::array<Vertex, 3> reduce(std::array<Vertex, 3> tri) {
  for (;;) {
    int big = 0;
    for (int i = 1; i < 3; ++i) {
      if (tri[i].trace > tri[big].trace) big = i;
    }
    const Vertex& a = tri[(big + 1) % 3];
    const Vertex& b = tri[(big + 2) % 3];
    const Vertex next = flip(a, b, tri[big]);
    if (!(next.trace < tri[big].trace)) return tri;
    if (!(next.trace > 2.0)) {
      throw domain_error("Markov reduction reached a trace <= 2; triple is not hyperbolic");
    }
    tri[big] = next;
  }
}

bool passes(const Vertex& v, const Cutoff& cutoff) {
  if (const auto* d = std::get_if<MaxDenominator>(&cutoff)) return height(v) <= d->n;
  return v.trace <= std::get<MaxTrace>(cutoff).t;
}

MarkovNode to_node(const Vertex& a, const Vertex& b, const Vertex& c, int newest) {
  return MarkovNode{{canonical_slope(a.p, a.q), canonical_slope(b.p, b.q),
                     canonical_slope(c.p, c.q)},
                    {a.trace, b.trace, c.trace},
                    newest};
}

}  // namespace

Slope canonical_slope(std::int64_t p, std::int64_t q) {
  if (q < 0 || (q == 0 && p < 0)) return {-p, -q};
  return {p, q};
}

double fricke_boundary_trace(const TraceTriple& t) {
  return t.tx * t.tx + t.ty * t.ty + t.tz * t.tz - t.tx * t.ty * t.tz - 2.0;
}

TraceTriple markov_move(const TraceTriple& t, int index) {
  switch (index) {
    case 0: return {t.ty * t.tz - t.tx, t.ty, t.tz};
    case 1: return {t.tx, t.tx * t.tz - t.ty, t.tz};
    case 2: return {t.tx, t.ty, t.tx * t.ty - t.tz};
    default: throw domain_error(fmt::format("markov_move: index {} not in {{0,1,2}}", index));
  }
}

namespace {

TraceTriple symmetric_marking(double waist_trace, double boundary_cosh2, Branch branch) {
  // z^2 - t^2 z + (2 t^2 - 2 + 2cosh(l_beta/2)) = 0
  const double t2 = waist_trace * waist_trace;
  const double constant = 2.0 * t2 - 2.0 + boundary_cosh2;
  const double disc = t2 * t2 - 4.0 * constant;
  if (disc < 0.0) {
    throw inadmissible_shape(fmt::format(
        "no symmetric marking: discriminant {} < 0 for waist trace {}", disc, waist_trace));
  }
  const double big = 0.5 * (t2 + std::sqrt(disc));
  const double z = branch == Branch::plus ? big : constant / big;
  return {waist_trace, waist_trace, z};
}

}  // namespace

TraceTriple torus_from_lengths(Length l_beta, Length l_alpha, Branch branch) {
  return symmetric_marking(2.0 * std::cosh(0.5 * l_alpha.value()),
                           2.0 * std::cosh(0.5 * l_beta.value()), branch);
}

TraceTriple cusped_torus_from_length(Length l_alpha, Branch branch) {
  const TraceTriple t = symmetric_marking(2.0 * std::cosh(0.5 * l_alpha.value()), 2.0, branch);
  const TraceTriple snapped{std::round(t.tx), std::round(t.ty), std::round(t.tz)};
  const auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); };
  if (near(t.tx, snapped.tx) && near(t.ty, snapped.ty) && near(t.tz, snapped.tz) &&
      fricke_boundary_trace(snapped) == -2.0) {
    return snapped;
  }
  return t;
}

bool is_cusped(const TraceTriple& t, double tol) {
  return std::abs(fricke_boundary_trace(t) + 2.0) <= tol;
}

double trace_to_length(double trace) { return 2.0 * std::acosh(0.5 * trace); }

double trace_to_x(double trace) {
  // exp(-l/2) with 2 cosh(l/2) = trace, i.e. the smaller root of x^2 - trace x + 1.
  return 2.0 / (trace + std::sqrt((trace - 2.0) * (trace + 2.0)));
}

void walk_markov_tree(const TraceTriple& t, const Cutoff& cutoff,
                      const std::function<void(const MarkovNode&)>& visit) {
  validate(t);
  validate(cutoff);
  const bool by_trace = std::holds_alternative<MaxTrace>(cutoff);
  const std::array<Vertex, 3> root = by_trace ? reduce(root_triangle(t)) : root_triangle(t);
  visit(to_node(root[0], root[1], root[2], -1));

  struct Task {
    Vertex u, v, opposite;
  };
  std::vector<Task> stack{{root[0], root[1], root[2]},
                          {root[1], root[2], root[0]},
                          {root[2], root[0], root[1]}};
  while (!stack.empty()) {
    const Task task = stack.back();
    stack.pop_back();
    const Vertex n = flip(task.u, task.v, task.opposite);
    if (!passes(n, cutoff)) continue;
    check_overflow(n);
    visit(to_node(task.u, task.v, n, 2));
    stack.push_back({task.u, n, task.v});
    stack.push_back({n, task.v, task.u});
  }
}

std::vector<SlopeRecord> enumerate_slopes(const TraceTriple& t, const Cutoff& cutoff) {
  std::vector<SlopeRecord> out;
  walk_markov_tree(t, cutoff, [&](const MarkovNode& node) {
    const auto record = [&](int i) {
      const Vertex v{node.slopes[i].p, node.slopes[i].q, node.traces[i]};
      if (!passes(v, cutoff)) return;
      out.push_back({node.slopes[i], node.traces[i], trace_to_length(node.traces[i])});
    };
    if (node.newest < 0) {
      for (int i = 0; i < 3; ++i) record(i);
    } else {
      record(node.newest);
    }
  });
  std::sort(out.begin(), out.end(), [](const SlopeRecord& a, const SlopeRecord& b) {
    return std::tie(a.trace, a.slope.q, a.slope.p) < std::tie(b.trace, b.slope.q, b.slope.p);
  });
  return out;
}

PartialSum eta_partial_sum(const TraceTriple& t, Length l_beta, const Cutoff& cutoff) {
  const double expected = -2.0 * std::cosh(0.5 * l_beta.value());
  const double actual = fricke_boundary_trace(t);
  if (std::abs(actual - expected) > 1e-8 * std::max(1.0, std::abs(expected))) {
    throw domain_error(fmt::format(
        "boundary trace {} of the triple does not match -2cosh(l_beta/2) = {}", actual, expected));
  }
  const XCoord boundary = length_to_x(l_beta);
  PartialSum result{cutoff};
  CompensatedSum sum;
  for (const SlopeRecord& r : enumerate_slopes(t, cutoff)) {
    const double y = trace_to_x(r.trace);
    const double term = y > 0.0 ? eta(TorusPantsShape{boundary, XCoord(y, DomainMode::limit)}) : 0.0;
    sum.add(term);
    result.last_term = term;
    ++result.term_count;
  }
  result.value = sum.value();
  return result;
}

PartialSum mcshane_partial_sum(const TraceTriple& t, const Cutoff& cutoff) {
  if (!is_cusped(t)) {
    throw not_cusped(fmt::format("boundary trace {} is not -2; McShane sums need a cusp",
                                 fricke_boundary_trace(t)));
  }
  PartialSum result{cutoff};
  CompensatedSum sum;
  for (const SlopeRecord& r : enumerate_slopes(t, cutoff)) {
    // 1 / (1 + e^l) = x^2 / (1 + x^2) with x = e^(-l/2).
    const double x = trace_to_x(r.trace);
    const double term = x * x / (1.0 + x * x);
    sum.add(term);
    result.last_term = term;
    ++result.term_count;
  }
  result.value = sum.value();
  return result;
}

}  // namespace pants
