#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "pants/pants_geometry.hpp"

namespace pants {

// Traces of three simple closed curves on a one-holed torus that pairwise
// intersect once, realized as curves of slope (1,0), (0,1) and (1,1).
struct TraceTriple {
  double tx;
  double ty;
  double tz;
};

// Unoriented isotopy class of a simple closed curve. Canonical form has
// q >= 1, except for (1,0).
struct Slope {
  std::int64_t p;
  std::int64_t q;

  friend bool operator==(const Slope&, const Slope&) = default;
};

[[nodiscard]] Slope canonical_slope(std::int64_t p, std::int64_t q);

struct SlopeRecord {
  Slope slope;
  double trace;
  double length;
};

// Enumeration cutoffs. `MaxDenominator` bounds the height max(|p|,|q|) of a
// slope; `MaxTrace` bounds its trace (equivalently its length).
struct MaxDenominator {
  std::int64_t n;
};
struct MaxTrace {
  double t;
};
using Cutoff = std::variant<MaxDenominator, MaxTrace>;

struct PartialSum {
  Cutoff cutoff;
  double value = 0.0;
  std::size_t term_count = 0;
  double last_term = 0.0;
};

enum class Branch { plus, minus };

// tx^2 + ty^2 + tz^2 - tx ty tz - 2: the trace of the boundary commutator,
// -2 cosh(l_beta / 2) for geodesic boundary and -2 for a cusp.
[[nodiscard]] double fricke_boundary_trace(const TraceTriple& t);

// Replaces trace `index` (0, 1, 2) by the product of the other two minus itself.
[[nodiscard]] TraceTriple markov_move(const TraceTriple& t, int index);

// Symmetric marking tx = ty = 2 cosh(l_alpha / 2); tz is the larger (plus) or
// smaller (minus) root of the Fricke quadratic. Throws inadmissible_shape if
// the quadratic has no real root.
[[nodiscard]] TraceTriple torus_from_lengths(Length l_beta, Length l_alpha, Branch branch);

// Cusped counterpart (boundary trace -2). Traces within 1e-9 of integers are
// snapped when the snapped triple satisfies the Fricke relation exactly.
[[nodiscard]] TraceTriple cusped_torus_from_length(Length l_alpha, Branch branch);

[[nodiscard]] bool is_cusped(const TraceTriple& t, double tol = 1e-9);

// Length 2 arccosh(trace/2) and coordinate exp(-length/2) of a curve.
[[nodiscard]] double trace_to_length(double trace);
[[nodiscard]] double trace_to_x(double trace);

// One triangle of the Farey tessellation: `newest` indexes the vertex created
// by the Markov move that produced the triangle (-1 for the root).
struct MarkovNode {
  std::array<Slope, 3> slopes;
  std::array<double, 3> traces;
  int newest;
};

// Visits every triangle whose newest vertex passes the cutoff. Max-trace walks
// start from the Markov-reduced triangle so traces increase away from the
// root; max-denominator walks start from {(1,0),(0,1),(1,1)}.
void walk_markov_tree(const TraceTriple& t, const Cutoff& cutoff,
                      const std::function<void(const MarkovNode&)>& visit);

// All slopes passing the cutoff, each once, sorted by increasing trace.
[[nodiscard]] std::vector<SlopeRecord> enumerate_slopes(const TraceTriple& t,
                                                        const Cutoff& cutoff);

// Sum of eta(exp(-l_beta/2), exp(-l_alpha/2)) over enumerated slopes alpha.
[[nodiscard]] PartialSum eta_partial_sum(const TraceTriple& t, Length l_beta,
                                         const Cutoff& cutoff);

// Sum of 1 / (1 + exp(l)) over enumerated slopes of a cusped torus; tends to 1/2.
[[nodiscard]] PartialSum mcshane_partial_sum(const TraceTriple& t, const Cutoff& cutoff);

}  // namespace pants
