#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "pants/errors.hpp"
#include "pants/measures.hpp"
#include "pants/torus_enumeration.hpp"

using namespace pants;

namespace {

const double kMarkovAlpha = 2 * std::acosh(1.5);

TraceTriple markov() { return cusped_torus_from_length(Length(kMarkovAlpha), Branch::minus); }

std::vector<double> traces_of(const std::vector<SlopeRecord>& rs, bool nonnegative_only = false) {
  std::vector<double> out;
  for (const auto& r : rs) {
    if (!nonnegative_only || r.slope.p >= 0) out.push_back(r.trace);
  }
  return out;
}

double relative_fricke_residual(const TraceTriple& t, double target) {
  return std::abs(fricke_boundary_trace(t) - target) / std::max(1.0, t.tx * t.ty * t.tz);
}

}  // namespace

TEST_CASE("fricke trace and Markov moves") {
  CHECK(fricke_boundary_trace({3, 3, 3}) == -2.0);
  CHECK(fricke_boundary_trace({3, 3, 6}) == -2.0);
  const TraceTriple t{3.2, 4.1, 7.7};
  for (int i = 0; i < 3; ++i) {
    const TraceTriple m = markov_move(t, i);
    CHECK(fricke_boundary_trace(m) == doctest::Approx(fricke_boundary_trace(t)).epsilon(1e-12));
    const TraceTriple back = markov_move(m, i);
    CHECK(back.tx == doctest::Approx(t.tx).epsilon(1e-12));
    CHECK(back.ty == doctest::Approx(t.ty).epsilon(1e-12));
    CHECK(back.tz == doctest::Approx(t.tz).epsilon(1e-12));
  }
  const TraceTriple z = markov_move(markov_move({3, 3, 3}, 2), 2);
  CHECK(z.tz == 3.0);
  CHECK_THROWS_AS((void)markov_move(t, 3), pants::domain_error);
}

TEST_CASE("canonical slopes") {
  CHECK(canonical_slope(-2, -3) == Slope{2, 3});
  CHECK(canonical_slope(-1, 0) == Slope{1, 0});
  CHECK(canonical_slope(-1, 2) == Slope{-1, 2});
}

TEST_CASE("torus from lengths") {
  for (Branch b : {Branch::plus, Branch::minus}) {
    const TraceTriple t = torus_from_lengths(Length(2), Length(3), b);
    CHECK(relative_fricke_residual(t, -2 * std::cosh(1.0)) < 1e-10);
    CHECK(t.tx == t.ty);
  }
  const TraceTriple p = torus_from_lengths(Length(2), Length(3), Branch::plus);
  const TraceTriple m = torus_from_lengths(Length(2), Length(3), Branch::minus);
  CHECK(p.tx == doctest::Approx(4.7048192304864946515).epsilon(1e-15));
  CHECK(p.tz == doctest::Approx(19.850391229907776752).epsilon(1e-14));
  CHECK(m.tz == doctest::Approx(2.2849327616477549317).epsilon(1e-14));
  CHECK(m.tz == doctest::Approx(p.tx * p.ty - p.tz).epsilon(1e-12));

  // Boundary trace -6 with x = y = 4: z = 8 +- sqrt(28).
  const double l_beta = 2 * std::acosh(3.0);
  const double l_alpha = 2 * std::acosh(2.0);
  CHECK(torus_from_lengths(Length(l_beta), Length(l_alpha), Branch::plus).tz ==
        doctest::Approx(8 + std::sqrt(28.0)).epsilon(1e-13));
  CHECK(torus_from_lengths(Length(l_beta), Length(l_alpha), Branch::minus).tz ==
        doctest::Approx(8 - std::sqrt(28.0)).epsilon(1e-12));
  // x = y = 3 admits no real tz at boundary trace -6.
  CHECK_THROWS_AS((void)torus_from_lengths(Length(l_beta), Length(2 * std::acosh(1.5)), Branch::plus),
                  inadmissible_shape);
}

TEST_CASE("cusped seeds") {
  const TraceTriple m = markov();
  CHECK(m.tx == 3.0);
  CHECK(m.ty == 3.0);
  CHECK(m.tz == 3.0);
  const TraceTriple p = cusped_torus_from_length(Length(kMarkovAlpha), Branch::plus);
  CHECK(p.tz == 6.0);
  CHECK(is_cusped(m));
  CHECK(is_cusped(cusped_torus_from_length(Length(2.5), Branch::plus)));
  CHECK_FALSE(is_cusped(torus_from_lengths(Length(2), Length(2), Branch::plus)));
}

TEST_CASE("trace to length and coordinate") {
  CHECK(trace_to_length(3.0) == doctest::Approx(kMarkovAlpha).epsilon(1e-15));
  for (double t : {2.5, 3.0, 10.0, 1e8}) {
    CHECK(trace_to_x(t) == doctest::Approx(std::exp(-trace_to_length(t) / 2)).epsilon(1e-13));
  }
}

TEST_CASE("Markov tree spot checks") {
  const auto cut6 = enumerate_slopes(markov(), MaxTrace{6});
  CHECK(traces_of(cut6, true) == std::vector<double>{3, 3, 3, 6, 6});
  CHECK(traces_of(cut6) == std::vector<double>{3, 3, 3, 6, 6, 6});

  const auto den2 = enumerate_slopes(markov(), MaxDenominator{2});
  std::set<std::pair<std::int64_t, std::int64_t>> nonneg;
  for (const auto& r : den2) {
    if (r.slope.p >= 0) nonneg.insert({r.slope.p, r.slope.q});
  }
  CHECK(nonneg == std::set<std::pair<std::int64_t, std::int64_t>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}});
  CHECK(traces_of(den2, true) == std::vector<double>{3, 3, 3, 6, 6});

  const auto cut15 = enumerate_slopes(markov(), MaxTrace{15});
  CHECK(traces_of(cut15, true) == std::vector<double>{3, 3, 3, 6, 6, 15, 15, 15, 15});

  // Every trace is three times a Markov number.
  for (const auto& r : enumerate_slopes(markov(), MaxTrace{1e6})) {
    const double m = r.trace / 3;
    CHECK(m == std::round(m));
  }
}

TEST_CASE("slope traces agree with explicit matrix words") {
  for (const TraceTriple t : {markov(), torus_from_lengths(Length(2), Length(2), Branch::plus),
                              TraceTriple{3.5, 4.0, 9.1}, TraceTriple{3.1, 3.3, 7.0}}) {
    const auto g = oracle::generators(t.tx, t.ty, t.tz);
    const auto records = enumerate_slopes(t, MaxDenominator{12});
    CHECK(records.size() == oracle::farey_slopes(12).size());
    for (const auto& r : records) {
      CAPTURE(r.slope.p);
      CAPTURE(r.slope.q);
      const double want = static_cast<double>(oracle::slope_trace(g, r.slope.p, r.slope.q));
      REQUIRE(r.trace == doctest::Approx(want).epsilon(1e-11));
    }
  }
}

TEST_CASE("enumeration covers each Farey slope exactly once") {
  for (std::int64_t n : {1, 2, 5, 17, 40}) {
    const auto records = enumerate_slopes(markov(), MaxDenominator{n});
    std::set<std::pair<std::int64_t, std::int64_t>> got;
    for (const auto& r : records) got.insert({r.slope.p, r.slope.q});
    CHECK(got.size() == records.size());
    std::set<std::pair<std::int64_t, std::int64_t>> want;
    for (const auto& s : oracle::farey_slopes(n)) want.insert({s[0], s[1]});
    CHECK(got == want);
  }
}

TEST_CASE("records are sorted and consistent") {
  const auto records = enumerate_slopes(torus_from_lengths(Length(1), Length(2.5), Branch::plus), MaxTrace{1e5});
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    CHECK(r.trace > 2.0);
    CHECK(r.length > 0.0);
    CHECK(r.length == doctest::Approx(2 * std::acosh(r.trace / 2)).epsilon(1e-14));
    CHECK(r.slope == canonical_slope(r.slope.p, r.slope.q));
    if (i > 0) CHECK(records[i - 1].trace <= r.trace);
  }
}

TEST_CASE("max-trace cutoff matches filtering a larger enumeration") {
  const TraceTriple t{3.5, 4.0, 9.1};
  const auto big = enumerate_slopes(t, MaxDenominator{60});
  const auto cut = enumerate_slopes(t, MaxTrace{500});
  std::size_t expected = 0;
  for (const auto& r : big) expected += r.trace <= 500 ? 1 : 0;
  CHECK(cut.size() == expected);
  CHECK(cut.back().trace <= 500);
}

TEST_CASE("walk visits triangles preserving the Fricke relation") {
  std::size_t nodes = 0;
  double worst = 0.0;
  walk_markov_tree(markov(), MaxDenominator{60}, [&](const MarkovNode& n) {
    ++nodes;
    worst = std::max(worst, relative_fricke_residual({n.traces[0], n.traces[1], n.traces[2]}, -2.0));
  });
  CHECK(nodes == oracle::farey_slopes(60).size() - 2);
  CHECK(worst < 1e-10);
}

TEST_CASE("McShane partial sums") {
  const TraceTriple m = markov();
  const auto s6 = mcshane_partial_sum(m, MaxTrace{6});
  const double t3 = 1 / (1 + std::exp(kMarkovAlpha));
  const double t6 = 1 / (1 + std::exp(2 * std::acosh(3.0)));
  CHECK(s6.value == doctest::Approx(3 * t3 + 3 * t6).epsilon(1e-15));
  CHECK(std::abs(s6.value - 0.46775244887701010299) < 1e-15);
  CHECK(s6.term_count == 6);
  CHECK(s6.last_term == doctest::Approx(t6));

  double prev = 0.0;
  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto s = mcshane_partial_sum(m, MaxDenominator{n});
    CHECK(s.value > prev);
    CHECK(s.value < 0.5);
    prev = s.value;
  }
  CHECK(0.5 - mcshane_partial_sum(m, MaxDenominator{5}).value < 1e-3);
  CHECK(0.5 - mcshane_partial_sum(m, MaxDenominator{4}).value > 1e-3);
  CHECK(mcshane_partial_sum(m, MaxDenominator{100}).value <= 0.5);

  // Any cusped torus, not only the Markov one.
  const auto other = mcshane_partial_sum(cusped_torus_from_length(Length(2.5), Branch::plus), MaxTrace{1e9});
  CHECK(other.value == doctest::Approx(0.5).epsilon(1e-9));

  CHECK_THROWS_AS((void)mcshane_partial_sum({3, 3, 4}, MaxTrace{10}), not_cusped);
}

TEST_CASE("eta partial sums") {
  const TraceTriple p = torus_from_lengths(Length(2), Length(2), Branch::plus);
  const TraceTriple m = torus_from_lengths(Length(2), Length(2), Branch::minus);
  const auto s10 = eta_partial_sum(p, Length(2), MaxDenominator{10});
  const auto s50 = eta_partial_sum(p, Length(2), MaxDenominator{50});
  CHECK(s50.value >= s10.value);

  const auto a = eta_partial_sum(p, Length(2), MaxTrace{1e6});
  const auto b = eta_partial_sum(m, Length(2), MaxTrace{1e6});
  CHECK(std::abs(a.value - b.value) < 1e-10);
  CHECK(a.term_count == b.term_count);

  // Re-rooting at the neighbouring triple (tx, tz', tz).
  const TraceTriple moved{p.tx, p.tx * p.tz - p.ty, p.tz};
  const auto c = eta_partial_sum(moved, Length(2), MaxTrace{1e6});
  CHECK(std::abs(a.value - c.value) < 1e-10);

  // Terms are eta at the boundary coordinate and each slope's coordinate.
  const auto records = enumerate_slopes(p, MaxTrace{1e6});
  oracle::Real direct = 0;
  for (const auto& r : records) direct += eta(std::exp(-1.0), std::exp(-r.length / 2), DomainMode::limit);
  CHECK(a.value == doctest::Approx(static_cast<double>(direct)).epsilon(1e-13));

  // Stabilizes when doubling the number of slopes (ordered by trace).
  const auto all = enumerate_slopes(p, MaxTrace{1e12});
  REQUIRE(all.size() >= 512);
  double s256 = 0.0, s512 = 0.0;
  for (std::size_t i = 0; i < 512; ++i) {
    const double v = eta(std::exp(-1.0), trace_to_x(all[i].trace), DomainMode::limit);
    if (i < 256) s256 += v;
    s512 += v;
  }
  CHECK(std::abs(s512 - s256) < 1e-8);

  CHECK_THROWS_AS((void)eta_partial_sum(p, Length(3), MaxTrace{100}), pants::domain_error);
  CHECK_THROWS_AS((void)eta_partial_sum(p, Length(2), MaxTrace{-1}), pants::domain_error);
  CHECK_THROWS_AS((void)eta_partial_sum(p, Length(2), MaxDenominator{0}), pants::domain_error);
}

TEST_CASE("invalid triples and overflow") {
  CHECK_THROWS_AS((void)enumerate_slopes({1.5, 3, 3}, MaxTrace{10}), pants::domain_error);
  CHECK_THROWS_AS((void)enumerate_slopes({2.5, 2.5, 2.5}, MaxTrace{10}), pants::domain_error);
  CHECK_THROWS_AS((void)enumerate_slopes(markov(), MaxDenominator{1000}), std::overflow_error);
}
