#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pants/counting.hpp"
#include "pants/errors.hpp"
#include "pants/measures.hpp"
#include "pants/serialization.hpp"
#include "pants/special_functions.hpp"
#include "pants/torus_enumeration.hpp"
#include "pants/verification.hpp"

namespace py = pybind11;

namespace {

pants::Accuracy accuracy(const std::string& precision) {
  if (precision == "standard") return {1e-15, pants::PrecisionMode::standard};
  if (precision == "extended") return {1e-15, pants::PrecisionMode::extended};
  throw pants::domain_error("precision must be 'standard' or 'extended'");
}

pants::DomainMode domain(bool limit_mode) {
  return limit_mode ? pants::DomainMode::limit : pants::DomainMode::strict;
}

pants::Cutoff cutoff(std::optional<double> max_trace, std::optional<std::int64_t> max_denominator) {
  if (max_trace && max_denominator) throw pants::domain_error("give max_trace or max_denominator, not both");
  if (max_denominator) return pants::MaxDenominator{*max_denominator};
  if (max_trace) return pants::MaxTrace{*max_trace};
  throw pants::domain_error("a cutoff (max_trace or max_denominator) is required");
}

pants::Branch branch(const std::string& name) {
  if (name == "plus") return pants::Branch::plus;
  if (name == "minus") return pants::Branch::minus;
  throw pants::domain_error("branch must be 'plus' or 'minus'");
}

py::tuple as_tuple(const pants::TraceTriple& t) { return py::make_tuple(t.tx, t.ty, t.tz); }

pants::TraceTriple as_triple(const std::array<double, 3>& t) { return {t[0], t[1], t[2]}; }

py::dict as_dict(const pants::PartialSum& s) {
  py::dict d;
  d["cutoff_kind"] = pants::cutoff_kind(s.cutoff);
  d["cutoff_value"] = pants::cutoff_value(s.cutoff);
  d["value"] = s.value;
  d["term_count"] = s.term_count;
  d["last_term"] = s.last_term;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Measures of hyperbolic pairs of pants";

  py::register_exception<pants::accuracy_error>(m, "AccuracyError", PyExc_RuntimeError);

  m.def("li2", [](double x, const std::string& precision) { return pants::li2(x, accuracy(precision)); },
        py::arg("x"), py::arg("precision") = "standard");
  m.def("rogers_l",
        [](double x, const std::string& precision) { return pants::rogers_l(x, accuracy(precision)); },
        py::arg("x"), py::arg("precision") = "standard");
  m.def("lasso",
        [](double a, double b, const std::string& precision) {
          return pants::lasso(a, b, accuracy(precision));
        },
        py::arg("a"), py::arg("b"), py::arg("precision") = "standard");

  m.def("phi_x",
        [](double x1, double x2, double x3, bool limit_mode) {
          return pants::phi_x(x1, x2, x3, domain(limit_mode));
        },
        py::arg("x1"), py::arg("x2"), py::arg("x3"), py::arg("limit_mode") = false);
  m.def("phi_lengths",
        [](double l1, double l2, double l3) {
          return pants::phi_y(pants::Length(l1), pants::Length(l2), pants::Length(l3));
        },
        py::arg("l1"), py::arg("l2"), py::arg("l3"));
  m.def("eta",
        [](double x, double y, bool limit_mode) { return pants::eta(x, y, domain(limit_mode)); },
        py::arg("x"), py::arg("y"), py::arg("limit_mode") = false);
  m.def("dphi_dx1",
        [](double x1, double x2, double x3) {
          return pants::dphi_dx1(pants::PantsShape{pants::XCoord(x1), pants::XCoord(x2), pants::XCoord(x3)});
        },
        py::arg("x1"), py::arg("x2"), py::arg("x3"));
  m.def("deta_dx",
        [](double x, double y) {
          return pants::deta_dx(pants::TorusPantsShape{pants::XCoord(x), pants::XCoord(y)});
        },
        py::arg("x"), py::arg("y"));
  m.def("deta_dy",
        [](double x, double y) {
          return pants::deta_dy(pants::TorusPantsShape{pants::XCoord(x), pants::XCoord(y)});
        },
        py::arg("x"), py::arg("y"));
  m.def("length_to_x", [](double l) { return pants::length_to_x(pants::Length(l)).value(); }, py::arg("length"));

  m.def("fricke_boundary_trace",
        [](const std::array<double, 3>& t) { return pants::fricke_boundary_trace(as_triple(t)); },
        py::arg("traces"));
  m.def("torus_from_lengths",
        [](double l_beta, double l_alpha, const std::string& b) {
          return as_tuple(pants::torus_from_lengths(pants::Length(l_beta), pants::Length(l_alpha), branch(b)));
        },
        py::arg("boundary_length"), py::arg("alpha_length"), py::arg("branch") = "plus");
  m.def("cusped_torus_from_length",
        [](double l_alpha, const std::string& b) {
          return as_tuple(pants::cusped_torus_from_length(pants::Length(l_alpha), branch(b)));
        },
        py::arg("alpha_length"), py::arg("branch") = "plus");
  m.def("enumerate_slopes",
        [](const std::array<double, 3>& t, std::optional<double> max_trace,
           std::optional<std::int64_t> max_denominator) {
          py::list out;
          for (const auto& r : pants::enumerate_slopes(as_triple(t), cutoff(max_trace, max_denominator))) {
            out.append(py::make_tuple(r.slope.p, r.slope.q, r.trace, r.length));
          }
          return out;
        },
        py::arg("traces"), py::kw_only(), py::arg("max_trace") = py::none(),
        py::arg("max_denominator") = py::none());
  m.def("eta_partial_sum",
        [](const std::array<double, 3>& t, double l_beta, std::optional<double> max_trace,
           std::optional<std::int64_t> max_denominator) {
          return as_dict(pants::eta_partial_sum(as_triple(t), pants::Length(l_beta),
                                                cutoff(max_trace, max_denominator)));
        },
        py::arg("traces"), py::arg("boundary_length"), py::kw_only(), py::arg("max_trace") = py::none(),
        py::arg("max_denominator") = py::none());
  m.def("mcshane_partial_sum",
        [](const std::array<double, 3>& t, std::optional<double> max_trace,
           std::optional<std::int64_t> max_denominator) {
          return as_dict(pants::mcshane_partial_sum(as_triple(t), cutoff(max_trace, max_denominator)));
        },
        py::arg("traces"), py::kw_only(), py::arg("max_trace") = py::none(),
        py::arg("max_denominator") = py::none());

  m.def("np_upper_bound",
        [](int genus, double length) {
          const auto b = pants::np_upper_bound(genus, pants::Length(length));
          return py::make_tuple(b.bound, b.log_bound);
        },
        py::arg("genus"), py::arg("length"));
  m.def("min_measure_floor", [](double l) { return pants::min_measure_floor(pants::Length(l)); },
        py::arg("length"));
  m.def("unit_tangent_volume", &pants::unit_tangent_volume, py::arg("genus"));

  m.def("suite_names", &pants::suite_names);
  m.def("run_suite_json",
        [](const std::string& name, int grid, double lo, double hi, const std::string& sampling,
           std::uint64_t seed, unsigned threads) {
          pants::GridSpec grid_spec{lo, hi, grid,
                                    sampling == "random" ? pants::Sampling::random : pants::Sampling::uniform, seed};
          pants::validate(grid_spec);
          py::gil_scoped_release release;
          return pants::to_json(pants::run_suite(name, grid_spec, threads));
        },
        py::arg("name"), py::arg("grid") = 64, py::arg("min") = 0.01, py::arg("max") = 0.99,
        py::arg("sampling") = "uniform", py::arg("seed") = 0, py::arg("threads") = 1);
}
