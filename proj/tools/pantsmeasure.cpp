// pantsmeasure: evaluate pants measures, run the inequality suites, enumerate
// one-holed torus slopes and print pants-counting bounds.
//
// stdout carries data only (JSON, JSON lines, CSV or plain text); diagnostics
// go to stderr. Exit codes: 0 success, 1 verification failure, 2 usage or
// domain error.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pants/counting.hpp"
#include "pants/errors.hpp"
#include "pants/measures.hpp"
#include "pants/serialization.hpp"
#include "pants/special_functions.hpp"
#include "pants/torus_enumeration.hpp"
#include "pants/verification.hpp"

namespace {

using pants::format_double;

enum class Format { json, csv, human };

struct RunConfig {
  Format format = Format::json;
  std::uint64_t seed = 0;
  pants::PrecisionMode precision = pants::PrecisionMode::standard;
  unsigned threads = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError(fmt::format("{}: '{}' is not a number", flag, item));
    }
    out.push_back(v);
  }
  if (out.size() != expected) {
    throw UsageError(fmt::format("{} expects {} comma-separated values, got {}", flag, expected, out.size()));
  }
  return out;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("PANTS_NUM_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096) {
    throw UsageError(fmt::format("PANTS_NUM_THREADS must be an integer >= 1, got '{}'", raw));
  }
  return static_cast<unsigned>(v);
}

std::string join(const std::vector<double>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += format_double(values[i]);
  }
  return out;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string phi_x, phi_lengths, eta, rogers, lasso;
  bool limit_mode = false;
};

int cmd_eval(const EvalArgs& args, const RunConfig& cfg) {
  const int given = !args.phi_x.empty() + !args.phi_lengths.empty() + !args.eta.empty() +
                    !args.rogers.empty() + !args.lasso.empty();
  if (given != 1) {
    throw UsageError("eval needs exactly one of --phi-x, --phi-lengths, --eta, --rogers, --lasso");
  }
  const pants::DomainMode mode = args.limit_mode ? pants::DomainMode::limit : pants::DomainMode::strict;
  if (args.limit_mode) {
    std::cerr << "warning: limit mode admits coordinates up to 1 - 1e-9; values there approximate "
                 "the degenerate limit\n";
  }
  const pants::Accuracy acc{pants::minimum_tolerance(pants::PrecisionMode::standard), cfg.precision};

  std::string quantity, form;
  std::vector<double> inputs;
  double value = 0.0;
  if (!args.phi_x.empty()) {
    inputs = parse_list(args.phi_x, 3, "--phi-x");
    quantity = "phi";
    form = "x-form";
    value = pants::phi_x(inputs[0], inputs[1], inputs[2], mode);
  } else if (!args.phi_lengths.empty()) {
    inputs = parse_list(args.phi_lengths, 3, "--phi-lengths");
    quantity = "phi";
    form = "y-form";
    value = pants::phi_y(pants::Length(inputs[0]), pants::Length(inputs[1]), pants::Length(inputs[2]));
  } else if (!args.eta.empty()) {
    inputs = parse_list(args.eta, 2, "--eta");
    quantity = "eta";
    form = "x-form";
    value = pants::eta(inputs[0], inputs[1], mode);
  } else if (!args.rogers.empty()) {
    inputs = parse_list(args.rogers, 1, "--rogers");
    quantity = "rogers_l";
    form = cfg.precision == pants::PrecisionMode::extended ? "series+reflection (50 digits)"
                                                           : "series+reflection";
    value = pants::rogers_l(inputs[0], acc);
  } else {
    inputs = parse_list(args.lasso, 2, "--lasso");
    quantity = "lasso";
    form = "rogers";
    value = pants::lasso(inputs[0], inputs[1], acc);
  }

  switch (cfg.format) {
    case Format::json:
      std::cout << fmt::format(R"({{"quantity":"{}","form":"{}","inputs":[{}],"value":{}}})",
                               quantity, form, join(inputs, ","), format_double(value))
                << '\n';
      break;
    case Format::csv:
      std::cout << "quantity,form,inputs,value\n"
                << quantity << ',' << form << ',' << join(inputs, ";") << ',' << format_double(value)
                << '\n';
      break;
    case Format::human:
      std::cout << quantity << '(' << join(inputs, ", ") << ") = " << format_double(value) << "  ["
                << form << "]\n";
      break;
  }
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  int grid = 64;
  double min = 0.01;
  double max = 0.99;
  std::string sampling = "uniform";
};

int cmd_verify(const VerifyArgs& args, const RunConfig& cfg) {
  pants::GridSpec grid{args.min, args.max, args.grid,
                       args.sampling == "random" ? pants::Sampling::random : pants::Sampling::uniform,
                       cfg.seed};
  try {
    pants::validate(grid);
  } catch (const pants::domain_error& e) {
    throw UsageError(e.what());
  }
  std::vector<pants::VerificationReport> reports;
  if (args.suite == "all") {
    reports = pants::run_all(grid, cfg.threads);
  } else {
    reports.push_back(pants::run_suite(args.suite, grid, cfg.threads));
  }

  bool pass = true;
  if (cfg.format == Format::csv) std::cout << "suite,pass,points,worst_margin,failure_count,limit_mode\n";
  for (const auto& r : reports) {
    pass = pass && r.pass;
    switch (cfg.format) {
      case Format::json: std::cout << pants::to_json(r) << '\n'; break;
      case Format::csv:
        std::cout << r.suite << ',' << (r.pass ? "true" : "false") << ',' << r.points_checked << ','
                  << format_double(r.worst_margin) << ',' << r.failure_count << ','
                  << (r.limit_mode ? "true" : "false") << '\n';
        break;
      case Format::human:
        std::cout << fmt::format("{:<16} {:<4} points={:<8} worst_margin={}{}\n", r.suite,
                                 r.pass ? "PASS" : "FAIL", r.points_checked,
                                 format_double(r.worst_margin), r.limit_mode ? "  (limit mode)" : "");
        for (const auto& c : r.checks) {
          std::cout << fmt::format("    {:<4} {} (points={}, worst_margin={})\n", c.pass ? "ok" : "FAIL",
                                   c.name, c.points, format_double(c.worst_margin));
        }
        break;
    }
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- torus

struct TorusArgs {
  std::string action;
  std::optional<double> boundary_length;
  bool cusped = false;
  std::optional<double> alpha_length;
  std::string traces;
  std::string branch;
  std::optional<double> max_trace;
  std::optional<std::int64_t> max_denominator;
};

int cmd_torus(const TorusArgs& args, const RunConfig& cfg) {
  if (args.boundary_length && args.cusped) throw UsageError("--boundary-length and --cusped are exclusive");
  if (args.max_trace && args.max_denominator) throw UsageError("--max-trace and --max-denominator are exclusive");
  // Cusped tori default to the smaller root, which for the default alpha
  // length is the Markov triple (3,3,3).
  const std::string branch_name = args.branch.empty() ? (args.cusped ? "minus" : "plus") : args.branch;
  const pants::Branch branch = branch_name == "minus" ? pants::Branch::minus : pants::Branch::plus;

  pants::TraceTriple triple{};
  std::optional<double> l_beta = args.boundary_length;
  if (!args.traces.empty()) {
    const auto t = parse_list(args.traces, 3, "--traces");
    triple = {t[0], t[1], t[2]};
    const double f = pants::fricke_boundary_trace(triple);
    if (!args.cusped && !l_beta && f < -2.0) l_beta = 2.0 * std::acosh(-0.5 * f);
  } else if (args.cusped) {
    const double alpha = args.alpha_length.value_or(2.0 * std::acosh(1.5));
    triple = pants::cusped_torus_from_length(pants::Length(alpha), branch);
  } else {
    if (!l_beta || !args.alpha_length) {
      throw UsageError("give --traces, --cusped, or both --boundary-length and --alpha-length");
    }
    triple = pants::torus_from_lengths(pants::Length(*l_beta), pants::Length(*args.alpha_length), branch);
  }

  pants::Cutoff cutoff = pants::MaxTrace{1e4};
  if (args.max_trace) cutoff = pants::MaxTrace{*args.max_trace};
  if (args.max_denominator) cutoff = pants::MaxDenominator{*args.max_denominator};

  if (args.action == "enum") {
    const auto records = pants::enumerate_slopes(triple, cutoff);
    const bool with_eta = l_beta.has_value() && !args.cusped;
    std::optional<pants::XCoord> boundary;
    if (with_eta) boundary = pants::length_to_x(pants::Length(*l_beta));
    if (cfg.format == Format::csv) std::cout << (with_eta ? "p,q,trace,length,eta\n" : "p,q,trace,length\n");
    for (const auto& r : records) {
      std::optional<double> e;
      if (with_eta) {
        e = pants::eta(pants::TorusPantsShape{
            *boundary, pants::XCoord(pants::trace_to_x(r.trace), pants::DomainMode::limit)});
      }
      switch (cfg.format) {
        case Format::json: std::cout << pants::to_json(r, e) << '\n'; break;
        case Format::csv:
          std::cout << r.slope.p << ',' << r.slope.q << ',' << format_double(r.trace) << ','
                    << format_double(r.length);
          if (e) std::cout << ',' << format_double(*e);
          std::cout << '\n';
          break;
        case Format::human:
          std::cout << fmt::format("({:>4},{:>4})  trace={}  length={}", r.slope.p, r.slope.q,
                                   format_double(r.trace), format_double(r.length));
          if (e) std::cout << "  eta=" << format_double(*e);
          std::cout << '\n';
          break;
      }
    }
    return 0;
  }

  pants::PartialSum sum;
  if (args.action == "sum-eta") {
    if (!l_beta) throw UsageError("sum-eta needs a geodesic boundary (--boundary-length or --traces)");
    sum = pants::eta_partial_sum(triple, pants::Length(*l_beta), cutoff);
  } else if (args.action == "mcshane") {
    sum = pants::mcshane_partial_sum(triple, cutoff);
  } else {
    throw UsageError(fmt::format("unknown torus action '{}'", args.action));
  }
  switch (cfg.format) {
    case Format::json: std::cout << pants::to_json(sum) << '\n'; break;
    case Format::csv:
      std::cout << "cutoff_kind,cutoff_value,value,term_count,last_term\n"
                << pants::cutoff_kind(sum.cutoff) << ',' << format_double(pants::cutoff_value(sum.cutoff))
                << ',' << format_double(sum.value) << ',' << sum.term_count << ','
                << format_double(sum.last_term) << '\n';
      break;
    case Format::human:
      std::cout << fmt::format("{} = {} over {} slopes ({} <= {}), last term {}\n", args.action,
                               format_double(sum.value), sum.term_count, pants::cutoff_kind(sum.cutoff),
                               format_double(pants::cutoff_value(sum.cutoff)),
                               format_double(sum.last_term));
      break;
  }
  return 0;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  int genus = 0;
  double length = 0.0;
};

int cmd_count(const CountArgs& args, const RunConfig& cfg) {
  const pants::Length length(args.length);
  const pants::CountingBound b = pants::np_upper_bound(args.genus, length);
  const double floor = pants::min_measure_floor(length);
  const double budget = pants::unit_tangent_volume(args.genus);
  switch (cfg.format) {
    case Format::json:
      std::cout << fmt::format(
                       R"({{"genus":{},"length":{},"bound":{},"log_bound":{},"floor":{},"budget":{}}})",
                       b.genus, format_double(b.total_length), format_double(b.bound),
                       format_double(b.log_bound), format_double(floor), format_double(budget))
                << '\n';
      break;
    case Format::csv:
      std::cout << "genus,length,bound,log_bound,floor,budget\n"
                << b.genus << ',' << format_double(b.total_length) << ',' << format_double(b.bound) << ','
                << format_double(b.log_bound) << ',' << format_double(floor) << ','
                << format_double(budget) << '\n';
      break;
    case Format::human:
      std::cout << fmt::format(
          "genus {} surfaces have fewer than {} pants of total boundary length <= {}\n"
          "  measure floor per pants: {}\n  unit tangent bundle volume: {}\n",
          b.genus, format_double(b.bound), format_double(b.total_length), format_double(floor),
          format_double(budget));
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measures of hyperbolic pairs of pants: evaluation, verification, enumeration, counting"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  std::string precision = "standard";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--seed", cfg.seed, "Seed for random sampling (default 0)");
  app.add_option("--precision", precision, "Dilogarithm precision mode")
      ->check(CLI::IsMember({"standard", "extended"}));

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a single measure or special function");
  eval->add_option("--phi-x", eval_args.phi_x, "phi at boundary coordinates x1,x2,x3");
  eval->add_option("--phi-lengths", eval_args.phi_lengths, "phi at boundary lengths l1,l2,l3");
  eval->add_option("--eta", eval_args.eta, "eta at boundary/waist coordinates x,y");
  eval->add_option("--rogers", eval_args.rogers, "Rogers dilogarithm L(x)");
  eval->add_option("--lasso", eval_args.lasso, "lasso function La(a,b)");
  eval->add_flag("--limit-mode", eval_args.limit_mode, "Admit coordinates up to 1 - 1e-9");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run inequality verification suites");
  std::vector<std::string> suites = pants::suite_names();
  suites.push_back("all");
  verify->add_option("--suite", verify_args.suite, "Suite to run")->check(CLI::IsMember(suites));
  verify->add_option("--grid", verify_args.grid, "Points per axis (>= 2)");
  verify->add_option("--min", verify_args.min, "Lower grid bound (> 0)");
  verify->add_option("--max", verify_args.max, "Upper grid bound (< 1)");
  verify->add_option("--sampling", verify_args.sampling, "uniform or random")
      ->check(CLI::IsMember({"uniform", "random"}));

  TorusArgs torus_args;
  auto* torus = app.add_subcommand("torus", "One-holed torus slope enumeration and sums");
  torus->add_option("action", torus_args.action, "enum | sum-eta | mcshane")
      ->required()
      ->check(CLI::IsMember({"enum", "sum-eta", "mcshane"}));
  torus->add_option("--boundary-length", torus_args.boundary_length, "Length of the boundary geodesic");
  torus->add_flag("--cusped", torus_args.cusped, "Cusped torus (boundary trace -2)");
  torus->add_option("--alpha-length", torus_args.alpha_length, "Length of the (1,0) and (0,1) curves");
  torus->add_option("--traces", torus_args.traces, "Explicit trace triple tx,ty,tz");
  torus->add_option("--branch", torus_args.branch, "Root of the Fricke quadratic for tz (default: minus if cusped, else plus)")
      ->check(CLI::IsMember({"plus", "minus"}));
  torus->add_option("--max-trace", torus_args.max_trace, "Trace cutoff (default 1e4)");
  torus->add_option("--max-denominator", torus_args.max_denominator, "Cutoff on max(|p|,|q|)");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Upper bound on the number of pants of bounded length");
  count->add_option("--genus", count_args.genus, "Genus (>= 2)")->required();
  count->add_option("--length", count_args.length, "Total boundary length (> 0)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.format = format == "csv" ? Format::csv : format == "human" ? Format::human : Format::json;
    cfg.precision = precision == "extended" ? pants::PrecisionMode::extended : pants::PrecisionMode::standard;
    cfg.threads = threads_from_env();
    if (eval->parsed()) return cmd_eval(eval_args, cfg);
    if (verify->parsed()) return cmd_verify(verify_args, cfg);
    if (torus->parsed()) return cmd_torus(torus_args, cfg);
    if (count->parsed()) return cmd_count(count_args, cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const pants::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
