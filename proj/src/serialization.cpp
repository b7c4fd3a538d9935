#include "pants/serialization.hpp"

#include <cmath>

#include <fmt/format.h>

namespace pants {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt::format("{:.17g}", v);
}

std::string to_json(const VerificationReport& report) {
  std::string out = fmt::format(R"({{"suite":{},"pass":{},"points":{},"worst_margin":{},"failures":[)",
                                quote(report.suite), boolean(report.pass), report.points_checked,
                                format_double(report.worst_margin));
  for (std::size_t i = 0; i < report.failures.size(); ++i) {
    const Failure& f = report.failures[i];
    if (i > 0) out += ',';
    out += R"({"point":[)";
    for (std::size_t k = 0; k < f.point.size(); ++k) {
      if (k > 0) out += ',';
      out += format_double(f.point[k]);
    }
    out += fmt::format(R"(],"lhs":{},"rhs":{},"margin":{},"check":{}}})", format_double(f.lhs),
                       format_double(f.rhs), format_double(f.margin), quote(f.check));
  }
  out += fmt::format(R"(],"failure_count":{},"limit_mode":{},"checks":[)", report.failure_count,
                     boolean(report.limit_mode));
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckSummary& c = report.checks[i];
    if (i > 0) out += ',';
    out += fmt::format(R"({{"name":{},"strict":{},"points":{},"worst_margin":{},"pass":{}}})",
                       quote(c.name), boolean(c.strict), c.points, format_double(c.worst_margin),
                       boolean(c.pass));
  }
  out += "]}";
  return out;
}

std::string to_json(const SlopeRecord& record, std::optional<double> eta) {
  std::string out = fmt::format(R"({{"p":{},"q":{},"trace":{},"length":{})", record.slope.p,
                                record.slope.q, format_double(record.trace),
                                format_double(record.length));
  if (eta) out += fmt::format(R"(,"eta":{})", format_double(*eta));
  out += '}';
  return out;
}

std::string cutoff_kind(const Cutoff& cutoff) {
  return std::holds_alternative<MaxTrace>(cutoff) ? "max_trace" : "max_denominator";
}

double cutoff_value(const Cutoff& cutoff) {
  if (const auto* t = std::get_if<MaxTrace>(&cutoff)) return t->t;
  return static_cast<double>(std::get<MaxDenominator>(cutoff).n);
}

std::string to_json(const PartialSum& sum) {
  return fmt::format(R"({{"cutoff":{{"kind":{},"value":{}}},"value":{},"term_count":{},"last_term":{}}})",
                     quote(cutoff_kind(sum.cutoff)), format_double(cutoff_value(sum.cutoff)),
                     format_double(sum.value), sum.term_count, format_double(sum.last_term));
}

}  // namespace pants
