#pragma once

#include <optional>
#include <string>

#include "pants/counting.hpp"
#include "pants/torus_enumeration.hpp"
#include "pants/verification.hpp"

namespace pants {

// 17 significant digits (round-trips a double); non-finite values map to null.
[[nodiscard]] std::string format_double(double v);

// {"suite","pass","points","worst_margin","failures":[{"point","lhs","rhs",...}],...}
[[nodiscard]] std::string to_json(const VerificationReport& report);

// One JSON line per slope: {"p","q","trace","length"} plus "eta" when given.
[[nodiscard]] std::string to_json(const SlopeRecord& record, std::optional<double> eta = std::nullopt);

[[nodiscard]] std::string to_json(const PartialSum& sum);

[[nodiscard]] std::string cutoff_kind(const Cutoff& cutoff);
[[nodiscard]] double cutoff_value(const Cutoff& cutoff);

}  // namespace pants
