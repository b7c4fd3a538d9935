#pragma once

#include <array>

namespace pants {

// How close to the ends of (0,1) a coordinate may sit. `strict` rejects
// anything within 1e-9 of 0 or 1. `limit` admits (0, 1 - 1e-9] so that the
// degenerate "coordinate equals 1" statements can be probed from inside.
enum class DomainMode { strict, limit };

inline constexpr double kBoundaryMargin = 1e-9;
inline constexpr double kLimitOne = 1.0 - kBoundaryMargin;

// Hyperbolic length, strictly positive and finite.
class Length {
 public:
  explicit Length(double value);
  [[nodiscard]] double value() const { return value_; }

 private:
  double value_;
};

// Boundary coordinate x = exp(-length/2) in (0,1).
class XCoord {
 public:
  explicit XCoord(double value, DomainMode mode = DomainMode::strict);
  [[nodiscard]] double value() const { return value_; }
  [[nodiscard]] DomainMode mode() const { return mode_; }

 private:
  double value_;
  DomainMode mode_;
};

// Boundary coordinates of a properly embedded pair of pants. The order is
// irrelevant to every symmetric quantity.
struct PantsShape {
  XCoord x1, x2, x3;

  [[nodiscard]] std::array<double, 3> values() const {
    return {x1.value(), x2.value(), x3.value()};
  }
};

// Improperly embedded pants inside a one-holed torus: `boundary` is the
// coordinate of the torus boundary, `waist` that of the curve it was cut along.
struct TorusPantsShape {
  XCoord boundary;
  XCoord waist;
};

[[nodiscard]] XCoord length_to_x(Length l, DomainMode mode = DomainMode::strict);
[[nodiscard]] Length x_to_length(XCoord x);

// cosh of the orthogeodesic between the two boundaries other than `i`
// (i in {1,2,3}), from the right-angled hexagon formula.
[[nodiscard]] double cosh_m(int i, Length l1, Length l2, Length l3);

// y_j = tanh^2(m_j / 2) written in the boundary coordinates.
[[nodiscard]] double y_coord(int j, const PantsShape& p);

// Orthogeodesic data of an improperly embedded pair of pants.
[[nodiscard]] double torus_tanh2_q(const TorusPantsShape& s);
[[nodiscard]] double torus_tanh2_h(const TorusPantsShape& s);
[[nodiscard]] double torus_sech2_p(const TorusPantsShape& s);

// 1 - v^2 as (1 - v)(1 + v); exact subtraction keeps relative accuracy near 1.
[[nodiscard]] constexpr double one_minus_sq(double v) { return (1.0 - v) * (1.0 + v); }

}  // namespace pants
