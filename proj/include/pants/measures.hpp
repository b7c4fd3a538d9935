#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pants/pants_geometry.hpp"

namespace pants {

// Receives every argument handed to Rogers' L during an evaluation, before
// rounding excursions of a few ulps outside [0,1] are clamped away.
using ArgumentSink = std::function<void(double)>;

// Measure of a properly embedded pair of pants, written in the boundary
// coordinates: 4 * sum over the six ordered assignments {i,j,k} = {1,2,3} of
// four Rogers terms.
[[nodiscard]] double phi_x(const PantsShape& p);
[[nodiscard]] double phi_x(const PantsShape& p, const ArgumentSink& sink);
[[nodiscard]] double phi_x(double x1, double x2, double x3, DomainMode mode = DomainMode::strict);

// Same measure assembled from boundary lengths through x_i and y_j =
// tanh^2(m_j/2), the sum running over ordered pairs i != j.
[[nodiscard]] double phi_y(Length l1, Length l2, Length l3);
[[nodiscard]] double phi_y(Length l1, Length l2, Length l3, const ArgumentSink& sink);

// Measure of an improperly embedded pair of pants (seven Rogers terms).
[[nodiscard]] double eta(const TorusPantsShape& s);
[[nodiscard]] double eta(const TorusPantsShape& s, const ArgumentSink& sink);
[[nodiscard]] double eta(double x, double y, DomainMode mode = DomainMode::strict);

// -24 t^3 log t + 24 t^3 on [0,1]; the strict lower bound for phi(t,t,t).
[[nodiscard]] double phi_diag_lower_bound(double t);

// Closed-form partial derivatives.
[[nodiscard]] double dphi_dx1(const PantsShape& p);
[[nodiscard]] double deta_dx(const TorusPantsShape& s);
[[nodiscard]] double deta_dy(const TorusPantsShape& s);

using ScalarField = std::function<double(std::span<const double>)>;

// Default central-difference step for a coordinate: 1e-6 * max(|x|, 1e-3).
[[nodiscard]] double default_fd_step(double x);

// Central-difference gradient. Every coordinate must keep a margin of at
// least its step from 0 and 1. A fixed `step` overrides the per-coordinate
// default.
[[nodiscard]] std::vector<double> fd_gradient(const ScalarField& f, std::span<const double> point,
                                              std::optional<double> step = std::nullopt);

}  // namespace pants
