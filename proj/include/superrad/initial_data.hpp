#pragma once

#include <span>

#include "superrad/grid.hpp"

namespace superrad {

enum class DataKind {
  wave_packet,           ///< phi0 = e^{i theta} g, phi1 = d_x phi0 (incoming)
  flare,                 ///< phi0 = 0, phi1 = g
  oscillating_gaussian,  ///< phi0 = e^{i theta} g, phi1 = 0
};

/// Phase of the oscillating factor: theta = omega x (toy runs) or
/// theta = omega x / lambda (Reissner-Nordstrom runs).
enum class PhaseConvention { unscaled, scaled };

/// Gaussian-based Cauchy data, g(x) = exp(-(x - center)^2 / width^2).
struct DataSpec {
  DataKind kind = DataKind::wave_packet;
  double omega = 0.0;
  double center = 0.0;
  double width = 1.0;
  PhaseConvention phase = PhaseConvention::scaled;
  /// Reject data whose envelope exceeds 1e-12 at either end of the grid.
  bool strict_support = true;
};

void validate(const DataSpec& spec);

/// phi0 and phi1 at one point.
struct CauchyValue {
  Complex phi0;
  Complex phi1;
};

CauchyValue cauchy_data(const DataSpec& spec, double x);

/// State at t = 0: u = phi0, v = phi1 - i V phi0. Derivatives are analytic.
/// Throws SupportError (strict_support) when the Gaussian tail exceeds 1e-12
/// at either end of the grid.
FieldState build_initial_data(const DataSpec& spec, std::span<const double> grid,
                              std::span<const double> V);

}  // namespace superrad
