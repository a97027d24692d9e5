#include "superrad/initial_data.hpp"

#include <cmath>

#include "superrad/errors.hpp"

namespace superrad {

namespace {

constexpr double kSupportTolerance = 1e-12;

double envelope(const DataSpec& spec, double x) {
  const double z = (x - spec.center) / spec.width;
  return std::exp(-z * z);
}

double wavenumber(const DataSpec& spec) {
  return spec.phase == PhaseConvention::scaled ? spec.omega / spec.width : spec.omega;
}

}  // namespace

void validate(const DataSpec& spec) {
  if (!(spec.width > 0.0) || !std::isfinite(spec.width)) {
    throw ValidationError("data.width", "must be positive");
  }
  if (!std::isfinite(spec.omega)) {
    throw ValidationError("data.omega", "must be finite");
  }
  if (!std::isfinite(spec.center)) {
    throw ValidationError("data.center", "must be finite");
  }
}

CauchyValue cauchy_data(const DataSpec& spec, double x) {
  const double k = wavenumber(spec);
  const double g = envelope(spec, x);
  const Complex oscillating = std::polar(g, k * x);
  switch (spec.kind) {
    case DataKind::flare:
      return {Complex{}, Complex{g, 0.0}};
    case DataKind::oscillating_gaussian:
      return {oscillating, Complex{}};
    case DataKind::wave_packet:
    default: {
      const double lambda2 = spec.width * spec.width;
      const Complex slope{-2.0 * (x - spec.center) / lambda2, k};
      return {oscillating, slope * oscillating};
    }
  }
}

FieldState build_initial_data(const DataSpec& spec, std::span<const double> grid,
                              std::span<const double> V) {
  validate(spec);
  if (grid.size() != V.size()) {
    throw ValidationError("data", "grid and potential sizes differ");
  }
  if (grid.empty()) {
    throw ValidationError("data", "empty grid");
  }
  if (spec.strict_support) {
    const double tail = std::max(envelope(spec, grid.front()), envelope(spec, grid.back()));
    if (tail > kSupportTolerance) {
      throw SupportError("data.center",
                         "initial data not supported inside the domain (boundary envelope " +
                             std::to_string(tail) + ")");
    }
  }
  FieldState state(grid.size(), 0.0);
  const Complex i{0.0, 1.0};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const CauchyValue c = cauchy_data(spec, grid[j]);
    state.u[j] = c.phi0;
    state.v[j] = c.phi1 - i * V[j] * c.phi0;
  }
  return state;
}

}  // namespace superrad
