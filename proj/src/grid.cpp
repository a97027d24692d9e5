#include "superrad/grid.hpp"

#include <algorithm>
#include <cmath>

#include "superrad/errors.hpp"

namespace superrad {

Grid Grid::make(double x_min, double x_max, double h, double dt) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw ValidationError("grid.x_max", "domain must satisfy x_min < x_max");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ValidationError("grid.h", "spacing must be positive");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("grid.dt", "timestep must be positive");
  }
  const double cells = (x_max - x_min) / h;
  const double rounded = std::round(cells);
  if (rounded < 2.0 || std::abs(cells - rounded) > 1e-9 * std::max(1.0, rounded)) {
    throw ValidationError("grid.h", "domain length must be a whole number (>= 2) of cells");
  }
  if (dt / h > 1.0 + 1e-12) {
    throw ValidationError("grid.dt", "CFL condition dt/h <= 1 violated");
  }
  Grid g;
  g.x_min = x_min;
  g.h = h;
  g.dt = dt;
  g.n = static_cast<std::size_t>(rounded) + 1;
  g.x_max = g.node(g.n - 1);
  return g;
}

std::vector<double> Grid::nodes() const {
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = node(j);
  }
  return x;
}

std::size_t Grid::floor_index(double x) const noexcept {
  const double s = std::floor((x - x_min) / h + 1e-9);
  if (s <= 0.0) {
    return 0;
  }
  return std::min(n - 1, static_cast<std::size_t>(s));
}

IndexRange window(const Grid& grid, double lo, double hi) {
  const double tol = 1e-9 * grid.h;
  IndexRange r{grid.n, grid.n};
  for (std::size_t j = 0; j < grid.n; ++j) {
    if (grid.node(j) >= lo - tol) {
      r.begin = j;
      break;
    }
  }
  r.end = r.begin;
  while (r.end < grid.n && grid.node(r.end) <= hi + tol) {
    ++r.end;
  }
  return r;
}

bool FieldState::all_finite() const noexcept {
  auto finite = [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return std::all_of(u.begin(), u.end(), finite) && std::all_of(v.begin(), v.end(), finite);
}

}  // namespace superrad
