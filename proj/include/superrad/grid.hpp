#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace superrad {

using Complex = std::complex<double>;

/// Uniform space-time mesh. Nodes are x_j = x_min + j h, j = 0..n-1.
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  double h = 0.0;
  double dt = 0.0;
  std::size_t n = 0;

  /// Builds and validates: h > 0, dt > 0, x_max > x_min, (x_max - x_min)/h an
  /// integer to 1e-9 relative, and the CFL bound dt/h <= 1.
  static Grid make(double x_min, double x_max, double h, double dt);

  double node(std::size_t j) const noexcept { return x_min + static_cast<double>(j) * h; }
  std::vector<double> nodes() const;
  double courant() const noexcept { return dt / h; }
  /// Index of the last node with x_j <= x (clamped to the grid).
  std::size_t floor_index(double x) const noexcept;
};

/// Half-open index window [begin, end) over grid nodes.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool contains(std::size_t j) const noexcept { return j >= begin && j < end; }
};

/// Nodes of `grid` with x >= lo and x <= hi (small tolerance for round-off).
IndexRange window(const Grid& grid, double lo, double hi);

/// One time level of the first-order system: u = phi, v = (d_t - iV) phi.
struct FieldState {
  std::vector<Complex> u;
  std::vector<Complex> v;
  double t = 0.0;

  FieldState() = default;
  explicit FieldState(std::size_t n, double time = 0.0) : u(n), v(n), t(time) {}

  std::size_t size() const noexcept { return u.size(); }
  bool all_finite() const noexcept;
};

}  // namespace superrad
