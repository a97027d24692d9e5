#pragma once

// Energies, flux probes and gain series.
//
// Discretisation: node terms (kinetic, potential) use trapezoid weights, the
// gradient uses forward differences summed over edges. This is the quadratic
// form the midpoint scheme conserves exactly when V = 0.

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "superrad/grid.hpp"
#include "superrad/kernels.hpp"
#include "superrad/potentials.hpp"

namespace superrad {

struct EnergyBreakdown {
  double kinetic = 0.0;    ///< 1/2 int |phi_t|^2
  double gradient = 0.0;   ///< 1/2 int |phi_x|^2
  double potential = 0.0;  ///< 1/2 int (P - V^2) |phi|^2
  double total() const noexcept { return kinetic + gradient + potential; }
};

/// Conserved energy (with the 1/2) over all nodes, or over `range`.
EnergyBreakdown energy_total(const FieldState& s, const PotentialPair& pp,
                             Execution exec = Execution::serial);
EnergyBreakdown energy_total(const FieldState& s, const PotentialPair& pp, IndexRange range,
                             Execution exec = Execution::serial);

/// E+ = int_{zone_start <= x <= zone_end} (|phi_t|^2 + |phi_x|^2 + P |phi|^2), no 1/2.
double energy_positive_zone(const FieldState& s, const PotentialPair& pp, double zone_start = 0.0,
                            double zone_end = std::numeric_limits<double>::infinity(),
                            Execution exec = Execution::serial);

/// E+(t)/E+(0). Throws NumericalError if E+(0) < 1e-14.
std::vector<double> gain_zone(std::span<const double> zone_energy);

/// Modified energy for Reissner-Nordstrom runs, no 1/2:
///   int |phi_t - i V_h phi|^2 + |phi_x|^2 + (P - (V - V_h)^2) |phi|^2
/// with V_h = qQ/r+. Positive definite when m >= |qQ|/r+ and l = 0.
/// Throws ValidationError for other models.
double modified_energy(const FieldState& s, const PotentialPair& pp,
                       Execution exec = Execution::serial);

enum class Orientation { rightward = 1, leftward = -1 };

/// Time-integrated energy flux through x = position:
///   int_0^t orientation * (-Re(conj(phi_t) (phi_x - c phi))) dt
/// with c = F/r for Reissner-Nordstrom data and c = 0 otherwise. Fields are
/// linearly interpolated between the two bracketing nodes, phi_x uses central
/// differences, and time accumulation is trapezoidal.
class FluxProbe {
 public:
  /// Throws ValidationError unless position has a full stencil inside the grid.
  FluxProbe(const PotentialPair& pp, double position, Orientation orientation = Orientation::rightward);

  double position() const noexcept { return position_; }
  /// Instantaneous integrand at the probe.
  double integrand(const FieldState& s) const;
  /// orientation * c |phi|^2 / 2 at the probe. The c-part of the integrand is
  /// its time derivative, so accumulated() minus the change of this term is
  /// the flux of the energy without the geometric correction.
  double geometric_term(const FieldState& s) const;
  /// Adds the trapezoid contribution of one step of size dt. The first call
  /// only stores the integrand.
  void record(const FieldState& s, double dt);
  double accumulated() const noexcept { return accumulated_; }

 private:
  const PotentialPair* pp_;
  double position_;
  double sign_;
  double h_;
  std::size_t j_ = 0;
  double theta_ = 0.0;
  bool started_ = false;
  double last_ = 0.0;
  double accumulated_ = 0.0;
};

/// Flux gain G(t) = F(t)/E0 at one probe (empty gain when E0 vanishes).
struct GainSeries {
  double probe = 0.0;
  std::vector<double> times;
  std::vector<double> flux;
  std::vector<double> gain;
};

struct Plateau {
  double value = 0.0;   ///< mean over the trailing window
  double spread = 0.0;  ///< max - min over the trailing window
  bool stabilized = false;
};

/// Trailing-window plateau: stabilized iff spread < tolerance * |value|.
Plateau detect_plateau(std::span<const double> times, std::span<const double> values,
                       double window_fraction = 0.1, double tolerance = 0.01);

/// Least-squares slope of values against times restricted to [t0, t1].
/// Throws ValidationError with fewer than two samples in range.
double least_squares_slope(std::span<const double> times, std::span<const double> values,
                           double t0, double t1);

}  // namespace superrad
