#pragma once

// Sub-extremal Reissner-Nordstrom exterior: metric function, horizons,
// surface gravities and the tortoise coordinate with its inverse.
//
// Geometric units. All functions are pure.

namespace superrad {

class BlackHole {
 public:
  /// Throws ValidationError unless mass > |charge| and charge != 0.
  BlackHole(double mass, double charge, double tortoise_offset = 0.0);

  double mass() const noexcept { return mass_; }
  double charge() const noexcept { return charge_; }
  double tortoise_offset() const noexcept { return offset_; }

  double r_plus() const noexcept { return r_plus_; }
  double r_minus() const noexcept { return r_minus_; }
  /// r+ - r-, computed without cancellation.
  double horizon_gap() const noexcept { return gap_; }
  double kappa_plus() const noexcept { return kappa_plus_; }
  double kappa_minus() const noexcept { return kappa_minus_; }

 private:
  double mass_;
  double charge_;
  double offset_;
  double r_plus_;
  double r_minus_;
  double gap_;
  double kappa_plus_;
  double kappa_minus_;
};

/// F(r) = 1 - 2M/r + Q^2/r^2. Throws std::domain_error for r <= r+.
double metric_f(const BlackHole& bh, double r);

/// F'(r) = 2(Mr - Q^2)/r^3. Throws std::domain_error for r <= r+.
double metric_f_prime(const BlackHole& bh, double r);

/// Tortoise coordinate r*(r). Throws std::domain_error for r <= r+.
double tortoise(const BlackHole& bh, double r);

/// A radius recovered from a tortoise coordinate. The offset r - r+ is kept
/// separately because near the horizon it is far more accurate than r - r+
/// recomputed from r.
struct RadialSample {
  double r = 0.0;
  double horizon_offset = 0.0;
  /// exp(kappa+ x) underflowed: r has collapsed onto r+ and F onto 0.
  bool horizon_limit = false;
};

/// Inverse of the tortoise map, defined for every real x.
/// Safeguarded Newton in s = log(r - r+) with a bisection fallback.
/// Throws ConvergenceError if the iteration budget is exhausted.
RadialSample radius_from_tortoise(const BlackHole& bh, double x);

/// F and F' evaluated from the horizon offset (accurate near r+).
double metric_f(const BlackHole& bh, const RadialSample& s);
double metric_f_prime(const BlackHole& bh, const RadialSample& s);

}  // namespace superrad
