#include "superrad/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "superrad/errors.hpp"

namespace superrad {

namespace {

void require_exterior(const BlackHole& bh, double r) {
  if (!(r > bh.r_plus())) {
    throw std::domain_error("radius must lie outside the event horizon r+");
  }
}

// log(r - r-) written in terms of the horizon offset d = r - r+.
double log_inner_distance(const BlackHole& bh, double d) {
  return std::log(bh.horizon_gap()) + std::log1p(d / bh.horizon_gap());
}

// Tortoise coordinate as a function of s = log(r - r+).
double tortoise_of_log_offset(const BlackHole& bh, double s) {
  const double d = std::exp(s);
  return bh.r_plus() + d + s / bh.kappa_plus() + log_inner_distance(bh, d) / bh.kappa_minus() +
         bh.tortoise_offset();
}

// d r* / d s = r^2 / (r - r-), strictly positive.
double tortoise_slope(const BlackHole& bh, double s) {
  const double d = std::exp(s);
  const double r = bh.r_plus() + d;
  return r * r / (d + bh.horizon_gap());
}

constexpr double kMaxLogOffset = 709.0;
constexpr int kMaxIterations = 200;

}  // namespace

BlackHole::BlackHole(double mass, double charge, double tortoise_offset)
    : mass_(mass), charge_(charge), offset_(tortoise_offset) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw ValidationError("black_hole.mass", "must be positive and finite");
  }
  if (charge == 0.0 || !std::isfinite(charge)) {
    throw ValidationError("black_hole.charge", "must be nonzero and finite");
  }
  if (!(mass > std::abs(charge))) {
    throw ValidationError("black_hole.charge", "only the sub-extremal case M > |Q| is supported");
  }
  if (!std::isfinite(tortoise_offset)) {
    throw ValidationError("black_hole.tortoise_offset", "must be finite");
  }
  const double root = std::sqrt((mass - charge) * (mass + charge));
  r_plus_ = mass + root;
  // r+ r- = Q^2 avoids cancellation in M - sqrt(M^2 - Q^2).
  r_minus_ = charge * charge / r_plus_;
  gap_ = 2.0 * root;
  kappa_plus_ = gap_ / (r_plus_ * r_plus_);
  kappa_minus_ = -gap_ / (r_minus_ * r_minus_);
}

double metric_f(const BlackHole& bh, double r) {
  require_exterior(bh, r);
  return (r - bh.r_plus()) * (r - bh.r_minus()) / (r * r);
}

double metric_f_prime(const BlackHole& bh, double r) {
  require_exterior(bh, r);
  const double q2 = bh.charge() * bh.charge();
  return 2.0 * (bh.mass() * r - q2) / (r * r * r);
}

double metric_f(const BlackHole& bh, const RadialSample& s) {
  return s.horizon_offset * (s.horizon_offset + bh.horizon_gap()) / (s.r * s.r);
}

double metric_f_prime(const BlackHole& bh, const RadialSample& s) {
  const double q2 = bh.charge() * bh.charge();
  return 2.0 * (bh.mass() * s.r - q2) / (s.r * s.r * s.r);
}

double tortoise(const BlackHole& bh, double r) {
  require_exterior(bh, r);
  return r + std::log(r - bh.r_plus()) / bh.kappa_plus() +
         std::log(r - bh.r_minus()) / bh.kappa_minus() + bh.tortoise_offset();
}

RadialSample radius_from_tortoise(const BlackHole& bh, double x) {
  if (!std::isfinite(x)) {
    throw ConvergenceError("radius_from_tortoise: non-finite tortoise coordinate");
  }
  const double kp = bh.kappa_plus();
  const double rp = bh.r_plus();
  const double rm = bh.r_minus();

  // Near-horizon asymptote: r - r+ ~ (r+ - r-)^(r-^2/r+^2) e^{-k+(r+ + R0)} e^{k+ x}.
  const double s_horizon =
      kp * (x - rp - bh.tortoise_offset()) + (rm * rm) / (rp * rp) * std::log(bh.horizon_gap());
  const double s_min = std::log(std::numeric_limits<double>::min());
  if (s_horizon < s_min) {
    // Far enough down the throat that r - r+ is not representable as a normal
    // number; the asymptote is exact to working precision there.
    return {rp, std::exp(s_horizon), true};
  }

  auto residual = [&](double s) { return tortoise_of_log_offset(bh, s) - x; };

  double s = s_horizon < 0.0 ? s_horizon : std::log(std::max(x - bh.tortoise_offset(), rp));
  s = std::min(s, kMaxLogOffset);

  // Bracket the root; the residual is strictly increasing in s.
  double lo = s - 1.0;
  double hi = s + 1.0;
  for (double width = 1.0; residual(lo) > 0.0; width *= 2.0) {
    lo -= width;
    if (lo < s_min) {
      return {rp, std::exp(s_horizon), true};
    }
  }
  for (double width = 1.0; residual(hi) < 0.0; width *= 2.0) {
    hi += width;
    if (hi > kMaxLogOffset) {
      throw ConvergenceError("radius_from_tortoise: tortoise coordinate too large");
    }
  }
  s = std::clamp(s, lo, hi);

  for (int it = 0; it < kMaxIterations; ++it) {
    const double g = residual(s);
    if (g == 0.0) {
      break;
    }
    if (g < 0.0) {
      lo = s;
    } else {
      hi = s;
    }
    double next = s - g / tortoise_slope(bh, s);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    const double step = std::abs(next - s);
    s = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(s)) ||
        hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(s))) {
      break;
    }
  }

  const double d = std::exp(s);
  const double r = rp + d;
  // Residual scale: each term of r* carries its own rounding.
  const double scale = std::max({1.0, std::abs(x), r, std::abs(s / kp)});
  if (std::abs(residual(s)) > 1e-12 * scale) {
    throw ConvergenceError("radius_from_tortoise: Newton iteration did not converge");
  }
  return {r, d, false};
}

}  // namespace superrad
