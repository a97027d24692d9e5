#include "superrad/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "superrad/errors.hpp"

namespace superrad {

namespace {

double spacing(const PotentialPair& pp) {
  if (pp.size() < 2) {
    throw ValidationError("grid", "need at least two nodes");
  }
  return pp.x[1] - pp.x[0];
}

void require_sizes(const FieldState& s, const PotentialPair& pp) {
  if (s.u.size() != pp.size() || s.v.size() != pp.size()) {
    throw ValidationError("state", "field and potential sizes differ");
  }
}

double trapezoid_weight(std::size_t j, IndexRange r) {
  return (j == r.begin || j + 1 == r.end) ? 0.5 : 1.0;
}

// Sum over edges (j, j+1) inside r of |u_{j+1} - u_j|^2 / h.
double edge_gradient(std::span<const Complex> u, IndexRange r, double h, Execution exec) {
  if (r.size() < 2) {
    return 0.0;
  }
  return kernels::chunked_sum(exec, r.begin, r.end - 1,
                              [&](std::size_t j) { return std::norm(u[j + 1] - u[j]); }) /
         h;
}

}  // namespace

EnergyBreakdown energy_total(const FieldState& s, const PotentialPair& pp, Execution exec) {
  return energy_total(s, pp, IndexRange{0, pp.size()}, exec);
}

EnergyBreakdown energy_total(const FieldState& s, const PotentialPair& pp, IndexRange r,
                             Execution exec) {
  require_sizes(s, pp);
  const double h = spacing(pp);
  const Complex I{0.0, 1.0};
  EnergyBreakdown e;
  e.kinetic = 0.5 * h * kernels::chunked_sum(exec, r.begin, r.end, [&](std::size_t j) {
    return trapezoid_weight(j, r) * std::norm(s.v[j] + I * pp.V[j] * s.u[j]);
  });
  e.gradient = 0.5 * edge_gradient(s.u, r, h, exec);
  e.potential = 0.5 * h * kernels::chunked_sum(exec, r.begin, r.end, [&](std::size_t j) {
    return trapezoid_weight(j, r) * pp.total(j) * std::norm(s.u[j]);
  });
  return e;
}

double energy_positive_zone(const FieldState& s, const PotentialPair& pp, double zone_start,
                            double zone_end, Execution exec) {
  require_sizes(s, pp);
  const double h = spacing(pp);
  const Complex I{0.0, 1.0};
  const double tol = 1e-9 * h;
  IndexRange r{pp.size(), pp.size()};
  for (std::size_t j = 0; j < pp.size(); ++j) {
    if (pp.x[j] >= zone_start - tol) {
      r.begin = j;
      break;
    }
  }
  r.end = r.begin;
  while (r.end < pp.size() && pp.x[r.end] <= zone_end + tol) {
    ++r.end;
  }
  const double nodes = h * kernels::chunked_sum(exec, r.begin, r.end, [&](std::size_t j) {
    return trapezoid_weight(j, r) *
           (std::norm(s.v[j] + I * pp.V[j] * s.u[j]) + pp.P[j] * std::norm(s.u[j]));
  });
  return nodes + edge_gradient(s.u, r, h, exec);
}

std::vector<double> gain_zone(std::span<const double> zone_energy) {
  if (zone_energy.empty() || !(zone_energy.front() >= 1e-14)) {
    throw NumericalError("gain_zone: initial zone energy below 1e-14");
  }
  std::vector<double> g(zone_energy.size());
  const double e0 = zone_energy.front();
  std::transform(zone_energy.begin(), zone_energy.end(), g.begin(),
                 [e0](double e) { return e / e0; });
  return g;
}

double modified_energy(const FieldState& s, const PotentialPair& pp, Execution exec) {
  const auto* rn = std::get_if<RnModel>(&pp.model);
  if (rn == nullptr) {
    throw ValidationError("model", "modified energy is defined for Reissner-Nordstrom runs only");
  }
  require_sizes(s, pp);
  const double h = spacing(pp);
  const double Vh = rn->horizon_potential();
  const Complex I{0.0, 1.0};
  const IndexRange r{0, pp.size()};
  const double nodes = h * kernels::chunked_sum(exec, r.begin, r.end, [&](std::size_t j) {
    const double dV = pp.V[j] - Vh;
    return trapezoid_weight(j, r) *
           (std::norm(s.v[j] + I * dV * s.u[j]) + (pp.P[j] - dV * dV) * std::norm(s.u[j]));
  });
  return nodes + edge_gradient(s.u, r, h, exec);
}

FluxProbe::FluxProbe(const PotentialPair& pp, double position, Orientation orientation)
    : pp_(&pp), position_(position), sign_(orientation == Orientation::rightward ? 1.0 : -1.0) {
  h_ = spacing(pp);
  const std::size_t n = pp.size();
  const double s = (position - pp.x.front()) / h_;
  if (!std::isfinite(s) || s < 1.0 - 1e-9 || s > static_cast<double>(n) - 2.0 + 1e-9) {
    throw ValidationError("diagnostics.probes", "probe needs a full stencil inside the grid");
  }
  double fl = std::floor(s + 1e-9);
  j_ = static_cast<std::size_t>(fl);
  theta_ = std::max(0.0, s - fl);
  if (theta_ < 1e-9) {
    theta_ = 0.0;
  }
  if (theta_ > 0.0 && j_ + 2 > n - 1) {
    throw ValidationError("diagnostics.probes", "probe needs a full stencil inside the grid");
  }
}

double FluxProbe::geometric_term(const FieldState& s) const {
  const PotentialPair& pp = *pp_;
  if (pp.f_over_r.empty()) {
    return 0.0;
  }
  Complex phi = s.u[j_];
  double c = pp.f_over_r[j_];
  if (theta_ > 0.0) {
    phi = (1.0 - theta_) * phi + theta_ * s.u[j_ + 1];
    c = (1.0 - theta_) * c + theta_ * pp.f_over_r[j_ + 1];
  }
  return 0.5 * sign_ * c * std::norm(phi);
}

double FluxProbe::integrand(const FieldState& s) const {
  const PotentialPair& pp = *pp_;
  const Complex I{0.0, 1.0};
  auto fields = [&](std::size_t j, Complex& phi, Complex& phi_t, Complex& phi_x, double& c) {
    phi = s.u[j];
    phi_t = s.v[j] + I * pp.V[j] * s.u[j];
    phi_x = (s.u[j + 1] - s.u[j - 1]) / (2.0 * h_);
    c = pp.f_over_r.empty() ? 0.0 : pp.f_over_r[j];
  };
  Complex phi, phi_t, phi_x;
  double c = 0.0;
  fields(j_, phi, phi_t, phi_x, c);
  if (theta_ > 0.0) {
    Complex phi1, phi_t1, phi_x1;
    double c1 = 0.0;
    fields(j_ + 1, phi1, phi_t1, phi_x1, c1);
    const double a = 1.0 - theta_;
    phi = a * phi + theta_ * phi1;
    phi_t = a * phi_t + theta_ * phi_t1;
    phi_x = a * phi_x + theta_ * phi_x1;
    c = a * c + theta_ * c1;
  }
  return -sign_ * std::real(std::conj(phi_t) * (phi_x - c * phi));
}

void FluxProbe::record(const FieldState& s, double dt) {
  const double now = integrand(s);
  if (started_) {
    accumulated_ += 0.5 * dt * (last_ + now);
  }
  started_ = true;
  last_ = now;
}

Plateau detect_plateau(std::span<const double> times, std::span<const double> values,
                       double window_fraction, double tolerance) {
  if (times.empty() || times.size() != values.size()) {
    throw ValidationError("series", "empty or mismatched series");
  }
  const double t_end = times.back();
  const double t_cut = t_end - window_fraction * (t_end - times.front());
  double sum = 0.0;
  double lo = values.back();
  double hi = values.back();
  std::size_t count = 0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] >= t_cut) {
      sum += values[k];
      lo = std::min(lo, values[k]);
      hi = std::max(hi, values[k]);
      ++count;
    }
  }
  Plateau p;
  p.value = sum / static_cast<double>(count);
  p.spread = hi - lo;
  p.stabilized = p.spread < tolerance * std::abs(p.value);
  return p;
}

double least_squares_slope(std::span<const double> times, std::span<const double> values,
                           double t0, double t1) {
  double st = 0.0;
  double sv = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] >= t0 && times[k] <= t1) {
      st += times[k];
      sv += values[k];
      ++count;
    }
  }
  if (count < 2) {
    throw ValidationError("series", "fewer than two samples in the fit window");
  }
  const double mt = st / static_cast<double>(count);
  const double mv = sv / static_cast<double>(count);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] >= t0 && times[k] <= t1) {
      num += (times[k] - mt) * (values[k] - mv);
      den += (times[k] - mt) * (times[k] - mt);
    }
  }
  return num / den;
}

}  // namespace superrad
