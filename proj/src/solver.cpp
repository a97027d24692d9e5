#include "superrad/solver.hpp"

#include <cmath>
#include <utility>

#include "superrad/errors.hpp"

namespace superrad {

namespace {

bool decide_split(Splitting policy, BoundaryMode bc, const PotentialPair& pp) {
  switch (policy) {
    case Splitting::always:
      return true;
    case Splitting::never:
      return false;
    case Splitting::automatic:
      break;
  }
  return bc == BoundaryMode::transparent && pp.has_mass_term();
}

}  // namespace

Stepper::Stepper(const PotentialPair& pp, const Grid& grid, BoundaryMode bc, Splitting splitting,
                 Execution exec, BoundaryClosure closure)
    : grid_(grid), bc_(bc), exec_(exec), splits_(decide_split(splitting, bc, pp)) {
  const std::size_t n = grid.n;
  if (pp.size() != n) {
    throw ValidationError("grid", "potentials sampled on a different grid");
  }
  if (n < 3) {
    throw ValidationError("grid", "need at least three nodes");
  }
  const double dt = grid.dt;
  const double h = grid.h;
  const double c = dt * dt / (4.0 * h * h);
  const double q = dt * dt / 4.0;
  const Complex I{0.0, 1.0};

  P_ = pp.P;
  a_.resize(n);
  d_.resize(n);
  w_.assign(n, dt);
  implicit_ = TridiagonalMatrix(n);
  explicit_ = TridiagonalMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    a_[j] = 1.0 - I * (0.5 * dt * pp.V[j]);
    d_[j] = 1.0 + I * (0.5 * dt * pp.V[j]);
    const double p = splits_ ? 0.0 : pp.P[j];
    implicit_.lower[j] = -c;
    implicit_.upper[j] = -c;
    implicit_.diag[j] = a_[j] * a_[j] + 2.0 * c + q * p;
    explicit_.lower[j] = c;
    explicit_.upper[j] = c;
    explicit_.diag[j] = a_[j] * d_[j] - 2.0 * c - q * p;
  }

  const std::size_t J = n - 1;
  w_[0] = 0.0;
  w_[J] = 0.0;
  implicit_.lower[0] = explicit_.lower[0] = 0.0;
  implicit_.upper[J] = explicit_.upper[J] = 0.0;
  if (bc == BoundaryMode::transparent) {
    // Crank-Nicolson on (d_t - iV) u -/+ d_x u = 0 with one-sided differences,
    // each row multiplied by dt.
    const double rho = 0.5 * dt / h;
    implicit_.diag[J] = a_[J] + rho;
    implicit_.lower[J] = -rho;
    explicit_.diag[J] = d_[J] - rho;
    explicit_.lower[J] = rho;
    implicit_.diag[0] = a_[0] + rho;
    implicit_.upper[0] = -rho;
    explicit_.diag[0] = d_[0] - rho;
    explicit_.upper[0] = rho;
    if (closure == BoundaryClosure::klein_gordon) {
      // Row residual equals the midpoint of the auxiliary w, whose update
      // w' = (d w - (dt P/4)(u' + u)) / a is substituted into the row.
      aux_gain_left_ = 0.25 * dt * pp.P[0];
      aux_gain_right_ = 0.25 * dt * pp.P[J];
      const Complex cl = 0.5 * dt * aux_gain_left_ / a_[0];
      const Complex cr = 0.5 * dt * aux_gain_right_ / a_[J];
      implicit_.diag[0] += cl;
      explicit_.diag[0] -= cl;
      implicit_.diag[J] += cr;
      explicit_.diag[J] -= cr;
    }
  } else {
    implicit_.diag[0] = implicit_.diag[J] = 1.0;
    implicit_.upper[0] = implicit_.lower[J] = 0.0;
    explicit_.diag[0] = explicit_.diag[J] = 0.0;
    explicit_.upper[0] = explicit_.lower[J] = 0.0;
  }

  if (exec == Execution::serial) {
    thomas_ = ThomasSolver(implicit_);
  } else {
    partitioned_ = PartitionedSolver(implicit_, PartitionedSolver::default_partitions(n));
  }
  rhs_.resize(n);
  u_next_.resize(n);
}

void Stepper::apply_boundary_velocity(FieldState& s) const {
  const std::size_t J = grid_.n - 1;
  if (bc_ == BoundaryMode::transparent) {
    s.v[J] = -(s.u[J] - s.u[J - 1]) / grid_.h + aux_right_;
    s.v[0] = (s.u[1] - s.u[0]) / grid_.h + aux_left_;
  } else {
    s.v[0] = 0.0;
    s.v[J] = 0.0;
  }
}

void Stepper::step_homogeneous(FieldState& s) {
  if (s.size() != grid_.n) {
    throw ValidationError("state", "state size does not match the grid");
  }
  const std::size_t J = grid_.n - 1;
  const double dt = grid_.dt;
  if (exec_ == Execution::serial) {
    kernels::serial::explicit_rhs(explicit_, w_, s.u, s.v, rhs_);
  } else {
    kernels::parallel::explicit_rhs(explicit_, w_, s.u, s.v, rhs_);
  }
  if (bc_ == BoundaryMode::transparent) {
    rhs_[0] += dt * aux_left_ / a_[0];
    rhs_[J] += dt * aux_right_ / a_[J];
  }
  if (exec_ == Execution::serial) {
    thomas_.solve(rhs_, u_next_);
    kernels::serial::velocity_update(a_, d_, dt, u_next_, s.u, s.v);
  } else {
    partitioned_.solve(rhs_, u_next_);
    kernels::parallel::velocity_update(a_, d_, dt, u_next_, s.u, s.v);
  }
  if (bc_ == BoundaryMode::transparent) {
    aux_left_ = (d_[0] * aux_left_ - aux_gain_left_ * (u_next_[0] + s.u[0])) / a_[0];
    aux_right_ = (d_[J] * aux_right_ - aux_gain_right_ * (u_next_[J] + s.u[J])) / a_[J];
  }
  std::swap(s.u, u_next_);
  apply_boundary_velocity(s);
  s.t += grid_.dt;
}

void Stepper::half_kick(FieldState& s) const {
  if (exec_ == Execution::serial) {
    kernels::serial::potential_kick(P_, 0.5 * grid_.dt, s.u, s.v);
  } else {
    kernels::parallel::potential_kick(P_, 0.5 * grid_.dt, s.u, s.v);
  }
}

void Stepper::step_split(FieldState& s) {
  half_kick(s);
  step_homogeneous(s);
  half_kick(s);
}

void Stepper::step(FieldState& s) {
  if (splits_) {
    step_split(s);
  } else {
    step_homogeneous(s);
  }
}

namespace {

bool uses_zone_normalization(const SimConfig& c) {
  switch (c.normalization) {
    case GainNormalization::zone:
      return true;
    case GainNormalization::total:
      return false;
    case GainNormalization::automatic:
      break;
  }
  return provenance(c.model) != Provenance::reissner_nordstrom;
}

}  // namespace

void validate(const SimConfig& c) {
  std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ToyModel>) {
          validate(m.params);
        } else if constexpr (std::is_same_v<M, RnModel>) {
          validate(m.field);
        }
      },
      c.model);
  // Re-run the grid checks on the stored values.
  (void)Grid::make(c.grid.x_min, c.grid.x_max, c.grid.h, c.grid.dt);
  if (!(c.final_time > 0.0) || !std::isfinite(c.final_time)) {
    throw ValidationError("grid.final_time", "must be positive");
  }
  validate(c.data);
  if (c.data.strict_support) {
    const double ends[2] = {c.grid.x_min, c.grid.x_max};
    const double zeros[2] = {0.0, 0.0};
    (void)build_initial_data(c.data, ends, zeros);
  }
  for (double R : c.probes) {
    if (!(R >= c.grid.x_min + c.grid.h - 1e-9 * c.grid.h) ||
        !(R <= c.grid.x_max - c.grid.h + 1e-9 * c.grid.h)) {
      throw ValidationError("diagnostics.probes", "probe must lie at least one cell inside the domain");
    }
  }
  if (uses_zone_normalization(c) &&
      !(c.zone_start >= c.grid.x_min && c.zone_start < c.grid.x_max)) {
    throw ValidationError("diagnostics.zone_start", "must lie inside the domain");
  }
}

Grid working_grid(const SimConfig& c) {
  if (c.boundary != BoundaryMode::reference) {
    return c.grid;
  }
  // A disturbance leaving the requested window needs 2 * margin to come back
  // after the Dirichlet reflection; keep that longer than the run.
  const double margin = 0.5 * c.final_time + 10.0;
  const double cells = std::ceil(margin / c.grid.h);
  return Grid::make(c.grid.x_min - cells * c.grid.h, c.grid.x_max + cells * c.grid.h, c.grid.h,
                    c.grid.dt);
}

RunResult run(const SimConfig& config, TrajectoryObserver* observer) {
  validate(config);
  const Grid g = working_grid(config);
  const std::vector<double> xs = g.nodes();
  const PotentialPair pp = sample(config.model, xs);
  const IndexRange win = config.boundary == BoundaryMode::reference
                             ? window(g, config.grid.x_min, config.grid.x_max)
                             : IndexRange{0, g.n};
  const double x_hi = xs[win.end - 1];
  const Execution exec = config.execution;

  DataSpec data = config.data;
  data.strict_support = false;  // already checked against the requested domain
  FieldState s = build_initial_data(data, xs, pp.V);

  Stepper stepper(pp, g, config.boundary, config.splitting, exec, config.closure);

  std::vector<FluxProbe> probes;
  probes.reserve(config.probes.size());
  for (double R : config.probes) {
    probes.emplace_back(pp, R);
  }

  const bool zone = uses_zone_normalization(config);
  RunResult out;
  out.gain_denominator =
      zone ? 0.5 * energy_positive_zone(s, pp, config.zone_start, x_hi, exec)
           : energy_total(s, pp, win, exec).total();
  out.gains.resize(probes.size());
  for (std::size_t k = 0; k < probes.size(); ++k) {
    out.gains[k].probe = probes[k].position();
  }

  const auto steps = static_cast<std::size_t>(std::ceil(config.final_time / g.dt - 1e-9));
  out.times.reserve(steps + 1);
  out.energy.reserve(steps + 1);

  auto sample_diagnostics = [&](std::size_t k) {
    out.times.push_back(s.t);
    out.energy.push_back(energy_total(s, pp, win, exec).total());
    if (zone) {
      out.zone_energy.push_back(energy_positive_zone(s, pp, config.zone_start, x_hi, exec));
    }
    for (std::size_t p = 0; p < probes.size(); ++p) {
      probes[p].record(s, g.dt);
      out.gains[p].times.push_back(s.t);
      out.gains[p].flux.push_back(probes[p].accumulated());
    }
    if (observer != nullptr && config.snapshot_stride > 0 && k % config.snapshot_stride == 0) {
      Snapshot snap;
      snap.step = k;
      snap.t = s.t;
      snap.x = std::span<const double>(xs).subspan(win.begin, win.size());
      snap.u = std::span<const Complex>(s.u).subspan(win.begin, win.size());
      observer->on_snapshot(snap);
    }
  };

  sample_diagnostics(0);
  for (std::size_t k = 1; k <= steps; ++k) {
    stepper.step(s);
    s.t = static_cast<double>(k) * g.dt;
    if (!s.all_finite()) {
      throw NonFiniteStateError(k, "non-finite field value");
    }
    sample_diagnostics(k);
  }
  out.steps = steps;

  if (out.gain_denominator != 0.0) {
    for (GainSeries& gs : out.gains) {
      gs.gain.resize(gs.flux.size());
      for (std::size_t k = 0; k < gs.flux.size(); ++k) {
        gs.gain[k] = gs.flux[k] / out.gain_denominator;
      }
    }
  }

  out.x.assign(xs.begin() + win.begin, xs.begin() + win.end);
  out.final_state = FieldState(win.size(), s.t);
  std::copy(s.u.begin() + win.begin, s.u.begin() + win.end, out.final_state.u.begin());
  std::copy(s.v.begin() + win.begin, s.v.begin() + win.end, out.final_state.v.begin());
  return out;
}

}  // namespace superrad
