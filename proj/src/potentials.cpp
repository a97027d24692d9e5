#include "superrad/potentials.hpp"

#include <cmath>
#include <numbers>
#include <type_traits>

#include "superrad/errors.hpp"

namespace superrad {

Coefficients ToyModel::at(double x) const {
  const double alpha = params.alpha;
  const double L = params.width;
  double V = 0.0;
  if (x < 0.0) {
    if (L == 0.0 || x <= -L) {
      V = alpha;
    } else {
      V = 0.5 * alpha * (1.0 - std::sin(std::numbers::pi / L * (x + 0.5 * L)));
    }
  }
  return {V, params.beta * (1.0 - V / alpha)};
}

Coefficients RnModel::at(const RadialSample& s) const {
  const double r = s.r;
  const double F = metric_f(black_hole, s);
  const double dF = metric_f_prime(black_hole, s);
  const double l = field.angular_momentum;
  const double m = field.mass;
  const double V = field.charge * black_hole.charge() / r;
  const double P = F * (l * (l + 1.0) / (r * r) + m * m + dF / r);
  return {V, P};
}

Coefficients RnModel::at(double x) const { return at(radius_from_tortoise(black_hole, x)); }

double RnModel::horizon_potential() const noexcept {
  return field.charge * black_hole.charge() / black_hole.r_plus();
}

Provenance provenance(const PotentialModel& model) noexcept {
  switch (model.index()) {
    case 0:
      return Provenance::toy;
    case 1:
      return Provenance::uniform;
    default:
      return Provenance::reissner_nordstrom;
  }
}

Coefficients evaluate(const PotentialModel& model, double x) {
  return std::visit([x](const auto& m) { return m.at(x); }, model);
}

bool PotentialPair::has_mass_term() const noexcept {
  for (double p : P) {
    if (p != 0.0) {
      return true;
    }
  }
  return false;
}

void validate(const ToyParams& p) {
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) {
    throw ValidationError("toy.alpha", "must be positive");
  }
  if (!(p.beta >= 0.0) || !std::isfinite(p.beta)) {
    throw ValidationError("toy.beta", "must be non-negative");
  }
  if (!(p.width >= 0.0) || !std::isfinite(p.width)) {
    throw ValidationError("toy.width", "must be non-negative");
  }
}

void validate(const FieldParams& p) {
  if (!std::isfinite(p.charge)) {
    throw ValidationError("field.charge", "must be finite");
  }
  if (!(p.mass >= 0.0) || !std::isfinite(p.mass)) {
    throw ValidationError("field.mass", "must be non-negative");
  }
  if (p.angular_momentum < 0) {
    throw ValidationError("field.angular_momentum", "must be a non-negative integer");
  }
}

namespace {

void require_increasing(std::span<const double> grid) {
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (!(grid[j] > grid[j - 1])) {
      throw ValidationError("grid", "sample points must be strictly increasing");
    }
  }
}

template <class Model>
PotentialPair sample_simple(const Model& model, std::span<const double> grid) {
  require_increasing(grid);
  PotentialPair pp;
  pp.x.assign(grid.begin(), grid.end());
  pp.V.resize(grid.size());
  pp.P.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Coefficients c = model.at(grid[j]);
    pp.V[j] = c.V;
    pp.P[j] = c.P;
  }
  pp.model = model;
  return pp;
}

}  // namespace

PotentialPair toy_potentials(const ToyParams& params, std::span<const double> grid) {
  validate(params);
  return sample_simple(ToyModel{params}, grid);
}

PotentialPair uniform_potentials(double V, double P, std::span<const double> grid) {
  return sample_simple(UniformModel{V, P}, grid);
}

PotentialPair rn_potentials(const BlackHole& bh, const FieldParams& field,
                            std::span<const double> grid) {
  validate(field);
  require_increasing(grid);
  const RnModel model{bh, field};
  const std::size_t n = grid.size();
  PotentialPair pp;
  pp.x.assign(grid.begin(), grid.end());
  pp.V.resize(n);
  pp.P.resize(n);
  pp.f_over_r.resize(n);

  // Each node is an independent Newton solve.
  bool failed = false;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
    try {
      const RadialSample s = radius_from_tortoise(bh, grid[j]);
      const Coefficients c = model.at(s);
      pp.V[j] = c.V;
      pp.P[j] = c.P;
      pp.f_over_r[j] = metric_f(bh, s) / s.r;
    } catch (const ConvergenceError&) {
#pragma omp atomic write
      failed = true;
    }
  }
  if (failed) {
    throw ConvergenceError("rn_potentials: tortoise inversion failed on the grid");
  }
  pp.model = model;
  return pp;
}

PotentialPair sample(const PotentialModel& model, std::span<const double> grid) {
  return std::visit(
      [grid](const auto& m) -> PotentialPair {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ToyModel>) {
          return toy_potentials(m.params, grid);
        } else if constexpr (std::is_same_v<M, UniformModel>) {
          return uniform_potentials(m.V, m.P, grid);
        } else {
          return rn_potentials(m.black_hole, m.field, grid);
        }
      },
      model);
}

std::vector<double> effective_ergosphere_boundary(const PotentialPair& pp) {
  std::vector<double> roots;
  auto inside = [&](double x) { return evaluate(pp.model, x).total() < 0.0; };
  for (std::size_t j = 0; j + 1 < pp.size(); ++j) {
    const bool left = pp.total(j) < 0.0;
    if (left == (pp.total(j + 1) < 0.0)) {
      continue;
    }
    double lo = pp.x[j];
    double hi = pp.x[j + 1];
    for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (inside(mid) == left) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

bool no_superradiance_threshold(const BlackHole& bh, const FieldParams& field) {
  return field.mass >= std::abs(field.charge * bh.charge()) / bh.r_plus();
}

}  // namespace superrad
