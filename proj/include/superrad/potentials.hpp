#pragma once

// Coefficient profiles V(x), P(x) of
//     (d_t - iV)^2 phi - d_x^2 phi + P phi = 0
// for the smoothed-step toy model, constant coefficients, and the
// Reissner-Nordstrom reduction (x = r*).

#include <span>
#include <variant>
#include <vector>

#include "superrad/geometry.hpp"

namespace superrad {

/// Smoothed step: V = alpha left of -L, 0 right of 0; P = beta (1 - V/alpha).
struct ToyParams {
  double alpha = 1.0;
  double beta = 0.0;
  double width = 0.0;  ///< L; 0 gives exact (right-continuous) steps.
};

/// Charge, mass and angular momentum of the scalar field.
struct FieldParams {
  double charge = 0.0;
  double mass = 0.0;
  int angular_momentum = 0;
};

/// V and P at one point.
struct Coefficients {
  double V = 0.0;
  double P = 0.0;

  /// P - V^2: negative inside the effective ergosphere.
  double total() const noexcept { return P - V * V; }
};

struct ToyModel {
  ToyParams params;
  Coefficients at(double x) const;
};

/// Spatially constant V and P (boundary-condition test cases).
struct UniformModel {
  double V = 0.0;
  double P = 0.0;
  Coefficients at(double) const { return {V, P}; }
};

struct RnModel {
  BlackHole black_hole;
  FieldParams field;
  /// V = qQ/r, P = F (l(l+1)/r^2 + m^2 + F'/r) at r = r(x).
  Coefficients at(double x) const;
  /// Same, from an already inverted radius.
  Coefficients at(const RadialSample& s) const;
  /// qQ/r+: the limit of V at the horizon.
  double horizon_potential() const noexcept;
};

using PotentialModel = std::variant<ToyModel, UniformModel, RnModel>;

enum class Provenance { toy, uniform, reissner_nordstrom };

Provenance provenance(const PotentialModel& model) noexcept;
Coefficients evaluate(const PotentialModel& model, double x);

/// Coefficients sampled at grid nodes, plus the model they came from.
struct PotentialPair {
  std::vector<double> x;
  std::vector<double> V;
  std::vector<double> P;
  /// F/r per node for the geometric flux correction; empty unless RN.
  std::vector<double> f_over_r;
  PotentialModel model;

  std::size_t size() const noexcept { return x.size(); }
  Provenance provenance() const noexcept { return superrad::provenance(model); }
  double total(std::size_t j) const noexcept { return P[j] - V[j] * V[j]; }
  bool has_mass_term() const noexcept;
};

/// Throws ValidationError unless alpha > 0, beta >= 0, width >= 0.
void validate(const ToyParams& p);
/// Throws ValidationError unless mass >= 0 and angular_momentum >= 0.
void validate(const FieldParams& p);

PotentialPair toy_potentials(const ToyParams& params, std::span<const double> grid);
PotentialPair uniform_potentials(double V, double P, std::span<const double> grid);
PotentialPair rn_potentials(const BlackHole& bh, const FieldParams& field,
                            std::span<const double> grid);
PotentialPair sample(const PotentialModel& model, std::span<const double> grid);

/// Locations where P - V^2 changes sign between neighbouring nodes, refined
/// by bisection on the underlying model to an interval below 1e-8.
std::vector<double> effective_ergosphere_boundary(const PotentialPair& pp);

/// m >= |qQ|/r+: a positive definite conserved energy exists.
bool no_superradiance_threshold(const BlackHole& bh, const FieldParams& field);

}  // namespace superrad
