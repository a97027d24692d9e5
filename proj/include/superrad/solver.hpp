#pragma once

// Semi-implicit midpoint (Crank-Nicolson) integration of
//     d_t u = iV u + v,   d_t v = (d_x^2 - P) u + iV v,
// with u = phi and v = (d_t - iV) phi. Eliminating v^{n+1} from the 2n x 2n
// block system leaves one complex tridiagonal system in u^{n+1}:
//     (A^2 - dt^2/4 (D2 - P)) U' = (A D + dt^2/4 (D2 - P)) U + dt V,
//     V' = (2/dt)(A U' - D U) - V,
// with A = 1 - iV dt/2, D = 1 + iV dt/2 and D2 the 3-point Laplacian.

#include <cstddef>
#include <vector>

#include "superrad/diagnostics.hpp"
#include "superrad/grid.hpp"
#include "superrad/initial_data.hpp"
#include "superrad/kernels.hpp"
#include "superrad/potentials.hpp"
#include "superrad/tridiagonal.hpp"

namespace superrad {

enum class BoundaryMode {
  transparent,  ///< one-way closures (d_t - iV) phi +/- d_x phi = 0
  dirichlet,    ///< phi = 0 at both ends
  reference,    ///< run() enlarges the domain, then restricts to the requested one
};

/// Closure used by the transparent mode.
///  one_way:      (d_t - iV) phi +/- d_x phi = 0, exact for P = 0.
///  klein_gordon: (d_t - iV)[(d_t - iV) phi +/- d_x phi] + (P/2) phi = 0, the
///                next term of the one-way expansion for P != 0. Carried by an
///                auxiliary ODE per boundary node so the system stays tridiagonal.
enum class BoundaryClosure { one_way, klein_gordon };

/// When to split off the P-term (Strang): automatic splits only for
/// transparent boundaries with P != 0.
enum class Splitting { automatic, always, never };

class Stepper {
 public:
  Stepper(const PotentialPair& pp, const Grid& grid, BoundaryMode bc,
          Splitting splitting = Splitting::automatic, Execution exec = Execution::parallel,
          BoundaryClosure closure = BoundaryClosure::one_way);

  bool splits() const noexcept { return splits_; }
  const Grid& grid() const noexcept { return grid_; }
  BoundaryMode boundary() const noexcept { return bc_; }

  /// One step of the block system. When the stepper splits, its operator is
  /// the homogeneous one (P removed from C); otherwise P is included.
  void step_homogeneous(FieldState& state);

  /// Strang step: half P-kick, full homogeneous step, half P-kick. The P-only
  /// subflow (u' = 0, v' = -P u) is advanced by the trapezoidal rule.
  void step_split(FieldState& state);

  /// step_split when splitting, step_homogeneous otherwise.
  void step(FieldState& state);

  /// Implicit and explicit operators, exposed for tests.
  const TridiagonalMatrix& implicit_matrix() const noexcept { return implicit_; }
  const TridiagonalMatrix& explicit_matrix() const noexcept { return explicit_; }

 private:
  void apply_boundary_velocity(FieldState& state) const;
  void half_kick(FieldState& state) const;

  Grid grid_;
  BoundaryMode bc_;
  Execution exec_;
  bool splits_;
  // Auxiliary residuals of the one-way equation at the left/right nodes and
  // their P-coupling dt P/4 (zero for the one_way closure).
  Complex aux_left_{};
  Complex aux_right_{};
  double aux_gain_left_ = 0.0;
  double aux_gain_right_ = 0.0;
  std::vector<double> P_;
  std::vector<Complex> a_;  // 1 - iV dt/2
  std::vector<Complex> d_;  // 1 + iV dt/2
  std::vector<double> w_;   // weight of v in the explicit side (dt, 0 on boundary rows)
  TridiagonalMatrix implicit_;
  TridiagonalMatrix explicit_;
  ThomasSolver thomas_;
  PartitionedSolver partitioned_;
  std::vector<Complex> rhs_;
  std::vector<Complex> u_next_;
};

/// How the flux gains are normalised.
enum class GainNormalization {
  automatic,  ///< zone for toy/uniform models, total for Reissner-Nordstrom
  zone,       ///< 1/2 int_{x >= zone_start} (|phi_t|^2 + |phi_x|^2 + P|phi|^2) at t = 0
  total,      ///< conserved energy of the data over the whole domain
};

struct SimConfig {
  PotentialModel model;
  Grid grid;
  double final_time = 0.0;
  BoundaryMode boundary = BoundaryMode::transparent;
  DataSpec data;
  std::vector<double> probes;
  /// Left edge of the positive-energy zone used by the toy diagnostics.
  double zone_start = 0.0;
  GainNormalization normalization = GainNormalization::automatic;
  Splitting splitting = Splitting::automatic;
  BoundaryClosure closure = BoundaryClosure::one_way;
  Execution execution = Execution::parallel;
  /// Snapshot cadence in steps; 0 disables snapshots.
  std::size_t snapshot_stride = 50;
};

/// Throws ValidationError naming the offending field.
void validate(const SimConfig& config);

/// Field at one snapshot, restricted to the requested domain.
struct Snapshot {
  std::size_t step = 0;
  double t = 0.0;
  std::span<const double> x;
  std::span<const Complex> u;
};

class TrajectoryObserver {
 public:
  virtual ~TrajectoryObserver() = default;
  virtual void on_snapshot(const Snapshot& snapshot) = 0;
};

struct RunResult {
  std::vector<double> times;
  /// Conserved energy over the requested domain at each time.
  std::vector<double> energy;
  /// E+ over x >= zone_start (no 1/2) at each time.
  std::vector<double> zone_energy;
  std::vector<GainSeries> gains;  ///< one per probe, in config order
  double gain_denominator = 0.0;
  std::size_t steps = 0;
  std::vector<double> x;  ///< requested-domain nodes
  FieldState final_state;  ///< restricted to the requested domain
};

/// Integrates from t = 0 to final_time. Fluxes and energies are sampled every
/// step. Deterministic: identical configs give bit-identical results.
/// Throws NonFiniteStateError on NaN/Inf with the offending step index.
RunResult run(const SimConfig& config, TrajectoryObserver* observer = nullptr);

/// The grid actually integrated for `config` (enlarged in reference mode).
Grid working_grid(const SimConfig& config);

}  // namespace superrad
