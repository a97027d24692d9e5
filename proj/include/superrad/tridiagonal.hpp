#pragma once

// Complex tridiagonal systems. The time-stepping matrix is constant for a run,
// so both solvers factor once and then only substitute per step.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "superrad/grid.hpp"

namespace superrad {

/// Row j reads lower[j] x[j-1] + diag[j] x[j] + upper[j] x[j+1].
/// lower[0] and upper[n-1] are ignored.
struct TridiagonalMatrix {
  std::vector<Complex> lower;
  std::vector<Complex> diag;
  std::vector<Complex> upper;

  TridiagonalMatrix() = default;
  explicit TridiagonalMatrix(std::size_t n) : lower(n), diag(n), upper(n) {}

  std::size_t size() const noexcept { return diag.size(); }
  /// y = M x (serial).
  void multiply(std::span<const Complex> x, std::span<Complex> y) const;
};

/// Serial Thomas algorithm; the reference path.
class ThomasSolver {
 public:
  ThomasSolver() = default;
  /// Throws SingularSystemError on a vanishing pivot.
  explicit ThomasSolver(const TridiagonalMatrix& m);

  std::size_t size() const noexcept { return inv_pivot_.size(); }
  /// Solves M x = rhs. rhs and x may alias.
  void solve(std::span<const Complex> rhs, std::span<Complex> x) const;

 private:
  std::vector<Complex> lower_;
  std::vector<Complex> inv_pivot_;
  std::vector<Complex> ratio_;  // upper / pivot
};

/// Partitioned ("spike") solver: independent Thomas solves on contiguous
/// blocks run in parallel, coupled through a 2x2 block-tridiagonal system on
/// the block interfaces. The partition count is fixed at construction, so the
/// result does not depend on the number of threads.
class PartitionedSolver {
 public:
  PartitionedSolver() = default;
  PartitionedSolver(const TridiagonalMatrix& m, std::size_t partitions);

  /// Partition count used by the stepper for an n-node system.
  static std::size_t default_partitions(std::size_t n) noexcept;

  std::size_t size() const noexcept { return n_; }
  std::size_t partitions() const noexcept { return blocks_.size(); }
  /// Solves M x = rhs. rhs and x may alias. Not reentrant (owns scratch).
  void solve(std::span<const Complex> rhs, std::span<Complex> x);

 private:
  using Mat2 = std::array<Complex, 4>;  // row-major
  using Vec2 = std::array<Complex, 2>;

  struct Block {
    std::size_t begin = 0;
    std::size_t end = 0;  // exclusive
    ThomasSolver local;
    std::vector<Complex> left_spike;   // A_k^{-1} (lower[begin] e_first)
    std::vector<Complex> right_spike;  // A_k^{-1} (upper[end-1] e_last)
  };

  std::size_t n_ = 0;
  std::vector<Block> blocks_;
  // Block Thomas factors of the interface system.
  std::vector<Mat2> iface_lower_;
  std::vector<Mat2> iface_inv_pivot_;
  std::vector<Mat2> iface_ratio_;
  std::vector<Vec2> iface_scratch_;
};

}  // namespace superrad
