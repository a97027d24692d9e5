#include "superrad/tridiagonal.hpp"

#include <algorithm>
#include <cmath>

#include "superrad/errors.hpp"

namespace superrad {

void TridiagonalMatrix::multiply(std::span<const Complex> x, std::span<Complex> y) const {
  const std::size_t n = size();
  if (n == 1) {
    y[0] = diag[0] * x[0];
    return;
  }
  y[0] = diag[0] * x[0] + upper[0] * x[1];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    y[j] = lower[j] * x[j - 1] + diag[j] * x[j] + upper[j] * x[j + 1];
  }
  y[n - 1] = lower[n - 1] * x[n - 2] + diag[n - 1] * x[n - 1];
}

ThomasSolver::ThomasSolver(const TridiagonalMatrix& m)
    : lower_(m.lower), inv_pivot_(m.size()), ratio_(m.size()) {
  const std::size_t n = m.size();
  Complex previous_ratio{};
  for (std::size_t j = 0; j < n; ++j) {
    const Complex pivot = j == 0 ? m.diag[0] : m.diag[j] - m.lower[j] * previous_ratio;
    if (!(std::abs(pivot) > 1e-300) || !std::isfinite(std::abs(pivot))) {
      throw SingularSystemError("tridiagonal solve: vanishing pivot at row " + std::to_string(j));
    }
    inv_pivot_[j] = 1.0 / pivot;
    ratio_[j] = j + 1 < n ? m.upper[j] * inv_pivot_[j] : Complex{};
    previous_ratio = ratio_[j];
  }
}

void ThomasSolver::solve(std::span<const Complex> rhs, std::span<Complex> x) const {
  const std::size_t n = size();
  if (n == 0) {
    return;
  }
  x[0] = rhs[0] * inv_pivot_[0];
  for (std::size_t j = 1; j < n; ++j) {
    x[j] = (rhs[j] - lower_[j] * x[j - 1]) * inv_pivot_[j];
  }
  for (std::size_t j = n - 1; j-- > 0;) {
    x[j] -= ratio_[j] * x[j + 1];
  }
}

namespace {

using Mat2 = std::array<Complex, 4>;
using Vec2 = std::array<Complex, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Vec2 mul(const Mat2& a, const Vec2& v) {
  return {a[0] * v[0] + a[1] * v[1], a[2] * v[0] + a[3] * v[1]};
}

Mat2 sub(const Mat2& a, const Mat2& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Mat2 inverse(const Mat2& a) {
  const Complex det = a[0] * a[3] - a[1] * a[2];
  if (!(std::abs(det) > 1e-300)) {
    throw SingularSystemError("partitioned solve: singular interface block");
  }
  const Complex inv = 1.0 / det;
  return {a[3] * inv, -a[1] * inv, -a[2] * inv, a[0] * inv};
}

TridiagonalMatrix slice(const TridiagonalMatrix& m, std::size_t begin, std::size_t end) {
  TridiagonalMatrix s(end - begin);
  std::copy(m.lower.begin() + begin, m.lower.begin() + end, s.lower.begin());
  std::copy(m.diag.begin() + begin, m.diag.begin() + end, s.diag.begin());
  std::copy(m.upper.begin() + begin, m.upper.begin() + end, s.upper.begin());
  s.lower.front() = Complex{};
  s.upper.back() = Complex{};
  return s;
}

}  // namespace

std::size_t PartitionedSolver::default_partitions(std::size_t n) noexcept {
  if (n < 4096) {
    return 1;
  }
  return std::min<std::size_t>(64, n / 1024);
}

PartitionedSolver::PartitionedSolver(const TridiagonalMatrix& m, std::size_t partitions)
    : n_(m.size()) {
  const std::size_t count = std::clamp<std::size_t>(partitions, 1, std::max<std::size_t>(1, n_ / 2));
  blocks_.resize(count);
  const std::size_t base = n_ / count;
  const std::size_t extra = n_ % count;
  std::size_t begin = 0;
  for (std::size_t k = 0; k < count; ++k) {
    Block& b = blocks_[k];
    b.begin = begin;
    b.end = begin + base + (k < extra ? 1 : 0);
    begin = b.end;

    const std::size_t len = b.end - b.begin;
    b.local = ThomasSolver(slice(m, b.begin, b.end));
    b.left_spike.assign(len, Complex{});
    b.right_spike.assign(len, Complex{});
    if (k > 0) {
      std::vector<Complex> e(len);
      e.front() = m.lower[b.begin];
      b.local.solve(e, b.left_spike);
    }
    if (k + 1 < count) {
      std::vector<Complex> e(len);
      e.back() = m.upper[b.end - 1];
      b.local.solve(e, b.right_spike);
    }
  }

  // Interface i couples (x[end_i - 1], x[begin_{i+1}]).
  const std::size_t ni = count - 1;
  iface_lower_.resize(ni);
  iface_inv_pivot_.resize(ni);
  iface_ratio_.resize(ni);
  iface_scratch_.resize(ni);
  for (std::size_t i = 0; i < ni; ++i) {
    const Block& left = blocks_[i];
    const Block& right = blocks_[i + 1];
    const Mat2 lower{left.left_spike.back(), Complex{}, Complex{}, Complex{}};
    const Mat2 diag{Complex{1.0}, left.right_spike.back(), right.left_spike.front(), Complex{1.0}};
    const Mat2 upper{Complex{}, Complex{}, Complex{}, right.right_spike.front()};
    const Mat2 pivot = i == 0 ? diag : sub(diag, mul(lower, iface_ratio_[i - 1]));
    iface_lower_[i] = lower;
    iface_inv_pivot_[i] = inverse(pivot);
    iface_ratio_[i] = mul(iface_inv_pivot_[i], upper);
  }
}

void PartitionedSolver::solve(std::span<const Complex> rhs, std::span<Complex> x) {
  const auto count = static_cast<std::ptrdiff_t>(blocks_.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const Block& b = blocks_[k];
    const std::size_t len = b.end - b.begin;
    b.local.solve(rhs.subspan(b.begin, len), x.subspan(b.begin, len));
  }
  if (count == 1) {
    return;
  }

  const std::size_t ni = iface_scratch_.size();
  for (std::size_t i = 0; i < ni; ++i) {
    Vec2 r{x[blocks_[i].end - 1], x[blocks_[i + 1].begin]};
    if (i > 0) {
      const Vec2 carried = mul(iface_lower_[i], iface_scratch_[i - 1]);
      r[0] -= carried[0];
      r[1] -= carried[1];
    }
    iface_scratch_[i] = mul(iface_inv_pivot_[i], r);
  }
  for (std::size_t i = ni - 1; i-- > 0;) {
    const Vec2 next = mul(iface_ratio_[i], iface_scratch_[i + 1]);
    iface_scratch_[i][0] -= next[0];
    iface_scratch_[i][1] -= next[1];
  }

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const Block& b = blocks_[k];
    const Complex from_left = k > 0 ? iface_scratch_[k - 1][0] : Complex{};
    const Complex from_right = k + 1 < count ? iface_scratch_[k][1] : Complex{};
    for (std::size_t j = b.begin; j < b.end; ++j) {
      const std::size_t local = j - b.begin;
      x[j] -= from_left * b.left_spike[local] + from_right * b.right_spike[local];
    }
  }
}

}  // namespace superrad
