#pragma once

// Per-step kernels of the time stepper. Every kernel has a serial reference
// in kernels::serial and an OpenMP version in kernels::parallel with the same
// signature; tests check that the two agree bit for bit.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "superrad/grid.hpp"
#include "superrad/tridiagonal.hpp"

namespace superrad {

enum class Execution { serial, parallel };

namespace kernels {

/// Reductions are summed over fixed chunks so that the result is independent
/// of the thread count (and equal between serial and parallel).
inline constexpr std::size_t kReductionChunk = 4096;

namespace serial {

/// out = R u + w .* v
void explicit_rhs(const TridiagonalMatrix& R, std::span<const double> w,
                  std::span<const Complex> u, std::span<const Complex> v, std::span<Complex> out);

/// v <- (2/dt) (a .* u_new - d .* u_old) - v
void velocity_update(std::span<const Complex> a, std::span<const Complex> d, double dt,
                     std::span<const Complex> u_new, std::span<const Complex> u_old,
                     std::span<Complex> v);

/// v <- v - tau P .* u
void potential_kick(std::span<const double> P, double tau, std::span<const Complex> u,
                    std::span<Complex> v);

template <class F>
double chunked_sum(std::size_t begin, std::size_t end, F&& term) {
  double total = 0.0;
  for (std::size_t c = begin; c < end; c += kReductionChunk) {
    const std::size_t stop = std::min(end, c + kReductionChunk);
    double partial = 0.0;
    for (std::size_t j = c; j < stop; ++j) {
      partial += term(j);
    }
    total += partial;
  }
  return total;
}

}  // namespace serial

namespace parallel {

void explicit_rhs(const TridiagonalMatrix& R, std::span<const double> w,
                  std::span<const Complex> u, std::span<const Complex> v, std::span<Complex> out);

void velocity_update(std::span<const Complex> a, std::span<const Complex> d, double dt,
                     std::span<const Complex> u_new, std::span<const Complex> u_old,
                     std::span<Complex> v);

void potential_kick(std::span<const double> P, double tau, std::span<const Complex> u,
                    std::span<Complex> v);

template <class F>
double chunked_sum(std::size_t begin, std::size_t end, F&& term) {
  if (end <= begin) {
    return 0.0;
  }
  const std::size_t chunks = (end - begin + kReductionChunk - 1) / kReductionChunk;
  std::vector<double> partials(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    const std::size_t start = begin + static_cast<std::size_t>(c) * kReductionChunk;
    const std::size_t stop = std::min(end, start + kReductionChunk);
    double partial = 0.0;
    for (std::size_t j = start; j < stop; ++j) {
      partial += term(j);
    }
    partials[static_cast<std::size_t>(c)] = partial;
  }
  double total = 0.0;
  for (double p : partials) {
    total += p;
  }
  return total;
}

}  // namespace parallel

template <class F>
double chunked_sum(Execution exec, std::size_t begin, std::size_t end, F&& term) {
  return exec == Execution::parallel ? parallel::chunked_sum(begin, end, term)
                                     : serial::chunked_sum(begin, end, term);
}

}  // namespace kernels
}  // namespace superrad
