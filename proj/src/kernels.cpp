#include "superrad/kernels.hpp"

namespace superrad::kernels {

namespace {

// Interior row j of R u + w v (both neighbours present).
inline Complex interior_row(const Complex* __restrict lo, const Complex* __restrict di,
                            const Complex* __restrict up, const double* __restrict w,
                            const Complex* __restrict u, const Complex* __restrict v, std::size_t j) {
  return lo[j] * u[j - 1] + di[j] * u[j] + up[j] * u[j + 1] + w[j] * v[j];
}

// The end rows have a single neighbour.
void end_rows(const TridiagonalMatrix& R, std::span<const double> w, std::span<const Complex> u,
              std::span<const Complex> v, std::span<Complex> out) {
  const std::size_t n = u.size();
  if (n == 1) {
    out[0] = R.diag[0] * u[0] + w[0] * v[0];
    return;
  }
  out[0] = R.diag[0] * u[0] + R.upper[0] * u[1] + w[0] * v[0];
  out[n - 1] = R.lower[n - 1] * u[n - 2] + R.diag[n - 1] * u[n - 1] + w[n - 1] * v[n - 1];
}

}  // namespace

namespace serial {

void explicit_rhs(const TridiagonalMatrix& R, std::span<const double> w,
                  std::span<const Complex> u, std::span<const Complex> v, std::span<Complex> out) {
  const std::size_t n = u.size();
  if (n == 0) {
    return;
  }
  end_rows(R, w, u, v, out);
  const Complex *lo = R.lower.data(), *di = R.diag.data(), *up = R.upper.data();
  const Complex *pu = u.data(), *pv = v.data();
  const double* pw = w.data();
  Complex* __restrict o = out.data();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    o[j] = interior_row(lo, di, up, pw, pu, pv, j);
  }
}

void velocity_update(std::span<const Complex> a, std::span<const Complex> d, double dt,
                     std::span<const Complex> u_new, std::span<const Complex> u_old,
                     std::span<Complex> v) {
  const double scale = 2.0 / dt;
  const Complex* __restrict pa = a.data();
  const Complex* __restrict pd = d.data();
  const Complex* __restrict un = u_new.data();
  const Complex* __restrict uo = u_old.data();
  Complex* __restrict pv = v.data();
  const std::size_t n = v.size();
  for (std::size_t j = 0; j < n; ++j) {
    pv[j] = scale * (pa[j] * un[j] - pd[j] * uo[j]) - pv[j];
  }
}

void potential_kick(std::span<const double> P, double tau, std::span<const Complex> u,
                    std::span<Complex> v) {
  const double* __restrict pp = P.data();
  const Complex* __restrict pu = u.data();
  Complex* __restrict pv = v.data();
  const std::size_t n = v.size();
  for (std::size_t j = 0; j < n; ++j) {
    pv[j] -= (tau * pp[j]) * pu[j];
  }
}

}  // namespace serial

namespace parallel {

void explicit_rhs(const TridiagonalMatrix& R, std::span<const double> w,
                  std::span<const Complex> u, std::span<const Complex> v, std::span<Complex> out) {
  const std::size_t n = u.size();
  if (n == 0) {
    return;
  }
  end_rows(R, w, u, v, out);
  const Complex *lo = R.lower.data(), *di = R.diag.data(), *up = R.upper.data();
  const Complex *pu = u.data(), *pv = v.data();
  const double* pw = w.data();
  Complex* __restrict o = out.data();
  const auto last = static_cast<std::ptrdiff_t>(n) - 1;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 1; j < last; ++j) {
    o[j] = interior_row(lo, di, up, pw, pu, pv, static_cast<std::size_t>(j));
  }
}

void velocity_update(std::span<const Complex> a, std::span<const Complex> d, double dt,
                     std::span<const Complex> u_new, std::span<const Complex> u_old,
                     std::span<Complex> v) {
  const double scale = 2.0 / dt;
  const Complex* __restrict pa = a.data();
  const Complex* __restrict pd = d.data();
  const Complex* __restrict un = u_new.data();
  const Complex* __restrict uo = u_old.data();
  Complex* __restrict pv = v.data();
  const auto n = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    pv[j] = scale * (pa[j] * un[j] - pd[j] * uo[j]) - pv[j];
  }
}

void potential_kick(std::span<const double> P, double tau, std::span<const Complex> u,
                    std::span<Complex> v) {
  const double* __restrict pp = P.data();
  const Complex* __restrict pu = u.data();
  Complex* __restrict pv = v.data();
  const auto n = static_cast<std::ptrdiff_t>(v.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    pv[j] -= (tau * pp[j]) * pu[j];
  }
}

}  // namespace parallel

}  // namespace superrad::kernels
