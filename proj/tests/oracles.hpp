#ifndef MZENT_TESTS_ORACLES_HPP
#define MZENT_TESTS_ORACLES_HPP

// Test-only reference computations. None of these call into the library's
// numerical paths; they are series sums and textbook closed forms used to
// freeze or cross-check expected values.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

namespace oracle {

/// -sum p_k ln p_k for the geometric distribution of mean n.
inline double geometric_entropy_series(double n) {
  const double q = n / (1.0 + n);
  double p = 1.0 / (1.0 + n);
  double s = 0.0;
  for (int k = 0; k < 200000 && p > 1e-300; ++k) {
    s -= p * std::log(p);
    p *= q;
  }
  return s;
}

/// Moment sum_k k^m p_k of the photon distribution of a twin beam with squeezing r.
inline double twin_beam_moment(double r, int power) {
  const double t2 = std::tanh(r) * std::tanh(r);
  double p = 1.0 / (std::cosh(r) * std::cosh(r));
  double acc = 0.0;
  for (int k = 0; k < 100000 && (k < 10 || p > 1e-300); ++k) {
    acc += std::pow(static_cast<double>(k), power) * p;
    p *= t2;
  }
  return acc;
}

/// <n|alpha> for a coherent state.
inline std::complex<double> coherent_amplitude(std::complex<double> alpha, int n) {
  std::complex<double> amp = std::exp(-0.5 * std::norm(alpha));
  for (int k = 1; k <= n; ++k) amp *= alpha / std::sqrt(static_cast<double>(k));
  return amp;
}

/// <n|S(r)|0> for S(r) = exp[(r/2)(a^dag^2 - a^2)].
inline double squeezed_vacuum_amplitude(double r, int n) {
  if (n % 2 != 0) return 0.0;
  const int k = n / 2;
  // sqrt((2k)!) / (2^k k!) built incrementally
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c *= std::sqrt((2.0 * j - 1.0) * (2.0 * j)) / (2.0 * j);
  return std::pow(std::tanh(r), k) * c / std::sqrt(std::cosh(r));
}

/// <n|D(alpha) S(r)|0> from the Hermite closed form, via the normalized
/// recurrence h_{n+1} = (2 s z h_n - 2 sqrt(n) s^2 h_{n-1}) / sqrt(n+1),
/// h_n = s^n H_n(z) / sqrt(n!), s = sqrt(-tanh(r)/2), z = g / sqrt(-sinh 2r).
inline std::complex<double> displaced_squeezed_amplitude(std::complex<double> alpha, double r, int n) {
  using C = std::complex<double>;
  const C pre = std::exp(-0.5 * std::norm(alpha) + 0.5 * std::conj(alpha) * std::conj(alpha) * std::tanh(r)) /
                std::sqrt(std::cosh(r));
  if (r == 0.0) return coherent_amplitude(alpha, n);
  const C s = std::sqrt(C(-0.5 * std::tanh(r)));
  const C g = alpha * std::cosh(r) - std::conj(alpha) * std::sinh(r);
  const C z = g / std::sqrt(C(-std::sinh(2.0 * r)));
  C prev = 0.0;
  C h = 1.0;
  for (int k = 0; k < n; ++k) {
    const C next = (2.0 * s * z * h - 2.0 * std::sqrt(static_cast<double>(k)) * s * s * prev) /
                   std::sqrt(k + 1.0);
    prev = h;
    h = next;
  }
  return pre * h;
}

/// Symplectic eigenvalues as |eigenvalues| of i Omega cov, ascending.
inline std::array<double, 2> symplectic_spectrum(const Eigen::Matrix4d& cov) {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> solver(omega * cov);
  std::array<double, 4> mags{};
  for (int i = 0; i < 4; ++i) mags[static_cast<std::size_t>(i)] = std::abs(solver.eigenvalues()(i));
  std::sort(mags.begin(), mags.end());
  return {0.5 * (mags[0] + mags[1]), 0.5 * (mags[2] + mags[3])};
}

}  // namespace oracle

#endif  // MZENT_TESTS_ORACLES_HPP
