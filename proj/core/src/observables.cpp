#include "mzent/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "mzent/errors.hpp"
#include "mzent/golden_section.hpp"

namespace mzent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

double second_moment(const TwoModeGaussianState& s, int i, int j) {
  return s.cov(i, j) + s.mean(i) * s.mean(j);
}

// <(x^2 + y^2)(x'^2 + y'^2)> for quadrature offsets p, q.
double intensity_product(const TwoModeGaussianState& s, int p, int q) {
  double acc = 0.0;
  for (int i = p; i < p + 2; ++i) {
    for (int j = q; j < q + 2; ++j) acc += gaussian_moment(s, i, i, j, j);
  }
  return acc;
}

}  // namespace

double gaussian_moment(const TwoModeGaussianState& s, int i, int j, int k, int l) {
  const auto& m = s.mean;
  const auto& c = s.cov;
  return m(i) * m(j) * m(k) * m(l)
       + c(i, j) * m(k) * m(l) + c(i, k) * m(j) * m(l) + c(i, l) * m(j) * m(k)
       + c(j, k) * m(i) * m(l) + c(j, l) * m(i) * m(k) + c(k, l) * m(i) * m(j)
       + c(i, j) * c(k, l) + c(i, k) * c(j, l) + c(i, l) * c(j, k);
}

PhotonMoments photon_moments(const TwoModeGaussianState& s) {
  const double ia = second_moment(s, 0, 0) + second_moment(s, 1, 1);
  const double ib = second_moment(s, 2, 2) + second_moment(s, 3, 3);

  PhotonMoments pm;
  pm.mean_a = ia - 0.5;
  pm.mean_b = ib - 0.5;
  pm.second_a = intensity_product(s, 0, 0) - ia;
  pm.second_b = intensity_product(s, 2, 2) - ib;
  pm.cross = intensity_product(s, 0, 2) - 0.5 * ia - 0.5 * ib + 0.25;
  return pm;
}

double K_gaussian(const InputSpec& spec_a, const InputSpec& spec_b, double phi) {
  const auto pm = photon_moments(gaussian::output_state(spec_a, spec_b, phi));
  return std::max(pm.cross, 0.0);
}

double H_gaussian(const InputSpec& spec_a, const InputSpec& spec_b, double phi) {
  const auto pm = photon_moments(gaussian::output_state(spec_a, spec_b, phi));
  return std::max(pm.second_a + pm.second_b - 2.0 * pm.cross, 0.0);
}

void PhiScan::validate() const {
  if (grid_points < 16) {
    std::ostringstream os;
    os << "phi scan needs at least 16 grid points, got " << grid_points;
    throw DomainError(os.str());
  }
  if (!(refine_tol > 0.0)) throw DomainError("phi scan refinement tolerance must be > 0");
}

VisibilityResult visibility(const std::function<double(double)>& f, const PhiScan& scan, Engine engine) {
  scan.validate();
  const int n = scan.grid_points;
  const double step = kTwoPi / n;
  auto eval = [&](double phi) { return f(wrap_phase(phi)); };

  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = eval(i * step);

  // index-ordered reductions: the first extremum wins ties
  int i_max = 0;
  int i_min = 0;
  for (int i = 1; i < n; ++i) {
    if (values[i] > values[i_max]) i_max = i;
    if (values[i] < values[i_min]) i_min = i;
  }

  VisibilityResult res;
  res.engine = engine;
  res.phi_max = i_max * step;
  res.f_max = values[i_max];
  res.phi_min = i_min * step;
  res.f_min = values[i_min];

  const double center_max = i_max * step;
  const auto up = golden_section_minimize([&](double x) { return -eval(x); }, center_max - step,
                                          center_max + step, scan.refine_tol);
  if (-up.fx > res.f_max) {
    res.f_max = -up.fx;
    res.phi_max = wrap_phase(up.x);
  }
  const double center_min = i_min * step;
  const auto down = golden_section_minimize(eval, center_min - step, center_min + step, scan.refine_tol);
  if (down.fx < res.f_min) {
    res.f_min = down.fx;
    res.phi_min = wrap_phase(down.x);
  }

  res.f_min = std::max(res.f_min, 0.0);
  res.f_max = std::max(res.f_max, res.f_min);
  const double sum = res.f_max + res.f_min;
  if (sum > 0.0) {
    res.v = (res.f_max - res.f_min) / sum;
  } else {
    res.v = 0.0;
    res.zero_signal = true;
  }
  return res;
}

VisibilityResult visibility_K(const InputSpec& spec_a, const InputSpec& spec_b, const PhiScan& scan) {
  return visibility([&](double phi) { return K_gaussian(spec_a, spec_b, phi); }, scan, Engine::gaussian);
}

VisibilityResult visibility_H(const InputSpec& spec_a, const InputSpec& spec_b, const PhiScan& scan) {
  return visibility([&](double phi) { return H_gaussian(spec_a, spec_b, phi); }, scan, Engine::gaussian);
}

double vh_asymptotic(double mean_photons, double gamma) {
  if (!(mean_photons > 1.0)) throw DomainError("asymptotic visibility needs N > 1");
  if (!(gamma > 0.0) || gamma > 1.0) throw DomainError("asymptotic visibility needs 0 < gamma <= 1");
  return 1.0 + (std::log(gamma) / 5.0) / std::log(mean_photons);
}

}  // namespace mzent
