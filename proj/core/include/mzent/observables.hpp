#ifndef MZENT_OBSERVABLES_HPP
#define MZENT_OBSERVABLES_HPP

#include <functional>

#include "mzent/gaussian.hpp"
#include "mzent/input_spec.hpp"

namespace mzent {

enum class Engine { gaussian, fock };

/// Photon-number moments of a two-mode Gaussian state, evaluated by
/// Isserlis/Wick expansion of quadrature moments. n = x^2 + y^2 - 1/2 per mode
/// and n^2 has Weyl symbol (x^2 + y^2)^2 - (x^2 + y^2).
struct PhotonMoments {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double second_a = 0.0;  // <n_a^2>
  double second_b = 0.0;  // <n_b^2>
  double cross = 0.0;     // <n_a n_b>
};

/// E[z_i z_j z_k z_l] of the Wigner distribution (symmetric-ordered moment).
double gaussian_moment(const TwoModeGaussianState& state, int i, int j, int k, int l);

PhotonMoments photon_moments(const TwoModeGaussianState& state);

/// Coincidence rate <n_a n_b> at the interferometer output.
double K_gaussian(const InputSpec& spec_a, const InputSpec& spec_b, double phi);

/// Squared difference photocurrent <(n_a - n_b)^2> at the output.
double H_gaussian(const InputSpec& spec_a, const InputSpec& spec_b, double phi);

struct PhiScan {
  int grid_points = 1024;
  double refine_tol = 1e-6;

  /// Throws DomainError unless grid_points >= 16 and refine_tol > 0.
  void validate() const;
};

struct VisibilityResult {
  double v = 0.0;
  double phi_max = 0.0;
  double phi_min = 0.0;
  double f_max = 0.0;
  double f_min = 0.0;
  Engine engine = Engine::gaussian;
  bool zero_signal = false;  // f_max + f_min == 0; v is reported as 0
};

/// Fringe visibility (f_max - f_min) / (f_max + f_min) of a phase-dependent
/// observable over one period [0, 2 pi).
///
/// f is sampled on a uniform grid; the global maximum and minimum (lowest index
/// wins ties) are bracketed by their grid neighbours and refined by golden
/// section to scan.refine_tol. Phases handed to f are wrapped into [0, 2 pi).
VisibilityResult visibility(const std::function<double(double)>& f, const PhiScan& scan = {},
                            Engine engine = Engine::gaussian);

VisibilityResult visibility_K(const InputSpec& spec_a, const InputSpec& spec_b, const PhiScan& scan = {});
VisibilityResult visibility_H(const InputSpec& spec_a, const InputSpec& spec_b, const PhiScan& scan = {});

/// 1 + (ln(gamma) / 5) / ln(N): large-N trend of V_H. Requires N > 1, 0 < gamma <= 1.
double vh_asymptotic(double mean_photons, double gamma);

}  // namespace mzent

#endif  // MZENT_OBSERVABLES_HPP
