#ifndef MZENT_GAUSSIAN_HPP
#define MZENT_GAUSSIAN_HPP

#include <array>

#include <Eigen/Core>

#include "mzent/input_spec.hpp"

namespace mzent {

// Quadrature convention: a = x + i y, vacuum variance 1/4 per quadrature,
// mean photon number <x^2> + <y^2> - 1/2.
inline constexpr double kVacuumVariance = 0.25;

enum class Mode { a, b };

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Mean and symmetrized covariance of (x_a, y_a, x_b, y_b).
struct TwoModeGaussianState {
  Vec4 mean = Vec4::Zero();
  Mat4 cov = kVacuumVariance * Mat4::Identity();

  static TwoModeGaussianState vacuum() { return {}; }

  /// Mean photon number <n> of one mode.
  double mean_photons(Mode mode) const;

  /// Throws UnphysicalStateError if cov is not symmetric (1e-12) or a
  /// symplectic eigenvalue falls below 1/4 - 1e-10.
  void validate() const;
};

/// Single-mode marginal of a TwoModeGaussianState.
struct ReducedModeState {
  Vec2 mean = Vec2::Zero();
  Mat2 cov = kVacuumVariance * Mat2::Identity();

  double mean_photons() const;
};

/// Affine symplectic map: mean' = matrix * mean + displacement,
/// cov' = matrix * cov * matrix^T.
struct SymplecticMap {
  Mat4 matrix = Mat4::Identity();
  Vec4 displacement = Vec4::Zero();

  static SymplecticMap identity() { return {}; }
};

/// lhs * rhs applies rhs first.
SymplecticMap operator*(const SymplecticMap& lhs, const SymplecticMap& rhs);

/// Block-diagonal symplectic form, [[0, 1], [-1, 0]] per mode.
Mat4 symplectic_form();

/// True if m * Omega * m^T == Omega within tol (elementwise).
bool is_symplectic(const Mat4& m, double tol = 1e-12);

/// Williamson (symplectic) eigenvalues of a two-mode covariance, ascending.
std::array<double, 2> symplectic_eigenvalues(const Mat4& cov);

namespace gaussian {

/// Product of the two squeezed-coherent input beams.
TwoModeGaussianState make_input_state(const InputSpec& spec_a, const InputSpec& spec_b);

/// Phase rotation exp{i(theta_a n_a + theta_b n_b)}.
SymplecticMap phase_map(double theta_a, double theta_b);

/// Real beam splitter exp{angle (a^dag b - b^dag a)}; transmissivity cos^2(angle).
SymplecticMap beam_splitter_map(double angle);

/// The interferometer as a single beam splitter of angle phi/2 sandwiched by
/// quarter-turn rotations of mode b:
///   R_b(pi/2) . BS(phi/2) . R_b(-pi/2).
/// Identity at phi = 0, swap (up to phases) at phi = pi.
SymplecticMap mz_map(double phi);

/// Same interferometer written as two balanced splitters around opposite
/// internal phase shifts: BS(pi/4) . phase(+phi/2, -phi/2) . BS(-pi/4).
SymplecticMap mz_map_conjugated(double phi);

TwoModeGaussianState apply(const SymplecticMap& map, const TwoModeGaussianState& state);

/// Gaussian marginal: sub-block extraction.
ReducedModeState reduce(const TwoModeGaussianState& state, Mode mode);

/// Occupation of the entropy-equivalent thermal state, (sqrt(16 det cov) - 1) / 2.
/// Displacement is ignored. Throws UnphysicalStateError if det(cov) < 1/16 - 1e-8.
double thermal_photons(const ReducedModeState& reduced);

/// Output state of the interferometer for the given inputs and phase.
TwoModeGaussianState output_state(const InputSpec& spec_a, const InputSpec& spec_b, double phi);

/// Full breakdown of the normalized excess entropy at the output.
struct EntanglementReport {
  double epsilon = 0.0;
  double thermal_photons_a = 0.0;  // N_phi for mode a
  double thermal_photons_b = 0.0;
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  double mean_photons_a = 0.0;
  double mean_photons_b = 0.0;
};

EntanglementReport entanglement(const InputSpec& spec_a, const InputSpec& spec_b, double phi);

/// Degree of entanglement (S_a + S_b) / (S_th,a + S_th,b) of the pure output state.
/// Each S_th uses the actual mean photon number of that output mode. Zero when
/// both output modes are empty.
double epsilon(const InputSpec& spec_a, const InputSpec& spec_b, double phi);

/// (sqrt(1 + sin^2(phi) sinh^2(2r)) - 1) / 2 for equal inputs with squeezing r.
double nphi_closed_form(double r, double phi);

/// Large-N limit 1 + ln(gamma) / ln(N). Requires N > 1 and 0 < gamma <= 1.
double epsilon_asymptotic(double mean_photons, double gamma);

}  // namespace gaussian
}  // namespace mzent

#endif  // MZENT_GAUSSIAN_HPP
