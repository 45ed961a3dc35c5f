#include "mzent/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "mzent/entropy.hpp"
#include "mzent/errors.hpp"

namespace mzent {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kEigenGuard = 1e-10;
constexpr double kDetGuard = 1e-8;

int offset(Mode mode) { return mode == Mode::a ? 0 : 2; }

Mat2 rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat2 m;
  m << c, -s, s, c;
  return m;
}

double photons_from_moments(const Vec2& mean, const Mat2& cov) {
  return std::max(0.0, cov.trace() + mean.squaredNorm() - 2.0 * kVacuumVariance);
}

}  // namespace

double TwoModeGaussianState::mean_photons(Mode mode) const {
  const int k = offset(mode);
  return photons_from_moments(mean.segment<2>(k), cov.block<2, 2>(k, k));
}

void TwoModeGaussianState::validate() const {
  const double asym = (cov - cov.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) {
    std::ostringstream os;
    os << "covariance not symmetric (max asymmetry " << asym << ")";
    throw UnphysicalStateError(os.str());
  }
  const auto nu = symplectic_eigenvalues(cov);
  if (nu[0] < kVacuumVariance - kEigenGuard) {
    std::ostringstream os;
    os << "covariance violates the uncertainty principle (symplectic eigenvalue " << nu[0] << ")";
    throw UnphysicalStateError(os.str());
  }
}

double ReducedModeState::mean_photons() const { return photons_from_moments(mean, cov); }

SymplecticMap operator*(const SymplecticMap& lhs, const SymplecticMap& rhs) {
  SymplecticMap out;
  out.matrix = lhs.matrix * rhs.matrix;
  out.displacement = lhs.matrix * rhs.displacement + lhs.displacement;
  return out;
}

Mat4 symplectic_form() {
  Mat4 omega = Mat4::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  return omega;
}

bool is_symplectic(const Mat4& m, double tol) {
  const Mat4 omega = symplectic_form();
  return (m * omega * m.transpose() - omega).cwiseAbs().maxCoeff() <= tol;
}

std::array<double, 2> symplectic_eigenvalues(const Mat4& cov) {
  // M = cov^{1/2} Omega cov^{1/2} is antisymmetric with spectrum +-i nu, so
  // M^T M carries nu^2 twice each. A symmetric eigensolver keeps the
  // degenerate pure-state case accurate to machine precision.
  const Eigen::SelfAdjointEigenSolver<Mat4> root(cov);
  const Vec4 sqrt_ev = root.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Mat4 half = root.eigenvectors() * sqrt_ev.asDiagonal() * root.eigenvectors().transpose();
  const Mat4 m = half * symplectic_form() * half;
  const Eigen::SelfAdjointEigenSolver<Mat4> sq(m.transpose() * m, Eigen::EigenvaluesOnly);
  const Vec4 nu2 = sq.eigenvalues().cwiseMax(0.0);
  double lo = std::sqrt(0.5 * (nu2(0) + nu2(1)));
  double hi = std::sqrt(0.5 * (nu2(2) + nu2(3)));
  // floating-point guard band below the vacuum value
  if (lo < kVacuumVariance && lo >= kVacuumVariance - kEigenGuard) lo = kVacuumVariance;
  if (hi < kVacuumVariance && hi >= kVacuumVariance - kEigenGuard) hi = kVacuumVariance;
  return {lo, hi};
}

namespace gaussian {

TwoModeGaussianState make_input_state(const InputSpec& spec_a, const InputSpec& spec_b) {
  spec_a.validate();
  spec_b.validate();
  TwoModeGaussianState state;
  state.mean << spec_a.alpha.real(), spec_a.alpha.imag(), spec_b.alpha.real(), spec_b.alpha.imag();
  state.cov = Mat4::Zero();
  state.cov(0, 0) = kVacuumVariance * std::exp(2.0 * spec_a.r);
  state.cov(1, 1) = kVacuumVariance * std::exp(-2.0 * spec_a.r);
  state.cov(2, 2) = kVacuumVariance * std::exp(2.0 * spec_b.r);
  state.cov(3, 3) = kVacuumVariance * std::exp(-2.0 * spec_b.r);
  return state;
}

SymplecticMap phase_map(double theta_a, double theta_b) {
  SymplecticMap map;
  map.matrix = Mat4::Zero();
  map.matrix.block<2, 2>(0, 0) = rotation(theta_a);
  map.matrix.block<2, 2>(2, 2) = rotation(theta_b);
  return map;
}

SymplecticMap beam_splitter_map(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  SymplecticMap map;
  map.matrix = Mat4::Zero();
  map.matrix.block<2, 2>(0, 0) = c * Mat2::Identity();
  map.matrix.block<2, 2>(0, 2) = s * Mat2::Identity();
  map.matrix.block<2, 2>(2, 0) = -s * Mat2::Identity();
  map.matrix.block<2, 2>(2, 2) = c * Mat2::Identity();
  return map;
}

SymplecticMap mz_map(double phi) {
  constexpr double quarter = std::numbers::pi / 2.0;
  return phase_map(0.0, quarter) * beam_splitter_map(0.5 * phi) * phase_map(0.0, -quarter);
}

SymplecticMap mz_map_conjugated(double phi) {
  constexpr double balanced = std::numbers::pi / 4.0;
  return beam_splitter_map(balanced) * phase_map(0.5 * phi, -0.5 * phi) *
         beam_splitter_map(-balanced);
}

TwoModeGaussianState apply(const SymplecticMap& map, const TwoModeGaussianState& state) {
  TwoModeGaussianState out;
  out.mean = map.matrix * state.mean + map.displacement;
  out.cov = map.matrix * state.cov * map.matrix.transpose();
  // re-symmetrize; the product is symmetric only up to rounding
  out.cov = 0.5 * (out.cov + out.cov.transpose()).eval();
  return out;
}

ReducedModeState reduce(const TwoModeGaussianState& state, Mode mode) {
  const int k = offset(mode);
  ReducedModeState reduced;
  reduced.mean = state.mean.segment<2>(k);
  reduced.cov = state.cov.block<2, 2>(k, k);
  return reduced;
}

double thermal_photons(const ReducedModeState& reduced) {
  const double det = reduced.cov.determinant();
  constexpr double pure_det = kVacuumVariance * kVacuumVariance;
  if (det < pure_det - kDetGuard) {
    std::ostringstream os;
    os << "reduced covariance determinant " << det << " below the single-mode bound 1/16";
    throw UnphysicalStateError(os.str());
  }
  const double n = 0.5 * (std::sqrt(16.0 * std::max(det, 0.0)) - 1.0);
  return std::max(n, 0.0);
}

TwoModeGaussianState output_state(const InputSpec& spec_a, const InputSpec& spec_b, double phi) {
  return apply(mz_map(phi), make_input_state(spec_a, spec_b));
}

EntanglementReport entanglement(const InputSpec& spec_a, const InputSpec& spec_b, double phi) {
  const TwoModeGaussianState out = output_state(spec_a, spec_b, phi);
  const ReducedModeState ra = reduce(out, Mode::a);
  const ReducedModeState rb = reduce(out, Mode::b);

  EntanglementReport report;
  report.thermal_photons_a = thermal_photons(ra);
  report.thermal_photons_b = thermal_photons(rb);
  report.entropy_a = thermal_entropy(report.thermal_photons_a);
  report.entropy_b = thermal_entropy(report.thermal_photons_b);
  report.mean_photons_a = ra.mean_photons();
  report.mean_photons_b = rb.mean_photons();

  // the total state is pure, so S[rho] = 0
  const double denom = thermal_entropy(report.mean_photons_a) + thermal_entropy(report.mean_photons_b);
  if (denom > 0.0) {
    report.epsilon = std::clamp((report.entropy_a + report.entropy_b) / denom, 0.0, 1.0);
  }
  return report;
}

double epsilon(const InputSpec& spec_a, const InputSpec& spec_b, double phi) {
  return entanglement(spec_a, spec_b, phi).epsilon;
}

double nphi_closed_form(double r, double phi) {
  const double s = std::sin(phi);
  const double sh = std::sinh(2.0 * r);
  return 0.5 * (std::sqrt(1.0 + s * s * sh * sh) - 1.0);
}

double epsilon_asymptotic(double mean_photons, double gamma) {
  if (!(mean_photons > 1.0)) {
    throw DomainError("asymptotic entanglement needs N > 1");
  }
  if (!(gamma > 0.0) || gamma > 1.0) {
    throw DomainError("asymptotic entanglement needs 0 < gamma <= 1");
  }
  return 1.0 + std::log(gamma) / std::log(mean_photons);
}

}  // namespace gaussian
}  // namespace mzent
