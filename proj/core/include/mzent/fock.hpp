#ifndef MZENT_FOCK_HPP
#define MZENT_FOCK_HPP

// Brute-force engine on a truncated number basis. Everything here is computed
// from ladder matrices and matrix exponentials, independently of the Gaussian
// moment machinery in gaussian.hpp / observables.hpp.

#include <complex>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "mzent/gaussian.hpp"
#include "mzent/input_spec.hpp"

namespace mzent::fock {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using SparseCMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr double kDefaultTailTol = 1e-8;
inline constexpr int kDefaultMaxDim = 256;

/// Single-mode truncation dimension D (levels 0..D-1) and the largest norm we
/// are willing to lose to truncation.
struct FockCutoff {
  int dim = 2;
  double tail_tol = kDefaultTailTol;

  /// Throws DomainError unless dim >= 2 and 0 < tail_tol <= 1e-4.
  void validate() const;
};

struct LadderOps {
  CMatrix annihilation;
  CMatrix creation;
  CMatrix number;
};

LadderOps ladder_ops(int dim);

/// exp(alpha a^dag - conj(alpha) a) on the truncated space. Throws
/// TruncationError if the image of the vacuum puts more than tail_tol weight on
/// the top two levels.
CMatrix displacement_matrix(Complex alpha, int dim, double tail_tol = kDefaultTailTol);

/// exp((r/2)(a^dag^2 - a^2)); <2k|S(r)|0> is proportional to tanh^k r with a
/// positive ratio. Same truncation check as displacement_matrix.
CMatrix squeeze_matrix(double r, int dim, double tail_tol = kDefaultTailTol);

/// Single-mode operator lifted to the two-mode space, index n_a * D + n_b.
SparseCMatrix lift(const CMatrix& op, Mode mode);

/// Two-mode amplitudes psi(n_a, n_b), stored row-major (index n_a * D + n_b).
struct TwoModeFockVector {
  CVector amplitudes;
  FockCutoff cutoff;

  int dim() const { return cutoff.dim; }
  Complex operator()(int n_a, int n_b) const { return amplitudes(n_a * cutoff.dim + n_b); }
  double norm_squared() const { return amplitudes.squaredNorm(); }
  double norm_deficit() const { return 1.0 - norm_squared(); }

  /// Weight on the top band of levels of one mode (levels >= max(1, D-2)).
  double top_band_occupation(Mode mode) const;

  /// Marginal photon-number distribution of one mode (unnormalized).
  Eigen::VectorXd photon_distribution(Mode mode) const;
};

/// Reduced density matrix of one mode.
struct ModeDensity {
  CMatrix matrix;

  /// Hermitian within 1e-12, eigenvalues >= -1e-10, trace in [1 - tail_tol, 1 + 1e-12].
  void validate(double tail_tol) const;
};

/// The interferometer unitary on the D^2-dimensional two-mode space,
///   exp{i(pi/2) n_b} exp{(phi/2)(a^dag b - b^dag a)} exp{-i(pi/2) n_b}.
///
/// The generator conserves n_a + n_b, so the unitary is stored as one dense
/// block per total photon number n = 0 .. 2D-2 (block sizes up to D); each
/// block is exponentiated by scaling and squaring. Construction costs
/// O(D^4) flops; dense() materializes the full D^2 x D^2 matrix and is only
/// meant for small D.
class MzUnitary {
public:
  MzUnitary(double phi, int dim);

  int dim() const { return dim_; }
  double phi() const { return phi_; }

  CVector apply(const CVector& psi) const;
  TwoModeFockVector apply(const TwoModeFockVector& psi) const;
  CMatrix dense() const;

private:
  struct Block {
    int first_na = 0;         // n_a of the first basis state |first_na, n - first_na>
    int total = 0;            // n = n_a + n_b
    Eigen::MatrixXd mixing;   // real beam-splitter block
  };

  int dim_;
  double phi_;
  std::vector<Block> blocks_;
};

/// Reference construction of the same unitary: full D^2 x D^2 exponentials of
/// the Kronecker-lifted generators. Used to validate MzUnitary; small D only.
CMatrix mz_unitary_reference(double phi, int dim);

/// (D(alpha_a) S(r_a) (x) D(alpha_b) S(r_b)) |0,0>, displacement after squeezing.
/// Throws TruncationError if the norm deficit exceeds cutoff.tail_tol.
TwoModeFockVector build_input(const InputSpec& spec_a, const InputSpec& spec_b, const FockCutoff& cutoff);

/// Two-mode squeezed vacuum sum_k tanh^k r / cosh r |k,k>. Throws
/// TruncationError if tanh^{2D} r exceeds cutoff.tail_tol.
TwoModeFockVector twin_beam_reference(double r, const FockCutoff& cutoff);

/// rho_a[m,n] = sum_k psi(m,k) conj(psi(n,k)) (and symmetrically for b).
ModeDensity reduced_density(const TwoModeFockVector& psi, Mode mode);

/// -sum lambda ln lambda over the eigenvalues of the (symmetrized, trace
/// renormalized) density; eigenvalues <= 1e-14 contribute nothing. Throws
/// UnphysicalStateError on an eigenvalue below -1e-10.
double von_neumann_entropy(const ModeDensity& rho);

/// |<lhs|rhs>|^2 for normalized inputs.
double fidelity(const TwoModeFockVector& lhs, const TwoModeFockVector& rhs);

/// <n_a n_b> and <(n_a - n_b)^2>, as diagonal sums over |amplitude|^2 of the
/// normalized vector.
double expectation_K(const TwoModeFockVector& psi);
double expectation_H(const TwoModeFockVector& psi);

/// <psi|op|psi> / <psi|psi> for a two-mode operator.
Complex expectation(const SparseCMatrix& op, const TwoModeFockVector& psi);

/// Heisenberg-picture coincidence operator U^dag n_a n_b U expanded in normally
/// ordered input-mode monomials (d = phi/2):
///   s^2 c^2 [a+^2 a^2 + b+^2 b^2 + a+^2 b^2 + b+^2 a^2] + (s^2 - c^2)^2 a+a b+b
///   + i s c^3 [a b+^2 b + a+^2 a b - a+ b+ b^2 - a+ a^2 b+]
///   + i s^3 c [a+ a^2 b+ + a+ b+ b^2 - a+^2 a b - a b+^2 b].
SparseCMatrix expanded_K_operator(double phi, int dim);

/// U^dag (n_a - n_b)^2 U expanded the same way:
///   -2K + [(a+a)^2 + (b+b)^2](s^4 + c^4) - 2 s^2 c^2 [a+^2 b^2 + b+^2 a^2 - a+a - b+b]
///   + 8 s^2 c^2 a+a b+b
///   + 2i s c^3 [a+ a^2 b+ - a+^2 a b + a+ b+ b^2 - a b+^2 b]
///   + 2i s^3 c [a b+^2 b - a+ b+ b^2 + a+^2 a b - a+ a^2 b+].
SparseCMatrix expanded_H_operator(double phi, int dim);

/// Everything the oracle computes for one (inputs, phase, cutoff) point.
struct FockEvaluation {
  double epsilon = 0.0;
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  double thermal_photons_a = 0.0;  // occupation of the thermal state with entropy S_a
  double mean_photons_a = 0.0;
  double mean_photons_b = 0.0;
  double K = 0.0;
  double H = 0.0;
  int dim = 0;
  double tail = 0.0;  // max(input norm deficit, output top-band occupation)
};

FockEvaluation evaluate(const InputSpec& spec_a, const InputSpec& spec_b, double phi, const FockCutoff& cutoff);

/// Same as evaluate() with the cutoff chosen by auto_cutoff().
FockEvaluation evaluate_auto(const InputSpec& spec_a, const InputSpec& spec_b, double phi,
                             double tail_tol = kDefaultTailTol, int max_dim = kDefaultMaxDim);

/// build -> evolve -> reduce -> entropy -> normalize; same denominator
/// convention as gaussian::epsilon.
double epsilon_fock(const InputSpec& spec_a, const InputSpec& spec_b, double phi, const FockCutoff& cutoff);

/// Smallest D (doubling search followed by bisection) such that the input norm
/// deficit and the evolved top-band occupation of each mode are both <= tail_tol.
/// Throws TruncationError if no D <= max_dim qualifies.
FockCutoff auto_cutoff(const InputSpec& spec_a, const InputSpec& spec_b, double phi,
                       double tail_tol = kDefaultTailTol, int max_dim = kDefaultMaxDim);

}  // namespace mzent::fock

#endif  // MZENT_FOCK_HPP
