#include "mzent/fock.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "mzent/entropy.hpp"
#include "mzent/errors.hpp"

namespace mzent::fock {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kNegativeEigenTol = 1e-10;
constexpr double kZeroEigen = 1e-14;

void require_dim(int dim) {
  if (dim < 2) {
    std::ostringstream os;
    os << "truncation dimension must be >= 2, got " << dim;
    throw DomainError(os.str());
  }
}

int top_band_start(int dim) { return std::max(1, dim - 2); }

// i^k for the quarter-turn rotation exp{i(pi/2) n}, exact for every k.
Complex quarter_turn_phase(int k) {
  static constexpr std::array<Complex, 4> table{Complex{1.0, 0.0}, Complex{0.0, 1.0},
                                                Complex{-1.0, 0.0}, Complex{0.0, -1.0}};
  return table[static_cast<std::size_t>(k % 4)];
}

void check_vacuum_image(const CMatrix& op, double tail_tol, const char* what) {
  const int dim = static_cast<int>(op.rows());
  double top = 0.0;
  for (int n = top_band_start(dim); n < dim; ++n) top += std::norm(op(n, 0));
  if (top > tail_tol) {
    std::ostringstream os;
    os << what << ": weight " << top << " on the top levels of a D=" << dim
       << " basis exceeds tail tolerance " << tail_tol;
    throw TruncationError(os.str());
  }
}

Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> as_matrix(
    const TwoModeFockVector& psi) {
  return {psi.amplitudes.data(), psi.dim(), psi.dim()};
}

SparseCMatrix identity_sparse(int n) {
  SparseCMatrix id(n, n);
  id.setIdentity();
  return id;
}

// alpha a^dag - alpha^* a + (r/2)(a^dag^2 - a^2) on a dim-level basis.
SparseCMatrix single_mode_generator(Complex alpha, double r, int dim) {
  std::vector<Eigen::Triplet<Complex>> t;
  for (int n = 0; n + 1 < dim; ++n) {
    const double s = std::sqrt(n + 1.0);
    if (alpha != 0.0) {
      t.emplace_back(n + 1, n, alpha * s);
      t.emplace_back(n, n + 1, -std::conj(alpha) * s);
    }
    if (r != 0.0 && n + 2 < dim) {
      const double q = 0.5 * r * std::sqrt((n + 1.0) * (n + 2.0));
      t.emplace_back(n + 2, n, q);
      t.emplace_back(n, n + 2, -q);
    }
  }
  SparseCMatrix g(dim, dim);
  g.setFromTriplets(t.begin(), t.end());
  return g;
}

// exp(g) v by scaling the generator to unit 1-norm and summing each Taylor
// factor to machine precision; g is sparse, so this never forms exp(g).
CVector apply_exponential(const SparseCMatrix& g, CVector v) {
  double norm1 = 0.0;
  for (int k = 0; k < g.outerSize(); ++k) {
    double col = 0.0;
    for (SparseCMatrix::InnerIterator it(g, k); it; ++it) col += std::abs(it.value());
    norm1 = std::max(norm1, col);
  }
  const int steps = std::max(1, static_cast<int>(std::ceil(norm1)));
  for (int s = 0; s < steps; ++s) {
    CVector term = v;
    for (int k = 1; k < 60; ++k) {
      term = (g * term) / Complex(static_cast<double>(steps) * k);
      v += term;
      if (term.norm() <= 1e-17 * v.norm()) break;
    }
  }
  return v;
}

}  // namespace

void FockCutoff::validate() const {
  require_dim(dim);
  if (!(tail_tol > 0.0) || tail_tol > 1e-4) {
    std::ostringstream os;
    os << "tail tolerance must lie in (0, 1e-4], got " << tail_tol;
    throw DomainError(os.str());
  }
}

LadderOps ladder_ops(int dim) {
  require_dim(dim);
  LadderOps ops;
  ops.annihilation = CMatrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) ops.annihilation(n - 1, n) = std::sqrt(static_cast<double>(n));
  ops.creation = ops.annihilation.adjoint();
  ops.number = ops.creation * ops.annihilation;
  return ops;
}

CMatrix displacement_matrix(Complex alpha, int dim, double tail_tol) {
  const LadderOps ops = ladder_ops(dim);
  const CMatrix generator = alpha * ops.creation - std::conj(alpha) * ops.annihilation;
  CMatrix out = generator.exp();
  check_vacuum_image(out, tail_tol, "displacement");
  return out;
}

CMatrix squeeze_matrix(double r, int dim, double tail_tol) {
  const LadderOps ops = ladder_ops(dim);
  const CMatrix generator =
      0.5 * r * (ops.creation * ops.creation - ops.annihilation * ops.annihilation);
  CMatrix out = generator.exp();
  check_vacuum_image(out, tail_tol, "squeeze");
  return out;
}

SparseCMatrix lift(const CMatrix& op, Mode mode) {
  const int dim = static_cast<int>(op.rows());
  const SparseCMatrix single = op.sparseView(0.0, 0.0);
  const SparseCMatrix id = identity_sparse(dim);
  SparseCMatrix out = mode == Mode::a ? SparseCMatrix(Eigen::kroneckerProduct(single, id))
                                      : SparseCMatrix(Eigen::kroneckerProduct(id, single));
  out.makeCompressed();
  return out;
}

double TwoModeFockVector::top_band_occupation(Mode mode) const {
  const Eigen::VectorXd p = photon_distribution(mode);
  const int start = top_band_start(dim());
  return p.tail(dim() - start).sum();
}

Eigen::VectorXd TwoModeFockVector::photon_distribution(Mode mode) const {
  const auto m = as_matrix(*this);
  const Eigen::MatrixXd prob = m.cwiseAbs2();
  if (mode == Mode::a) return prob.rowwise().sum();
  return prob.colwise().sum().transpose();
}

void ModeDensity::validate(double tail_tol) const {
  const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "density not Hermitian (max deviation " << herm << ")";
    throw UnphysicalStateError(os.str());
  }
  const double trace = matrix.trace().real();
  if (trace < 1.0 - tail_tol || trace > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "density trace " << trace << " outside [1 - " << tail_tol << ", 1]";
    throw UnphysicalStateError(os.str());
  }
  const CMatrix sym = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kNegativeEigenTol) {
    throw UnphysicalStateError("density has a negative eigenvalue");
  }
}

MzUnitary::MzUnitary(double phi, int dim) : dim_(dim), phi_(phi) {
  require_dim(dim);
  const double angle = 0.5 * phi;
  blocks_.reserve(static_cast<std::size_t>(2 * dim - 1));
  for (int total = 0; total <= 2 * (dim - 1); ++total) {
    Block block;
    block.total = total;
    block.first_na = std::max(0, total - (dim - 1));
    const int last_na = std::min(total, dim - 1);
    const int size = last_na - block.first_na + 1;

    // a^dag b - b^dag a restricted to the states |k, total - k>
    Eigen::MatrixXd generator = Eigen::MatrixXd::Zero(size, size);
    for (int i = 0; i + 1 < size; ++i) {
      const int k = block.first_na + i;
      const double amp = std::sqrt(static_cast<double>(k + 1) * static_cast<double>(total - k));
      generator(i + 1, i) = amp;
      generator(i, i + 1) = -amp;
    }
    if (angle == 0.0) {
      block.mixing = Eigen::MatrixXd::Identity(size, size);
    } else {
      block.mixing = (angle * generator).exp();
    }
    blocks_.push_back(std::move(block));
  }
}

CVector MzUnitary::apply(const CVector& psi) const {
  if (psi.size() != static_cast<Eigen::Index>(dim_) * dim_) {
    throw DomainError("state size does not match the unitary dimension");
  }
  CVector out = CVector::Zero(psi.size());
  CVector local;
  for (const Block& block : blocks_) {
    const int size = static_cast<int>(block.mixing.rows());
    local.resize(size);
    for (int i = 0; i < size; ++i) {
      const int na = block.first_na + i;
      const int nb = block.total - na;
      local(i) = std::conj(quarter_turn_phase(nb)) * psi(na * dim_ + nb);
    }
    const CVector mixed = block.mixing.cast<Complex>() * local;
    for (int i = 0; i < size; ++i) {
      const int na = block.first_na + i;
      const int nb = block.total - na;
      out(na * dim_ + nb) = quarter_turn_phase(nb) * mixed(i);
    }
  }
  return out;
}

TwoModeFockVector MzUnitary::apply(const TwoModeFockVector& psi) const {
  if (psi.dim() != dim_) throw DomainError("state dimension does not match the unitary");
  return {apply(psi.amplitudes), psi.cutoff};
}

CMatrix MzUnitary::dense() const {
  const int n = dim_ * dim_;
  CMatrix out = CMatrix::Zero(n, n);
  for (const Block& block : blocks_) {
    const int size = static_cast<int>(block.mixing.rows());
    for (int i = 0; i < size; ++i) {
      const int na_i = block.first_na + i;
      const int nb_i = block.total - na_i;
      for (int j = 0; j < size; ++j) {
        const int na_j = block.first_na + j;
        const int nb_j = block.total - na_j;
        out(na_i * dim_ + nb_i, na_j * dim_ + nb_j) =
            quarter_turn_phase(nb_i) * block.mixing(i, j) * std::conj(quarter_turn_phase(nb_j));
      }
    }
  }
  return out;
}

CMatrix mz_unitary_reference(double phi, int dim) {
  const LadderOps ops = ladder_ops(dim);
  const CMatrix a = CMatrix(lift(ops.annihilation, Mode::a));
  const CMatrix b = CMatrix(lift(ops.annihilation, Mode::b));
  const CMatrix nb = CMatrix(lift(ops.number, Mode::b));
  const CMatrix generator = a.adjoint() * b - b.adjoint() * a;
  const Complex quarter{0.0, std::numbers::pi / 2.0};
  const CMatrix rotate = (quarter * nb).exp();
  const CMatrix unrotate = (-quarter * nb).exp();
  const CMatrix mix = (0.5 * phi * generator).exp();
  return rotate * mix * unrotate;
}

TwoModeFockVector build_input(const InputSpec& spec_a, const InputSpec& spec_b, const FockCutoff& cutoff) {
  cutoff.validate();
  spec_a.validate();
  spec_b.validate();
  const int dim = cutoff.dim;
  // A truncated exponential is exactly unitary, so building at D would hide the
  // lost mass. Build in a padded basis and keep the first D levels instead.
  const int padded = 2 * dim + 32;
  auto single_mode = [&](const InputSpec& spec) -> CVector {
    CVector state = CVector::Zero(padded);
    state(0) = 1.0;
    state = apply_exponential(single_mode_generator(0.0, spec.r, padded), std::move(state));
    state = apply_exponential(single_mode_generator(spec.alpha, 0.0, padded), std::move(state));
    double top = 0.0;
    for (int n = top_band_start(padded); n < padded; ++n) top += std::norm(state(n));
    if (top > cutoff.tail_tol) {
      std::ostringstream os;
      os << "input state does not fit a D=" << dim << " truncation at tail tolerance " << cutoff.tail_tol
         << " (weight " << top << " on the top levels of the D=" << padded << " construction basis)";
      throw TruncationError(os.str());
    }
    return state.head(dim);
  };
  const CVector u = single_mode(spec_a);
  const CVector v = single_mode(spec_b);

  TwoModeFockVector psi;
  psi.cutoff = cutoff;
  psi.amplitudes.resize(static_cast<Eigen::Index>(dim) * dim);
  for (int na = 0; na < dim; ++na) {
    for (int nb = 0; nb < dim; ++nb) psi.amplitudes(na * dim + nb) = u(na) * v(nb);
  }
  const double deficit = psi.norm_deficit();
  if (deficit > cutoff.tail_tol) {
    std::ostringstream os;
    os << "input norm deficit " << deficit << " exceeds tail tolerance " << cutoff.tail_tol
       << " at D=" << dim;
    throw TruncationError(os.str());
  }
  return psi;
}

TwoModeFockVector twin_beam_reference(double r, const FockCutoff& cutoff) {
  cutoff.validate();
  const int dim = cutoff.dim;
  const double t = std::tanh(r);
  const double tail = std::pow(t * t, dim);
  if (tail > cutoff.tail_tol) {
    std::ostringstream os;
    os << "twin-beam tail " << tail << " exceeds tail tolerance " << cutoff.tail_tol << " at D=" << dim;
    throw TruncationError(os.str());
  }
  TwoModeFockVector psi;
  psi.cutoff = cutoff;
  psi.amplitudes = CVector::Zero(static_cast<Eigen::Index>(dim) * dim);
  double amp = 1.0 / std::cosh(r);
  for (int k = 0; k < dim; ++k) {
    psi.amplitudes(k * dim + k) = amp;
    amp *= t;
  }
  return psi;
}

ModeDensity reduced_density(const TwoModeFockVector& psi, Mode mode) {
  const auto m = as_matrix(psi);
  ModeDensity rho;
  if (mode == Mode::a) {
    rho.matrix = m * m.adjoint();
  } else {
    rho.matrix = m.transpose() * m.conjugate();
  }
  return rho;
}

double von_neumann_entropy(const ModeDensity& rho) {
  const CMatrix sym = 0.5 * (rho.matrix + rho.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  Eigen::VectorXd lambda = solver.eigenvalues();
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -kNegativeEigenTol) {
      std::ostringstream os;
      os << "density eigenvalue " << lambda(i) << " below -" << kNegativeEigenTol;
      throw UnphysicalStateError(os.str());
    }
    lambda(i) = std::max(lambda(i), 0.0);
  }
  const double trace = lambda.sum();
  if (!(trace > 0.0)) throw UnphysicalStateError("density has zero trace");
  lambda /= trace;
  double s = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) > kZeroEigen) s -= lambda(i) * std::log(lambda(i));
  }
  return std::max(s, 0.0);
}

double fidelity(const TwoModeFockVector& lhs, const TwoModeFockVector& rhs) {
  if (lhs.dim() != rhs.dim()) throw DomainError("fidelity between different truncations");
  const Complex overlap = lhs.amplitudes.dot(rhs.amplitudes);
  return std::norm(overlap) / (lhs.norm_squared() * rhs.norm_squared());
}

Complex expectation(const SparseCMatrix& op, const TwoModeFockVector& psi) {
  const CVector image = op * psi.amplitudes;
  return psi.amplitudes.dot(image) / psi.norm_squared();
}

double expectation_K(const TwoModeFockVector& psi) {
  const auto m = as_matrix(psi);
  double acc = 0.0;
  for (int na = 0; na < psi.dim(); ++na) {
    for (int nb = 0; nb < psi.dim(); ++nb) acc += std::norm(m(na, nb)) * na * nb;
  }
  return acc / psi.norm_squared();
}

double expectation_H(const TwoModeFockVector& psi) {
  const auto m = as_matrix(psi);
  double acc = 0.0;
  for (int na = 0; na < psi.dim(); ++na) {
    for (int nb = 0; nb < psi.dim(); ++nb) {
      const double diff = na - nb;
      acc += std::norm(m(na, nb)) * diff * diff;
    }
  }
  return acc / psi.norm_squared();
}

FockEvaluation evaluate(const InputSpec& spec_a, const InputSpec& spec_b, double phi, const FockCutoff& cutoff) {
  const TwoModeFockVector input = build_input(spec_a, spec_b, cutoff);
  const TwoModeFockVector output = MzUnitary(phi, cutoff.dim).apply(input);

  FockEvaluation ev;
  ev.dim = cutoff.dim;
  ev.tail = std::max({std::abs(input.norm_deficit()), output.top_band_occupation(Mode::a),
                      output.top_band_occupation(Mode::b)});
  ev.entropy_a = von_neumann_entropy(reduced_density(output, Mode::a));
  ev.entropy_b = von_neumann_entropy(reduced_density(output, Mode::b));
  ev.thermal_photons_a = thermal_photons_for_entropy(ev.entropy_a);

  const double norm = output.norm_squared();
  const Eigen::VectorXd levels = Eigen::VectorXd::LinSpaced(cutoff.dim, 0.0, cutoff.dim - 1.0);
  ev.mean_photons_a = output.photon_distribution(Mode::a).dot(levels) / norm;
  ev.mean_photons_b = output.photon_distribution(Mode::b).dot(levels) / norm;
  ev.K = expectation_K(output);
  ev.H = expectation_H(output);

  const double denom = thermal_entropy(ev.mean_photons_a) + thermal_entropy(ev.mean_photons_b);
  ev.epsilon = denom > 0.0 ? (ev.entropy_a + ev.entropy_b) / denom : 0.0;
  return ev;
}

FockEvaluation evaluate_auto(const InputSpec& spec_a, const InputSpec& spec_b, double phi,
                             double tail_tol, int max_dim) {
  return evaluate(spec_a, spec_b, phi, auto_cutoff(spec_a, spec_b, phi, tail_tol, max_dim));
}

double epsilon_fock(const InputSpec& spec_a, const InputSpec& spec_b, double phi, const FockCutoff& cutoff) {
  return evaluate(spec_a, spec_b, phi, cutoff).epsilon;
}

FockCutoff auto_cutoff(const InputSpec& spec_a, const InputSpec& spec_b, double phi, double tail_tol,
                       int max_dim) {
  FockCutoff probe{2, tail_tol};
  probe.validate();
  require_dim(max_dim);

  double last_tail = 0.0;
  auto adequate = [&](int dim) {
    const FockCutoff cutoff{dim, tail_tol};
    TwoModeFockVector input;
    try {
      input = build_input(spec_a, spec_b, cutoff);
    } catch (const TruncationError&) {
      last_tail = 1.0;
      return false;
    }
    const TwoModeFockVector output = MzUnitary(phi, dim).apply(input);
    last_tail = std::max(output.top_band_occupation(Mode::a), output.top_band_occupation(Mode::b));
    return last_tail <= tail_tol;
  };

  int failing = 1;
  int passing = 0;
  for (int dim = 2;; dim = std::min(2 * dim, max_dim)) {
    if (adequate(dim)) {
      passing = dim;
      break;
    }
    failing = dim;
    if (dim == max_dim) {
      std::ostringstream os;
      os << "no truncation D <= " << max_dim << " reaches tail tolerance " << tail_tol
         << " (top-level weight " << last_tail << " at D=" << max_dim << ")";
      throw TruncationError(os.str());
    }
  }
  while (passing - failing > 1) {
    const int mid = failing + (passing - failing) / 2;
    if (adequate(mid)) {
      passing = mid;
    } else {
      failing = mid;
    }
  }
  return {passing, tail_tol};
}

}  // namespace mzent::fock
