#ifndef MZENT_VALIDATION_HPP
#define MZENT_VALIDATION_HPP

#include <vector>

#include "mzent/fock.hpp"
#include "mzent/input_spec.hpp"

namespace mzent {

struct GridPoint {
  double mean_photons = 0.0;
  double gamma = 0.0;
  double phi = 0.0;
};

/// N in {0.5, 1, 3} x gamma in {0, 0.5, 1} x phi in {0, pi/8, pi/4, pi/2},
/// equal inputs in both ports; N outermost, phi innermost.
std::vector<GridPoint> standard_validation_grid();

/// Gaussian and Fock results at one point and their absolute differences.
struct EngineComparison {
  double epsilon_gaussian = 0.0;
  double K_gaussian = 0.0;
  double H_gaussian = 0.0;
  fock::FockEvaluation fock;
  double d_epsilon = 0.0;
  double d_K = 0.0;
  double d_H = 0.0;

  /// d_epsilon <= 2e-3 and d_K, d_H <= 1e-3 (1 + Gaussian value).
  bool within_tolerance() const;
};

/// Fock side uses `cutoff` when given a dimension >= 2, otherwise auto_cutoff.
EngineComparison compare_engines(const InputSpec& spec_a, const InputSpec& spec_b, double phi,
                                 double tail_tol = fock::kDefaultTailTol, int fixed_dim = 0);

}  // namespace mzent

#endif  // MZENT_VALIDATION_HPP
