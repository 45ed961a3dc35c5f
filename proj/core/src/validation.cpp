#include "mzent/validation.hpp"

#include <cmath>
#include <numbers>

#include "mzent/gaussian.hpp"
#include "mzent/observables.hpp"

namespace mzent {

std::vector<GridPoint> standard_validation_grid() {
  constexpr double pi = std::numbers::pi;
  std::vector<GridPoint> grid;
  for (double n : {0.5, 1.0, 3.0}) {
    for (double g : {0.0, 0.5, 1.0}) {
      for (double phi : {0.0, pi / 8, pi / 4, pi / 2}) grid.push_back({n, g, phi});
    }
  }
  return grid;
}

bool EngineComparison::within_tolerance() const {
  return d_epsilon <= 2e-3 && d_K <= 1e-3 * (1.0 + K_gaussian) && d_H <= 1e-3 * (1.0 + H_gaussian);
}

EngineComparison compare_engines(const InputSpec& spec_a, const InputSpec& spec_b, double phi, double tail_tol,
                                 int fixed_dim) {
  EngineComparison c;
  c.epsilon_gaussian = gaussian::epsilon(spec_a, spec_b, phi);
  c.K_gaussian = K_gaussian(spec_a, spec_b, phi);
  c.H_gaussian = H_gaussian(spec_a, spec_b, phi);
  c.fock = fixed_dim >= 2 ? fock::evaluate(spec_a, spec_b, phi, {fixed_dim, tail_tol})
                          : fock::evaluate_auto(spec_a, spec_b, phi, tail_tol);
  c.d_epsilon = std::abs(c.epsilon_gaussian - c.fock.epsilon);
  c.d_K = std::abs(c.K_gaussian - c.fock.K);
  c.d_H = std::abs(c.H_gaussian - c.fock.H);
  return c;
}

}  // namespace mzent
