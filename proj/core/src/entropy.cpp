#include "mzent/entropy.hpp"

#include <cmath>
#include <sstream>

#include "mzent/errors.hpp"

namespace mzent {

double thermal_entropy(double n) {
  if (!std::isfinite(n) || n < 0.0) {
    std::ostringstream os;
    os << "thermal occupation must be finite and >= 0, got " << n;
    throw DomainError(os.str());
  }
  if (n == 0.0) return 0.0;
  return std::log1p(n) + n * std::log1p(1.0 / n);
}

double thermal_photons_for_entropy(double s) {
  if (!std::isfinite(s) || s < 0.0) {
    std::ostringstream os;
    os << "entropy must be finite and >= 0, got " << s;
    throw DomainError(os.str());
  }
  if (s == 0.0) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (thermal_entropy(hi) < s) hi *= 2.0;
  // g is strictly increasing; bisect down to adjacent doubles.
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (thermal_entropy(mid) < s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace mzent
