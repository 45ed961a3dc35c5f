#ifndef MZENT_GOLDEN_SECTION_HPP
#define MZENT_GOLDEN_SECTION_HPP

#include <cmath>
#include <utility>

namespace mzent {

struct LineMinimum {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

/// Golden-section search for a minimum of f on [lo, hi]; stops once the
/// bracket is narrower than tol. Assumes f is unimodal on the bracket.
template <typename F>
LineMinimum golden_section_minimize(F&& f, double lo, double hi, double tol, int max_iterations = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (lo > hi) std::swap(lo, hi);

  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  for (; it < max_iterations && (hi - lo) > tol; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  if (fc <= fd) return {c, fc, it};
  return {d, fd, it};
}

}  // namespace mzent

#endif  // MZENT_GOLDEN_SECTION_HPP
