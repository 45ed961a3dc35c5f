#ifndef MZENT_ENTROPY_HPP
#define MZENT_ENTROPY_HPP

namespace mzent {

/// Von Neumann entropy (natural log) of a thermal state with mean occupation n:
/// g(n) = ln(1 + n) + n ln(1 + 1/n), with g(0) = 0.
/// Throws DomainError for n < 0 or non-finite n.
double thermal_entropy(double n);

/// Inverse of thermal_entropy on [0, inf): the occupation of the thermal state
/// with entropy s. Throws DomainError for s < 0.
double thermal_photons_for_entropy(double s);

}  // namespace mzent

#endif  // MZENT_ENTROPY_HPP
