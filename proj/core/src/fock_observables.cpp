#include <cmath>

#include "mzent/fock.hpp"

namespace mzent::fock {

namespace {

// Lifted ladder operators of both modes on the D^2 space.
struct TwoModeLadders {
  SparseCMatrix a, ad, b, bd, na, nb;

  explicit TwoModeLadders(int dim) {
    const LadderOps ops = ladder_ops(dim);
    a = lift(ops.annihilation, Mode::a);
    ad = lift(ops.creation, Mode::a);
    b = lift(ops.annihilation, Mode::b);
    bd = lift(ops.creation, Mode::b);
    na = lift(ops.number, Mode::a);
    nb = lift(ops.number, Mode::b);
  }
};

// Pieces shared by the K and H expansions; operator products read right to left.
struct Monomials {
  SparseCMatrix ad2_a2, bd2_b2, ad2_b2, bd2_a2, na_nb;
  SparseCMatrix a_bd2_b, ad2_a_b, ad_bd_b2, ad_a2_bd;

  explicit Monomials(const TwoModeLadders& l) {
    ad2_a2 = l.ad * l.ad * l.a * l.a;
    bd2_b2 = l.bd * l.bd * l.b * l.b;
    ad2_b2 = l.ad * l.ad * l.b * l.b;
    bd2_a2 = l.bd * l.bd * l.a * l.a;
    na_nb = l.na * l.nb;
    a_bd2_b = l.a * l.bd * l.bd * l.b;
    ad2_a_b = l.ad * l.ad * l.a * l.b;
    ad_bd_b2 = l.ad * l.bd * l.b * l.b;
    ad_a2_bd = l.ad * l.a * l.a * l.bd;
  }
};

SparseCMatrix expanded_K(const Monomials& m, double phi) {
  const double s = std::sin(0.5 * phi);
  const double c = std::cos(0.5 * phi);
  const Complex i{0.0, 1.0};
  SparseCMatrix k = Complex(s * s * c * c) * SparseCMatrix(m.ad2_a2 + m.bd2_b2 + m.ad2_b2 + m.bd2_a2);
  k += Complex((s * s - c * c) * (s * s - c * c)) * m.na_nb;
  k += (i * s * c * c * c) * SparseCMatrix(m.a_bd2_b + m.ad2_a_b - m.ad_bd_b2 - m.ad_a2_bd);
  k += (i * s * s * s * c) * SparseCMatrix(m.ad_a2_bd + m.ad_bd_b2 - m.ad2_a_b - m.a_bd2_b);
  return k;
}

}  // namespace

SparseCMatrix expanded_K_operator(double phi, int dim) {
  const TwoModeLadders ladders(dim);
  return expanded_K(Monomials(ladders), phi);
}

SparseCMatrix expanded_H_operator(double phi, int dim) {
  const TwoModeLadders l(dim);
  const Monomials m(l);
  const double s = std::sin(0.5 * phi);
  const double c = std::cos(0.5 * phi);
  const Complex i{0.0, 1.0};

  SparseCMatrix h = Complex(-2.0) * expanded_K(m, phi);
  h += Complex(s * s * s * s + c * c * c * c) * SparseCMatrix(l.na * l.na + l.nb * l.nb);
  h += Complex(-2.0 * s * s * c * c) * SparseCMatrix(m.ad2_b2 + m.bd2_a2 - l.na - l.nb);
  h += Complex(8.0 * s * s * c * c) * m.na_nb;
  h += (2.0 * i * s * c * c * c) * SparseCMatrix(m.ad_a2_bd - m.ad2_a_b + m.ad_bd_b2 - m.a_bd2_b);
  h += (2.0 * i * s * s * s * c) * SparseCMatrix(m.a_bd2_b - m.ad_bd_b2 + m.ad2_a_b - m.ad_a2_bd);
  return h;
}

}  // namespace mzent::fock
