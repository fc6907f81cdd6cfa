#pragma once

#include <functional>

#include "qcp2/chow.hpp"
#include "qcp2/potentials.hpp"

namespace qcp2 {

/// An element of the plane's cohomology with series coefficients: the
/// carrier of both deformed products. comp[0], comp[1], comp[2] are the
/// coordinates along 1, h, h^2. Closure of the products into this span is
/// a consequence of the contact potential's structure, not an assumption.
struct ProductElement {
  std::array<MaskedSeries, 3> comp;

  static ProductElement zero(int order);
  static ProductElement from_class(const ClassP2& x, int order);

  int order() const { return comp[0].order(); }
  bool fully_known() const;

  ProductElement operator+(const ProductElement& o) const;
  ProductElement operator-(const ProductElement& o) const;
  ProductElement scaled(const Rational& r) const;
  /// Component-wise multiplication by a scalar series.
  ProductElement times_series(const MaskedSeries& s) const;

  /// The coefficient of T^n in each component (for T-series elements).
  ClassP2 t_coefficient(int n) const;

  std::string str() const;
};

/// Cup product extended coefficient-wise over the series ring.
ProductElement cup(const ProductElement& x, const ProductElement& y);

/// The contact product bound to one contact potential. Caches the
/// structure-constant series; products of elements whose coordinates are
/// y-series are guaranteed to order D-3 (three derivatives of the
/// potential).
class ContactAlgebra {
 public:
  ContactAlgebra(int order, const CharNumEngine& eng);
  explicit ContactAlgebra(QuantumPotential n);

  int order() const { return n_.order; }
  int guaranteed_order() const { return n_.order - 3; }

  const QuantumPotential& quantum_potential() const { return n_; }
  const ContactPotential& contact_potential() const { return k_; }
  /// K_{ijk} for i, j in 0..2, k in 0..5.
  const MaskedSeries& kp(int i, int j, int k) const;

  /// T_i bullet T_j = K_{ij5} T0 + K_{ij4} T1 + K_{ij3} T2, extended
  /// bilinearly over series coordinates. Carries only the d > 0 part;
  /// the classical part lives in the cup summand of contact().
  ProductElement bullet(const ProductElement& x,
                        const ProductElement& y) const;

  /// x * y = x cup y + x bullet y.
  ProductElement contact(const ProductElement& x,
                         const ProductElement& y) const;

 private:
  QuantumPotential n_;
  ContactPotential k_;
  // kp_[i][j][k], i <= j by symmetry.
  std::array<std::array<std::array<MaskedSeries, 6>, 3>, 3> kp_;
};

/// Source of the degree-d point counts used by the quantum product.
/// The default is kontsevich_direct; tests inject corrupted providers to
/// demonstrate that associativity pins every value.
using PointCountProvider = std::function<Rational(int)>;
PointCountProvider default_point_counts();

/// The quantum product of two classes deformed by delta, as an element
/// with T-series coordinates truncated at t_order. The n-th coefficient
/// pairs the degree-d invariants of the plane against the basis; the
/// degree-0 part is the classical cup product (only n = 0 survives), and
/// for d >= 1 the string/divisor reductions leave d^{#h} * N_d with
/// N_d drawn from the provider. The d-sum is finite for every n since
/// 3d - 1 is bounded by the insertion count.
ProductElement quantum_product(const ClassP2& x, const ClassP2& y,
                               const ClassP2& delta, int t_order,
                               const PointCountProvider& n_d =
                                   default_point_counts());

/// Q[[T]]-bilinear extension to T-series elements.
ProductElement quantum_product(const ProductElement& x,
                               const ProductElement& y, const ClassP2& delta,
                               int t_order,
                               const PointCountProvider& n_d =
                                   default_point_counts());

}  // namespace qcp2
