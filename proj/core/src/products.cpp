#include "qcp2/products.hpp"

namespace qcp2 {

ProductElement ProductElement::zero(int order) {
  return ProductElement{{MaskedSeries(order), MaskedSeries(order),
                         MaskedSeries(order)}};
}

ProductElement ProductElement::from_class(const ClassP2& x, int order) {
  ProductElement e = zero(order);
  for (int i = 0; i < 3; ++i)
    e.comp[i] = MaskedSeries::constant(x.c[i], order);
  return e;
}

bool ProductElement::fully_known() const {
  return comp[0].fully_known() && comp[1].fully_known() &&
         comp[2].fully_known();
}

ProductElement ProductElement::operator+(const ProductElement& o) const {
  ProductElement r = *this;
  for (int i = 0; i < 3; ++i) r.comp[i] += o.comp[i];
  return r;
}

ProductElement ProductElement::operator-(const ProductElement& o) const {
  ProductElement r = *this;
  for (int i = 0; i < 3; ++i) r.comp[i] -= o.comp[i];
  return r;
}

ProductElement ProductElement::scaled(const Rational& r) const {
  ProductElement e = *this;
  for (int i = 0; i < 3; ++i) e.comp[i] = e.comp[i].scaled(r);
  return e;
}

ProductElement ProductElement::times_series(const MaskedSeries& s) const {
  ProductElement e = *this;
  for (int i = 0; i < 3; ++i) e.comp[i] = e.comp[i] * s;
  return e;
}

ClassP2 ProductElement::t_coefficient(int n) const {
  ClassP2 x;
  const Monomial m = Monomial::var(Var::T, n);
  for (int i = 0; i < 3; ++i) x.c[i] = comp[i].coefficient(m);
  return x;
}

std::string ProductElement::str() const {
  static const char* names[3] = {"1", "h", "h^2"};
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (!s.empty()) s += " ; ";
    s += std::string(names[i]) + ": " + comp[i].str();
  }
  return s;
}

ProductElement cup(const ProductElement& x, const ProductElement& y) {
  const int order = std::min(x.order(), y.order());
  ProductElement r = ProductElement::zero(order);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) r.comp[i + j] += x.comp[i] * y.comp[j];
  return r;
}

ContactAlgebra::ContactAlgebra(int order, const CharNumEngine& eng)
    : ContactAlgebra(build_quantum_potential(order, eng)) {}

ContactAlgebra::ContactAlgebra(QuantumPotential n)
    : n_(std::move(n)), k_(build_contact_potential(n_)) {
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = 0; k < 6; ++k) {
        kp_[i][j][k] = structure_constant(i, j, k, k_);
        if (i != j) kp_[j][i][k] = kp_[i][j][k];
      }
}

const MaskedSeries& ContactAlgebra::kp(int i, int j, int k) const {
  if (i < 0 || i > 2 || j < 0 || j > 2 || k < 0 || k > 5)
    throw std::out_of_range("kp: index out of range");
  return kp_[i][j][k];
}

ProductElement ContactAlgebra::bullet(const ProductElement& x,
                                      const ProductElement& y) const {
  const int order = std::min({x.order(), y.order(), guaranteed_order()});
  ProductElement r = ProductElement::zero(order);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const MaskedSeries prod = x.comp[i] * y.comp[j];
      if (prod.known().is_zero() && prod.fully_known()) continue;
      // T_i bullet T_j lands on T_s with coefficient K_{i j (5-s)}.
      for (int s = 0; s < 3; ++s) r.comp[s] += prod * kp_[i][j][5 - s];
    }
  }
  return r;
}

ProductElement ContactAlgebra::contact(const ProductElement& x,
                                       const ProductElement& y) const {
  return cup(x, y) + bullet(x, y);
}

PointCountProvider default_point_counts() {
  return [](int d) { return kontsevich_direct(d); };
}

namespace {

// Genus-zero invariant of the plane with basis-class insertions:
// n1 copies of h and n2 copies of h^2 (insertions of 1 are handled by the
// callers via the string equation). Nonzero only when n2 = 3d - 1.
Rational plane_invariant(int d, long n_h, long n_h2,
                         const PointCountProvider& n_d) {
  if (n_h2 != 3 * d - 1) return Rational(0);
  Rational r = n_d(d);
  for (long i = 0; i < n_h; ++i) r *= Rational(d);
  return r;
}

}  // namespace

ProductElement quantum_product(const ClassP2& x, const ClassP2& y,
                               const ClassP2& delta, int t_order,
                               const PointCountProvider& n_d) {
  ProductElement r = ProductElement::zero(t_order);

  // Classical part: only the (d, n) = (0, 0) term survives; it is the cup
  // product read through the pairing.
  {
    const ClassP2 classical = cup_p2(x, y);
    for (int i = 0; i < 3; ++i)
      r.comp[i].add_known(Monomial::unit(), classical.c[i]);
  }

  // d >= 1: expand x, y, the basis insertion and the n delta-insertions
  // over {1, h, h^2}; any 1-insertion dies, h-insertions contribute a
  // factor d each, and the h^2 count must be exactly 3d - 1.
  for (int n = 0; n <= t_order; ++n) {
    const Monomial tn = Monomial::var(Var::T, n);
    for (int s = 0; s < 3; ++s) {
      Rational total(0);
      for (int i = 1; i < 3; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 1; j < 3; ++j) {
          if (y.c[j].is_zero()) continue;
          if (s == 0) continue;  // basis insertion 1: string equation
          for (int n1 = 0; n1 <= n; ++n1) {
            const int n2 = n - n1;
            const long n_h = (i == 1) + (j == 1) + (s == 1) + n1;
            const long n_h2 = (i == 2) + (j == 2) + (s == 2) + n2;
            if ((n_h2 + 1) % 3 != 0) continue;
            const int d = static_cast<int>((n_h2 + 1) / 3);
            if (d < 1) continue;
            Rational deltas(1);
            for (int t = 0; t < n1; ++t) deltas *= delta.c[1];
            for (int t = 0; t < n2; ++t) deltas *= delta.c[2];
            if (deltas.is_zero()) continue;
            total += x.c[i] * y.c[j] * deltas *
                     plane_invariant(d, n_h, n_h2, n_d) /
                     (factorial(n1) * factorial(n2));
          }
        }
      }
      // Pairing dual of the basis element s is the basis element 2 - s.
      r.comp[2 - s].add_known(tn, total);
    }
  }
  return r;
}

ProductElement quantum_product(const ProductElement& x,
                               const ProductElement& y, const ClassP2& delta,
                               int t_order, const PointCountProvider& n_d) {
  ProductElement r = ProductElement::zero(t_order);
  const int p_max = std::min(t_order, x.order());
  for (int p = 0; p <= p_max; ++p) {
    const ClassP2 xp = x.t_coefficient(p);
    if (xp.is_zero()) continue;
    const int q_max = std::min(t_order - p, y.order());
    for (int q = 0; q <= q_max; ++q) {
      const ClassP2 yq = y.t_coefficient(q);
      if (yq.is_zero()) continue;
      ProductElement base =
          quantum_product(xp, yq, delta, t_order - p - q, n_d);
      const Monomial shift = Monomial::var(Var::T, p + q);
      for (int i = 0; i < 3; ++i)
        r.comp[i] += base.comp[i].times_term(Rational(1), shift);
    }
  }
  return r;
}

}  // namespace qcp2
