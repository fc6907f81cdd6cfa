#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "qcp2/rational.hpp"

namespace qcp2 {

struct InvalidDegree : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A class in the cohomology of the plane: c0*1 + c1*h + c2*h^2.
/// h^3 = 0 holds by construction (there is no degree-3 slot).
struct ClassP2 {
  std::array<Rational, 3> c{};

  static ClassP2 one() { return basis(0); }
  static ClassP2 h() { return basis(1); }
  static ClassP2 h2() { return basis(2); }
  static ClassP2 basis(int i);
  static ClassP2 zero() { return {}; }

  bool is_zero() const;
  friend bool operator==(const ClassP2&, const ClassP2&) = default;

  ClassP2 operator+(const ClassP2& o) const;
  ClassP2 operator-(const ClassP2& o) const;
  ClassP2 scaled(const Rational& r) const;

  std::string str() const;
};

/// A class in the cohomology of the point-line incidence variety, over the
/// ordered basis {T0..T5} = {1, h, h^2, hv, hv^2, h^2*hv} where hv denotes
/// the dual-line class.
struct ClassI {
  std::array<Rational, 6> t{};

  static ClassI basis(int i);
  static ClassI zero() { return {}; }

  bool is_zero() const;
  friend bool operator==(const ClassI&, const ClassI&) = default;

  ClassI operator+(const ClassI& o) const;
  ClassI operator-(const ClassI& o) const;
  ClassI scaled(const Rational& r) const;

  std::string str() const;
};

ClassP2 cup_p2(const ClassP2& x, const ClassP2& y);
/// Degree map of the plane: the coefficient of the point class h^2.
/// Non-top-degree parts integrate to 0.
Rational integrate_p2(const ClassP2& x);

/// Cup product on the incidence variety, determined by the relations
/// h^3 = 0, hv^3 = 0 and h*hv = h^2 + hv^2. The basis multiplication
/// table is validated on first use against the pairing, kernel and
/// associativity oracles; see validate_chow_table().
ClassI cup_i(const ClassI& x, const ClassI& y);
/// Degree map of the incidence variety: the coefficient of h^2*hv.
Rational integrate_i(const ClassI& x);

/// p^*: embeds the plane's cohomology as span{T0,T1,T2}.
ClassI pullback_p(const ClassP2& x);
/// p_*: annihilates span{T0,T1,T2}; T3 -> 1, T4 -> h, T5 -> h^2.
ClassP2 pushforward_p(const ClassI& x);

/// Poincare reconstruction through the diagonal: sum_s (integral of
/// x cup T_s) * T_{5-s}. Equal to x for every class.
ClassI diagonal_decompose(const ClassI& x);

/// The class of the lift of a degree-d immersed rational curve:
/// d*T4 + (2d-2)*T2. Throws InvalidDegree for d < 1.
ClassI curve_class(int d);

/// Re-derives the oracle consequences of the multiplication table: the
/// anti-diagonal pairing, the p_* kernel characterization, commutativity
/// and associativity on all basis triples. Throws std::logic_error if any
/// fails. Runs automatically before the first cup_i product.
void validate_chow_table();

}  // namespace qcp2
