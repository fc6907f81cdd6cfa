#include <doctest.h>

#include "qcp2/potentials.hpp"

using namespace qcp2;

namespace {
Monomial m(const char* s) { return Monomial::parse(s); }
}  // namespace

TEST_CASE("degree reach of the quantum potential") {
  CHECK(quantum_potential_d_max(1) == 1);
  CHECK(quantum_potential_d_max(2) == 1);
  CHECK(quantum_potential_d_max(3) == 2);
  CHECK(quantum_potential_d_max(5) == 3);
  CHECK(quantum_potential_d_max(6) == 4);
}

TEST_CASE("quantum potential coefficients") {
  CharNumEngine eng(default_base());
  const QuantumPotential n = build_quantum_potential(4, eng);
  CHECK(n.order == 4);
  CHECK(n.d_max == 3);

  // N_1(0,0,1) = 1 sits on y5
  CHECK(n.series.coefficient(m("y5")) == Rational(1));
  // N_1(2,0,0)/2! on y2^2
  CHECK(n.series.coefficient(m("y2^2")) == Rational(1, 2));
  // the d = 1 exponential prefactor: coefficient of y2^2 y1^2 is
  // N_1(2,0,0)/2! * 1^2/2!
  CHECK(n.series.coefficient(m("y1^2*y2^2")) == Rational(1, 4));
  // degree-2 block: N_2(5,0,0)/5! * exp(2y1 + 2y3) has no y1/y3 part at
  // lowest order... its pure y2^5 monomial is above order 4, but the flag
  // value N_2(3,0,1) = 1 contributes y2^3 y5 / 3! at order 4
  CHECK(n.series.coefficient(m("y2^3*y5")) == Rational(1, 6));

  // no monomial mentions y0 (string equation)
  for (const auto& [mm, c] : n.series.known().terms())
    CHECK(mm.exponent(Var::y0) == 0);
  for (const auto& [mm, keys] : n.series.mask())
    CHECK(mm.exponent(Var::y0) == 0);
}

TEST_CASE("quantum potential marks what the store cannot determine") {
  CharNumEngine eng(default_base());
  const QuantumPotential n = build_quantum_potential(4, eng);
  // the degree-2 flag numbers with a <= 2 are absent from the shipped
  // store, so e.g. N_2(1,0,2) leaves y2*y5^2 undetermined
  CHECK(n.series.is_undetermined(m("y2*y5^2")));
  CHECK_FALSE(n.skipped.empty());
  for (const auto& key : n.skipped) CHECK_FALSE(eng.try_value(key).value);

  CHECK_THROWS_AS(require_complete(n), MissingBaseData);
  try {
    require_complete(n);
  } catch (const MissingBaseData& e) {
    for (const auto& k : e.keys) {
      CHECK(k.a <= 2);
      CHECK_FALSE(eng.base().lookup(k).has_value());
    }
  }

  // order 2 only needs the degree-1 block: complete
  const QuantumPotential n2 = build_quantum_potential(2, eng);
  CHECK(n2.series.fully_known());
  CHECK_NOTHROW(require_complete(n2));
}

TEST_CASE("ramification potential closed form") {
  const TruncatedSeries r = build_ramification_potential(5);
  CHECK(r.coefficient(m("z3*z5")) == Rational(1, 2));
  CHECK(r.coefficient(m("z4^2")) == Rational(1, 4));
  CHECK(r.coefficient(m("z4^2*y3")) == Rational(1, 2));
  CHECK(r.coefficient(m("z3^2*y5")) == Rational(1, 2));
  CHECK(r.coefficient(m("z3^2*y4^2")) == Rational(1, 2));
  CHECK(r.coefficient(m("z3*z4*y4")) == Rational(1));
  // every term carries z: evaluation at z = 0 kills the series
  for (const auto& [mm, c] : r.terms()) CHECK(mm.degree_in_z() > 0);
  // quadratic in z, nothing along z0, z1, z2
  for (const auto& [mm, c] : r.terms()) {
    CHECK(mm.degree_in_z() == 2);
    CHECK(mm.exponent(Var::z0) == 0);
    CHECK(mm.exponent(Var::z1) == 0);
    CHECK(mm.exponent(Var::z2) == 0);
  }
}

TEST_CASE("z4-derivative of the ramification potential") {
  // (z3*y4 + z4/2) * exp(2*y3)
  const TruncatedSeries r = build_ramification_potential(6);
  const TruncatedSeries dz4 = r.partial(Var::z4);
  TruncatedSeries expect(5);
  expect.add_term(m("z3*y4"), Rational(1));
  expect.add_term(m("z4"), Rational(1, 2));
  TruncatedSeries e_arg(5);
  e_arg.add_term(m("y3"), Rational(2));
  CHECK(agree_to_order(dz4, expect * e_arg.exp(), 5));
}

TEST_CASE("contact potential structure") {
  CharNumEngine eng(default_base());
  const QuantumPotential n = build_quantum_potential(5, eng);
  const ContactPotential k = build_contact_potential(n);
  CHECK(k.order == 5);
  CHECK(k.full.order() == 4);

  // z-linear: every monomial has z-degree exactly one, never z0, z1, z2
  for (const auto& [mm, c] : k.full.known().terms()) {
    CHECK(mm.degree_in_z() == 1);
    CHECK(mm.exponent(Var::z0) == 0);
    CHECK(mm.exponent(Var::z1) == 0);
    CHECK(mm.exponent(Var::z2) == 0);
  }
  for (const auto& [mm, keys] : k.full.mask()) CHECK(mm.degree_in_z() == 1);

  // dK/dz0 = 0
  CHECK(k.full.partial(Var::z0).known().is_zero());
  CHECK(k.full.partial(Var::z0).fully_known());
  CHECK(k.z_slice[0].known().is_zero());
  CHECK(k.z_slice[1].known().is_zero());
  CHECK(k.z_slice[2].known().is_zero());

  // the z5-component is dN/dy2 * exp(2y3): its y2 coefficient at origin
  // grade is N_1(2,0,0) = 1
  CHECK(k.z_slice[5].coefficient(m("y2")) == Rational(1));
  // coefficient of y2*z5 in the assembled series
  CHECK(k.full.coefficient(m("y2*z5")) == Rational(1));

  // slices agree with the assembled series
  for (int kk = 3; kk <= 5; ++kk) {
    const MaskedSeries from_full = k.full.partial(z_var(kk));
    for (const auto& [mm, c] : from_full.known().terms())
      CHECK(k.z_slice[kk].coefficient(mm) == c);
  }
}

TEST_CASE("structure constants") {
  CharNumEngine eng(default_base());
  const ContactPotential k =
      build_contact_potential(build_quantum_potential(5, eng));

  // closure: nothing maps outside the plane's cohomology
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int kk = 0; kk <= 2; ++kk) {
        const MaskedSeries s = structure_constant(i, j, kk, k);
        CHECK(s.known().is_zero());
        CHECK(s.fully_known());
      }

  // symmetry in (i, j)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int kk = 3; kk <= 5; ++kk)
        CHECK(structure_constant(i, j, kk, k).known() ==
              structure_constant(j, i, kk, k).known());

  // identity direction is flat: K_{0jk} = 0
  for (int j = 0; j < 3; ++j)
    for (int kk = 0; kk <= 5; ++kk) {
      const MaskedSeries s = structure_constant(0, j, kk, k);
      CHECK(s.known().is_zero());
      CHECK(s.fully_known());
    }

  // values at the origin: K_{215}(0) = N_1(2,0,0) = 1, K_{214}(0) = 0
  CHECK(structure_constant(2, 1, 5, k).coefficient(Monomial::unit()) ==
        Rational(1));
  CHECK(structure_constant(2, 1, 4, k).coefficient(Monomial::unit()) ==
        Rational(0));
}
