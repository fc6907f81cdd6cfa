#include "qcp2/potentials.hpp"

#include <map>

namespace qcp2 {

int quantum_potential_d_max(int order) {
  // minimal block degree ceil((3d-1)/2) <= order  <=>  3d - 1 <= 2*order
  return order >= 1 ? (2 * order + 1) / 3 : 0;
}

QuantumPotential build_quantum_potential(int order, const CharNumEngine& eng) {
  QuantumPotential pot{MaskedSeries(order), order,
                       quantum_potential_d_max(order), {}};

  std::map<std::pair<int, int>, TruncatedSeries> exp_cache;
  auto exp_factor = [&](int d, int rem) -> const TruncatedSeries& {
    auto it = exp_cache.find({d, rem});
    if (it == exp_cache.end()) {
      TruncatedSeries arg(rem);
      arg.add_term(Monomial::var(Var::y1), Rational(d));
      arg.add_term(Monomial::var(Var::y3), Rational(2 * d - 2));
      it = exp_cache.emplace(std::pair{d, rem}, arg.exp()).first;
    }
    return it->second;
  };

  for (int d = 1; d <= pot.d_max; ++d) {
    const int dim = 3 * d - 1;
    for (int c = 0; 2 * c <= dim; ++c) {
      for (int b = 0; b + 2 * c <= dim; ++b) {
        const int a = dim - b - 2 * c;
        const CharKey key{d, a, b, c};
        const int min_deg = a + b + c;
        if (min_deg > order) continue;

        const Monomial base = Monomial::of(
            {{Var::y2, a}, {Var::y4, b}, {Var::y5, c}});
        const TruncatedSeries& ef = exp_factor(d, order - min_deg);
        const auto outcome = eng.try_value(key);
        if (outcome.value) {
          const Rational coeff = *outcome.value / (factorial(a) *
                                                   factorial(b) *
                                                   factorial(c));
          if (coeff.is_zero()) continue;
          for (const auto& [m, ce] : ef.terms())
            pot.series.add_known(base.times(m), coeff * ce);
        } else {
          pot.skipped.push_back(key);
          for (const auto& [m, ce] : ef.terms())
            pot.series.mark_unknown(base.times(m), outcome.missing);
        }
      }
    }
  }
  return pot;
}

void require_complete(const QuantumPotential& n) {
  if (n.series.fully_known()) return;
  throw MissingBaseData(n.series.missing_keys(n.order));
}

TruncatedSeries build_ramification_potential(int order) {
  TruncatedSeries poly(order);
  const Rational half(1, 2);
  poly.add_term(Monomial::of({{Var::z3, 2}, {Var::y4, 2}}), half);
  poly.add_term(Monomial::of({{Var::z3, 2}, {Var::y5, 1}}), half);
  poly.add_term(
      Monomial::of({{Var::z3, 1}, {Var::z4, 1}, {Var::y4, 1}}), Rational(1));
  poly.add_term(Monomial::of({{Var::z3, 1}, {Var::z5, 1}}), half);
  poly.add_term(Monomial::of({{Var::z4, 2}}), Rational(1, 4));

  TruncatedSeries exp_arg(order);
  exp_arg.add_term(Monomial::var(Var::y3), Rational(2));
  return poly * exp_arg.exp();
}

ContactPotential build_contact_potential(const QuantumPotential& n) {
  const int d_order = n.order;  // requested truncation for K is D
  ContactPotential kpot{MaskedSeries(d_order - 1),
                        {MaskedSeries(d_order - 1), MaskedSeries(d_order - 1),
                         MaskedSeries(d_order - 1), MaskedSeries(d_order - 1),
                         MaskedSeries(d_order - 1), MaskedSeries(d_order - 1)},
                        d_order};

  // R is z-quadratic, so d2R/dz_u dz_k is an exact pure-y series; building
  // the slices through it keeps them one order better than reading them
  // off the assembled z-carrying product.
  const TruncatedSeries r = build_ramification_potential(d_order + 3);
  std::array<MaskedSeries, 6> partials;  // dN/dy_s at order D-1
  for (int s = 0; s < 6; ++s) partials[s] = n.series.partial(y_var(s));

  for (int k = 0; k < 6; ++k) {
    MaskedSeries slice(d_order - 1);
    for (int s = 0; s < 6; ++s) {
      const TruncatedSeries g =
          r.partial(z_var(5 - s)).partial(z_var(k)).truncated(d_order - 1);
      if (g.is_zero()) continue;
      for (const auto& [m, c] : g.terms())
        if (m.degree_in_z() != 0)
          throw std::logic_error(
              "contact potential: R is not z-quadratic as expected");
      slice += partials[s] * MaskedSeries(g);
    }
    slice = slice.scaled(Rational(2));
    if (k <= 2 && !(slice.known().is_zero() && slice.fully_known()))
      throw std::logic_error(
          "contact potential: unexpected z" + std::to_string(k) +
          " component; closure into the plane's cohomology fails");
    kpot.z_slice[k] = slice;
    kpot.full +=
        slice.times_term(Rational(1), Monomial::var(z_var(k)))
            .truncated(d_order - 1);
  }
  return kpot;
}

MaskedSeries structure_constant(int i, int j, int k,
                                const ContactPotential& kpot) {
  if (i < 0 || i > 2 || j < 0 || j > 2 || k < 0 || k > 5)
    throw std::out_of_range("structure_constant: index out of range");
  return kpot.z_slice[k].partial(y_var(i)).partial(y_var(j));
}

}  // namespace qcp2
