#include "qcp2/verify.hpp"

#include <set>

#include <json.hpp>

namespace qcp2 {

namespace {
using ojson = nlohmann::ordered_json;

ojson key_json(const CharKey& k) {
  ojson j;
  j["d"] = k.d;
  j["a"] = k.a;
  j["b"] = k.b;
  j["c"] = k.c;
  return j;
}
}  // namespace

std::string Report::json() const {
  ojson j;
  j["check"] = check;
  j["order"] = order;
  j["status"] = pass ? "pass" : "fail";
  j["checked"] = checked;
  ojson sk = ojson::array();
  for (const auto& s : skipped) {
    ojson e;
    e["monomial"] = s.monomial;
    ojson keys = ojson::array();
    for (const auto& k : s.missing) keys.push_back(key_json(k));
    e["missing"] = std::move(keys);
    sk.push_back(std::move(e));
  }
  j["skipped"] = std::move(sk);
  ojson fl = ojson::array();
  for (const auto& f : failures) {
    ojson e;
    e["monomial"] = f.monomial;
    e["lhs"] = f.lhs;
    e["rhs"] = f.rhs;
    fl.push_back(std::move(e));
  }
  j["failures"] = std::move(fl);
  return j.dump(2);
}

std::string Report::summary() const {
  std::string s = check + ": " + (pass ? "pass" : "FAIL") + " (order " +
                  std::to_string(order) + ", " + std::to_string(checked) +
                  " coefficients checked, " + std::to_string(skipped.size()) +
                  " skipped";
  if (!failures.empty())
    s += ", " + std::to_string(failures.size()) + " failures";
  s += ")";
  return s;
}

void compare_series(Report& report, const std::string& where,
                    const MaskedSeries& lhs, const MaskedSeries& rhs,
                    int order, bool determinable_only) {
  if (lhs.order() < order || rhs.order() < order)
    throw std::logic_error("compare_series: series order below the "
                           "requested comparison order");

  std::set<Monomial> monomials;
  for (const auto& [m, c] : lhs.known().terms())
    if (m.total_degree() <= order) monomials.insert(m);
  for (const auto& [m, c] : rhs.known().terms())
    if (m.total_degree() <= order) monomials.insert(m);
  for (const auto& [m, ks] : lhs.mask())
    if (m.total_degree() <= order) monomials.insert(m);
  for (const auto& [m, ks] : rhs.mask())
    if (m.total_degree() <= order) monomials.insert(m);

  for (const Monomial& m : monomials) {
    const std::string label =
        where.empty() ? m.str() : where + " " + m.str();
    if (lhs.is_undetermined(m) || rhs.is_undetermined(m)) {
      std::set<CharKey> keys;
      if (auto it = lhs.mask().find(m); it != lhs.mask().end())
        keys.insert(it->second.begin(), it->second.end());
      if (auto it = rhs.mask().find(m); it != rhs.mask().end())
        keys.insert(it->second.begin(), it->second.end());
      if (determinable_only) {
        report.skipped.push_back(
            Report::Skip{label, {keys.begin(), keys.end()}});
      } else {
        report.pass = false;
        report.failures.push_back(
            Report::Failure{label, "undetermined", "undetermined"});
      }
      continue;
    }
    ++report.checked;
    const Rational l = lhs.known().coefficient(m);
    const Rational r = rhs.known().coefficient(m);
    if (l != r) {
      report.pass = false;
      report.failures.push_back(Report::Failure{label, l.str(), r.str()});
    }
  }
}

Report verify_quantum_associativity(int t_order, const ClassP2& delta,
                                    const PointCountProvider& n_d) {
  Report report;
  report.check = "quantum-associativity";
  report.order = t_order;

  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        const ProductElement ex =
            ProductElement::from_class(ClassP2::basis(x), t_order);
        const ProductElement ey =
            ProductElement::from_class(ClassP2::basis(y), t_order);
        const ProductElement ez =
            ProductElement::from_class(ClassP2::basis(z), t_order);
        const ProductElement lhs = quantum_product(
            quantum_product(ex, ey, delta, t_order, n_d), ez, delta, t_order,
            n_d);
        const ProductElement rhs = quantum_product(
            ex, quantum_product(ey, ez, delta, t_order, n_d), delta, t_order,
            n_d);
        static const char* comp_names[3] = {"[1]", "[h]", "[h^2]"};
        const std::string triple = "(T" + std::to_string(x) + "*T" +
                                   std::to_string(y) + "*T" +
                                   std::to_string(z) + ")";
        for (int i = 0; i < 3; ++i)
          compare_series(report, triple + comp_names[i], lhs.comp[i],
                         rhs.comp[i], t_order);
      }
  return report;
}

Report verify_contact_associativity(int order, const CharNumEngine& eng) {
  return verify_contact_associativity(ContactAlgebra(order, eng));
}

Report verify_contact_associativity(const ContactAlgebra& algebra) {
  Report report;
  report.check = "contact-associativity";
  const int ord = algebra.guaranteed_order();
  report.order = ord;
  const int elem_order = algebra.order();

  static const char* comp_names[3] = {"[1]", "[h]", "[h^2]"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const ProductElement ti =
            ProductElement::from_class(ClassP2::basis(i), elem_order);
        const ProductElement tj =
            ProductElement::from_class(ClassP2::basis(j), elem_order);
        const ProductElement tk =
            ProductElement::from_class(ClassP2::basis(k), elem_order);
        const ProductElement lhs =
            algebra.contact(algebra.contact(ti, tj), tk);
        const ProductElement rhs =
            algebra.contact(ti, algebra.contact(tj, tk));
        const std::string triple = "(T" + std::to_string(i) + "*T" +
                                   std::to_string(j) + "*T" +
                                   std::to_string(k) + ")";
        for (int s = 0; s < 3; ++s)
          compare_series(report, triple + comp_names[s], lhs.comp[s],
                         rhs.comp[s], ord);
      }

  // Scalar consequence of (T1*T1)*T2 = T1*(T1*T2): equate the
  // identity-component coefficients.
  const MaskedSeries lhs = algebra.kp(1, 1, 4) * algebra.kp(1, 2, 5) +
                           algebra.kp(2, 2, 5) +
                           algebra.kp(1, 1, 3) * algebra.kp(2, 2, 5);
  const MaskedSeries rhs = algebra.kp(1, 1, 5) * algebra.kp(1, 2, 4) +
                           algebra.kp(1, 2, 5) * algebra.kp(1, 2, 3);
  compare_series(report, "(T0-coefficient identity)", lhs, rhs, ord);
  return report;
}

namespace {

struct PdeSides {
  MaskedSeries lhs;
  MaskedSeries rhs;
};

PdeSides pde_sides(const QuantumPotential& n) {
  const Var y1 = Var::y1, y2 = Var::y2;
  const MaskedSeries n111 =
      n.series.partial(y1).partial(y1).partial(y1);
  const MaskedSeries n112 =
      n.series.partial(y1).partial(y1).partial(y2);
  const MaskedSeries n122 =
      n.series.partial(y1).partial(y2).partial(y2);
  const MaskedSeries n222 =
      n.series.partial(y2).partial(y2).partial(y2);

  const int ord = n.order - 3;
  TruncatedSeries exp_arg(ord >= 0 ? ord : 0);
  exp_arg.add_term(Monomial::var(Var::y3), Rational(2));
  const MaskedSeries e2(exp_arg.exp());

  const MaskedSeries two_y4(
      TruncatedSeries::term(Rational(2), Monomial::var(Var::y4), ord + 2));
  TruncatedSeries quad(ord + 2);
  quad.add_term(Monomial::of({{Var::y4, 2}}), Rational(2));
  quad.add_term(Monomial::var(Var::y5), Rational(2));
  const MaskedSeries two_y4sq_plus_two_y5(quad);

  MaskedSeries rhs = n112 * n112 - n111 * n122 +
                     two_y4 * (n112 * n122 - n111 * n222) +
                     two_y4sq_plus_two_y5 * (n122 * n122 - n112 * n222);
  rhs = e2 * rhs;
  return PdeSides{n222, rhs};
}

}  // namespace

Report verify_pde(int order, const CharNumEngine& eng,
                  PdeRestriction restriction, bool determinable_only) {
  const QuantumPotential n = build_quantum_potential(order, eng);
  PdeSides sides = pde_sides(n);

  Report report;
  report.order = order - 3;
  switch (restriction) {
    case PdeRestriction::none:
      report.check = "pde";
      break;
    case PdeRestriction::no_y3_y5:
      report.check = "pde[y3=y5=0]";
      sides.lhs = sides.lhs.slice_zero({Var::y3, Var::y5});
      sides.rhs = sides.rhs.slice_zero({Var::y3, Var::y5});
      break;
    case PdeRestriction::no_y3_y4_y5:
      report.check = "pde[y3=y4=y5=0]";
      sides.lhs = sides.lhs.slice_zero({Var::y3, Var::y4, Var::y5});
      sides.rhs = sides.rhs.slice_zero({Var::y3, Var::y4, Var::y5});
      break;
  }
  compare_series(report, "", sides.lhs, sides.rhs, report.order,
                 determinable_only);
  return report;
}

Rational pde_extract_charnum(const CharKey& key, const CharNumEngine& eng) {
  if (!key.dimension_ok()) throw InvalidKey(key);
  if (key.a < 3)
    throw std::invalid_argument(
        "pde_extract_charnum: the differential equation only determines "
        "keys with a >= 3");

  const int target_deg = (key.a - 3) + key.b + key.c;

  // Slice of d^(r+s) N / dy1^r dy2^s at y1 = y3 = 0, grades below key.d
  // only. Each key contributes d^r * N * y2^(a-s)/(a-s)! * y4^b/b! *
  // y5^c/c!.
  auto slice = [&](int r, int s) {
    MaskedSeries out(target_deg);
    for (int d = 1; d < key.d; ++d) {
      const int dim = 3 * d - 1;
      for (int c = 0; 2 * c <= dim; ++c)
        for (int b = 0; b + 2 * c <= dim; ++b) {
          const int a = dim - b - 2 * c;
          if (a < s || (a - s) + b + c > target_deg) continue;
          Rational d_pow(1);
          for (int t = 0; t < r; ++t) d_pow *= Rational(d);
          const Monomial m = Monomial::of(
              {{Var::y2, a - s}, {Var::y4, b}, {Var::y5, c}});
          const auto outcome = eng.try_value({d, a, b, c});
          if (outcome.value) {
            out.add_known(m, d_pow * *outcome.value /
                                 (factorial(a - s) * factorial(b) *
                                  factorial(c)));
          } else {
            out.mark_unknown(m, outcome.missing);
          }
        }
    }
    return out;
  };

  const MaskedSeries n111 = slice(3, 0);
  const MaskedSeries n112 = slice(2, 1);
  const MaskedSeries n122 = slice(1, 2);
  const MaskedSeries n222 = slice(0, 3);

  const MaskedSeries two_y4(
      TruncatedSeries::term(Rational(2), Monomial::var(Var::y4),
                            target_deg + 1));
  TruncatedSeries quad(target_deg + 1);
  quad.add_term(Monomial::of({{Var::y4, 2}}), Rational(2));
  quad.add_term(Monomial::var(Var::y5), Rational(2));

  const MaskedSeries rhs = n112 * n112 - n111 * n122 +
                           two_y4 * (n112 * n122 - n111 * n222) +
                           MaskedSeries(quad) * (n122 * n122 - n112 * n222);

  const Monomial target = Monomial::of(
      {{Var::y2, key.a - 3}, {Var::y4, key.b}, {Var::y5, key.c}});
  // coefficient() raises MissingBaseData with the blocking keys if masked.
  const Rational coeff = rhs.coefficient(target);
  return coeff * factorial(key.a - 3) * factorial(key.b) * factorial(key.c);
}

RingPresentation ring_presentation(int order, const CharNumEngine& eng) {
  return ring_presentation(build_quantum_potential(order, eng));
}

RingPresentation ring_presentation(const QuantumPotential& n) {
  const Var y1 = Var::y1, y2 = Var::y2;
  const MaskedSeries n111 =
      n.series.partial(y1).partial(y1).partial(y1);
  const MaskedSeries n112 =
      n.series.partial(y1).partial(y1).partial(y2);
  const MaskedSeries n122 =
      n.series.partial(y1).partial(y2).partial(y2);

  const int ord = n.order - 3;
  TruncatedSeries e2_arg(ord >= 0 ? ord : 0);
  e2_arg.add_term(Monomial::var(Var::y3), Rational(2));
  const MaskedSeries e2(e2_arg.exp());
  TruncatedSeries e4_arg(ord >= 0 ? ord : 0);
  e4_arg.add_term(Monomial::var(Var::y3), Rational(4));
  const MaskedSeries e4(e4_arg.exp());

  const MaskedSeries four_y4(
      TruncatedSeries::term(Rational(4), Monomial::var(Var::y4), ord + 2));
  const MaskedSeries two_y4(
      TruncatedSeries::term(Rational(2), Monomial::var(Var::y4), ord + 2));
  TruncatedSeries quad_plus(ord + 2);
  quad_plus.add_term(Monomial::of({{Var::y4, 2}}), Rational(2));
  quad_plus.add_term(Monomial::var(Var::y5), Rational(2));
  const MaskedSeries two_y4sq_plus_two_y5(quad_plus);
  // The h-coefficient of h*h*h forces 2y4^2 - 2y5 here: expanding the
  // product against the structure constants leaves the discriminant
  // multiplied by u^2 - q with u = 2y4, q = 2y4^2 + 2y5.
  TruncatedSeries quad_minus(ord + 2);
  quad_minus.add_term(Monomial::of({{Var::y4, 2}}), Rational(2));
  quad_minus.add_term(Monomial::var(Var::y5), Rational(-2));
  const MaskedSeries two_y4sq_minus_two_y5(quad_minus);

  const MaskedSeries disc = n111 * n122 - n112 * n112;

  RingPresentation p{
      e2 * n122 + e4 * disc * two_y4,
      e2 * (n112.scaled(Rational(2)) + two_y4 * n122) +
          e4 * disc * two_y4sq_minus_two_y5,
      e2 * (n111 + four_y4 * n112 + two_y4sq_plus_two_y5 * n122),
      ord,
  };
  return p;
}

Report verify_presentation(int order, const CharNumEngine& eng) {
  return verify_presentation(ContactAlgebra(order, eng));
}

Report verify_presentation(const ContactAlgebra& algebra) {
  Report report;
  report.check = "presentation";
  const int ord = algebra.guaranteed_order();
  report.order = ord;

  const RingPresentation xi = ring_presentation(algebra.quantum_potential());

  const int elem_order = algebra.order();
  const ProductElement one =
      ProductElement::from_class(ClassP2::one(), elem_order);
  const ProductElement h =
      ProductElement::from_class(ClassP2::h(), elem_order);
  const ProductElement hh = algebra.contact(h, h);
  const ProductElement hhh = algebra.contact(hh, h);

  const ProductElement combination = hh.times_series(xi.xi2) +
                                     h.times_series(xi.xi1) +
                                     one.times_series(xi.xi0);
  static const char* comp_names[3] = {"[1]", "[h]", "[h^2]"};
  for (int s = 0; s < 3; ++s)
    compare_series(report, comp_names[s], hhh.comp[s], combination.comp[s],
                   ord);
  return report;
}

}  // namespace qcp2
