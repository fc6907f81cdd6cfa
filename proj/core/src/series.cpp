#include "qcp2/series.hpp"

#include <algorithm>
#include <vector>

namespace qcp2 {

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s.add_term(Monomial::unit(), c);
  return s;
}

TruncatedSeries TruncatedSeries::term(const Rational& c, const Monomial& m,
                                      int order) {
  TruncatedSeries s(order);
  s.add_term(m, c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(Var v, int order) {
  return term(Rational(1), Monomial::var(v), order);
}

Rational TruncatedSeries::coefficient(const Monomial& m) const {
  if (m.total_degree() > order_)
    throw AboveTruncation("coefficient of " + m.str() +
                          " is above the truncation order " +
                          std::to_string(order_));
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  TruncatedSeries s(std::min(order_, new_order));
  for (const auto& [m, c] : terms_) s.add_term(m, c);
  return s;
}

void TruncatedSeries::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero() || m.total_degree() > order_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s(order_);
  for (const auto& [m, c] : terms_) s.terms_.emplace(m, -c);
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order_ < order_) {
    // Closed under the weaker guarantee.
    *this = truncated(o.order_);
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order_ < order_) {
    *this = truncated(o.order_);
  }
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries r(order);
  if (a.is_zero() || b.is_zero() || order < 0) return r;

  // Degree-sorted views let the inner loop stop as soon as the product
  // degree would exceed the truncation bound.
  using Entry = std::pair<const Monomial*, const Rational*>;
  auto sorted_by_degree = [](const TruncatedSeries& s) {
    std::vector<Entry> v;
    v.reserve(s.terms().size());
    for (const auto& [m, c] : s.terms()) v.emplace_back(&m, &c);
    std::stable_sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) {
      return x.first->total_degree() < y.first->total_degree();
    });
    return v;
  };
  const auto av = sorted_by_degree(a);
  const auto bv = sorted_by_degree(b);

  for (const auto& [ma, ca] : av) {
    const int da = ma->total_degree();
    if (da > order) break;
    for (const auto& [mb, cb] : bv) {
      if (da + mb->total_degree() > order) break;
      r.add_term(ma->times(*mb), *ca * *cb);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries s(order_);
  if (c.is_zero()) return s;
  for (const auto& [m, coeff] : terms_) s.terms_.emplace(m, coeff * c);
  return s;
}

TruncatedSeries TruncatedSeries::times_term(const Rational& c,
                                            const Monomial& m) const {
  TruncatedSeries s(order_ < 0 ? order_ : order_ + m.total_degree());
  if (c.is_zero()) return s;
  for (const auto& [mi, ci] : terms_) s.terms_.emplace(mi.times(m), ci * c);
  return s;
}

TruncatedSeries TruncatedSeries::partial(Var v) const {
  TruncatedSeries s(order_ - 1);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    s.add_term(m.divided_by(v), c * Rational(e));
  }
  return s;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!constant_term().is_zero())
    throw NonzeroConstantTerm("series exp: nonzero constant term");
  TruncatedSeries acc = constant(Rational(1), order_);
  TruncatedSeries result = acc;
  // f^k has minimal degree >= k, so the loop is finite at any order.
  for (int k = 1; k <= order_; ++k) {
    acc = acc * *this;
    if (acc.is_zero()) break;
    result += acc.scaled(Rational(1) / factorial(k));
  }
  return result;
}

TruncatedSeries TruncatedSeries::substitute_line(
    const std::map<Var, Rational>& delta) const {
  TruncatedSeries s(order_);
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    int t_power = 0;
    for (int i = 0; i < kNumVars; ++i) {
      const Var v = static_cast<Var>(i);
      const int e = m.exponent(v);
      if (e == 0) continue;
      if (v == Var::T) {
        t_power += e;
        continue;
      }
      auto it = delta.find(v);
      if (it == delta.end()) throw UnassignedVariable(v);
      for (int j = 0; j < e; ++j) coeff *= it->second;
      t_power += e;
    }
    s.add_term(Monomial::var(Var::T, t_power), coeff);
  }
  return s;
}

TruncatedSeries TruncatedSeries::slice_zero(
    std::initializer_list<Var> vars) const {
  TruncatedSeries s(order_);
  for (const auto& [m, c] : terms_) {
    bool keep = true;
    for (Var v : vars)
      if (m.exponent(v) != 0) {
        keep = false;
        break;
      }
    if (keep) s.terms_.emplace(m, c);
  }
  return s;
}

std::string TruncatedSeries::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str();
    if (!m.is_unit()) {
      s += "*";
      s += m.str();
    }
  }
  return s;
}

bool agree_to_order(const TruncatedSeries& a, const TruncatedSeries& b,
                    int ord) {
  if (a.order() < ord || b.order() < ord) return false;
  for (const auto& [m, c] : a.terms())
    if (m.total_degree() <= ord && b.coefficient(m) != c) return false;
  for (const auto& [m, c] : b.terms())
    if (m.total_degree() <= ord && a.coefficient(m) != c) return false;
  return true;
}

}  // namespace qcp2
