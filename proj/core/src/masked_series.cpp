#include "qcp2/masked_series.hpp"

namespace qcp2 {

std::set<CharKey> MaskedSeries::missing_keys(int up_to_degree) const {
  std::set<CharKey> keys;
  for (const auto& [m, ks] : mask_)
    if (m.total_degree() <= up_to_degree) keys.insert(ks.begin(), ks.end());
  return keys;
}

Rational MaskedSeries::coefficient(const Monomial& m) const {
  if (auto it = mask_.find(m); it != mask_.end())
    throw MissingBaseData(it->second);
  return known_.coefficient(m);
}

void MaskedSeries::mark_unknown(const Monomial& m,
                                const std::set<CharKey>& keys) {
  if (m.total_degree() > order()) return;
  auto [it, inserted] = mask_.emplace(m, keys);
  if (!inserted) it->second.insert(keys.begin(), keys.end());
  // A masked slot holds no number.
  known_.add_term(m, -known_.coefficient(m));
}

MaskedSeries MaskedSeries::truncated(int new_order) const {
  MaskedSeries r(known_.truncated(new_order));
  for (const auto& [m, ks] : mask_)
    if (m.total_degree() <= r.order()) r.mask_.emplace(m, ks);
  return r;
}

MaskedSeries MaskedSeries::operator-() const {
  MaskedSeries r(-known_);
  r.mask_ = mask_;
  return r;
}

void MaskedSeries::prune_mask() {
  std::erase_if(mask_, [this](const auto& e) {
    return e.first.total_degree() > order();
  });
}

MaskedSeries& MaskedSeries::operator+=(const MaskedSeries& o) {
  known_ += o.known_;
  prune_mask();
  for (const auto& [m, ks] : o.mask_) mark_unknown(m, ks);
  return *this;
}

MaskedSeries& MaskedSeries::operator-=(const MaskedSeries& o) {
  known_ -= o.known_;
  prune_mask();
  for (const auto& [m, ks] : o.mask_) mark_unknown(m, ks);
  return *this;
}

MaskedSeries operator*(const MaskedSeries& a, const MaskedSeries& b) {
  MaskedSeries r(a.known() * b.known());
  const int order = r.order();
  // An unknown contaminates every product coefficient it reaches through a
  // stored (hence nonzero) or unknown partner term.
  auto contaminate = [&](const MaskedSeries::Mask& mask,
                         const MaskedSeries& other) {
    for (const auto& [m, ks] : mask) {
      const int dm = m.total_degree();
      for (const auto& [mo, co] : other.known().terms()) {
        if (dm + mo.total_degree() > order) continue;
        r.mark_unknown(m.times(mo), ks);
      }
      for (const auto& [mo, kso] : other.mask()) {
        if (dm + mo.total_degree() > order) continue;
        std::set<CharKey> merged = ks;
        merged.insert(kso.begin(), kso.end());
        r.mark_unknown(m.times(mo), merged);
      }
    }
  };
  contaminate(a.mask(), b);
  contaminate(b.mask(), a);
  return r;
}

MaskedSeries MaskedSeries::scaled(const Rational& c) const {
  MaskedSeries r(known_.scaled(c));
  if (!c.is_zero()) r.mask_ = mask_;
  return r;
}

MaskedSeries MaskedSeries::times_term(const Rational& c,
                                      const Monomial& m) const {
  MaskedSeries r(known_.times_term(c, m));
  if (!c.is_zero())
    for (const auto& [mi, ks] : mask_) r.mark_unknown(mi.times(m), ks);
  return r;
}

MaskedSeries MaskedSeries::slice_zero(std::initializer_list<Var> vars) const {
  MaskedSeries r(known_.slice_zero(vars));
  for (const auto& [m, ks] : mask_) {
    bool keep = true;
    for (Var v : vars)
      if (m.exponent(v) != 0) {
        keep = false;
        break;
      }
    if (keep) r.mark_unknown(m, ks);
  }
  return r;
}

MaskedSeries MaskedSeries::substitute_line(
    const std::map<Var, Rational>& delta) const {
  MaskedSeries r(known_.substitute_line(delta));
  for (const auto& [m, ks] : mask_) {
    Rational mult(1);
    int t_power = 0;
    for (int i = 0; i < kNumVars; ++i) {
      const Var v = static_cast<Var>(i);
      const int e = m.exponent(v);
      if (e == 0) continue;
      t_power += e;
      if (v == Var::T) continue;
      auto it = delta.find(v);
      if (it == delta.end()) throw UnassignedVariable(v);
      for (int j = 0; j < e; ++j) mult *= it->second;
    }
    if (!mult.is_zero()) r.mark_unknown(Monomial::var(Var::T, t_power), ks);
  }
  return r;
}

MaskedSeries MaskedSeries::partial(Var v) const {
  MaskedSeries r(known_.partial(v));
  for (const auto& [m, ks] : mask_) {
    if (m.exponent(v) == 0) continue;
    r.mark_unknown(m.divided_by(v), ks);
  }
  return r;
}

std::string MaskedSeries::str() const {
  std::string s = known_.str();
  if (!mask_.empty()) {
    s += "  [undetermined:";
    for (const auto& [m, ks] : mask_) s += " " + m.str();
    s += "]";
  }
  return s;
}

}  // namespace qcp2
