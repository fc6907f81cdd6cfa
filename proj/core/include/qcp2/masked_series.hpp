#pragma once

#include <map>
#include <set>

#include "qcp2/charnum.hpp"
#include "qcp2/series.hpp"

namespace qcp2 {

/// A truncated series some of whose coefficients are undetermined because
/// the base store lacks the characteristic numbers they expand into. Each
/// undetermined monomial carries the exact set of missing base keys, and
/// the mask propagates conservatively through ring operations: a sum or
/// product coefficient touched by an undetermined term (with a nonzero
/// partner) is undetermined, and its key set is the union of the
/// contributors'.
class MaskedSeries {
 public:
  using Mask = std::map<Monomial, std::set<CharKey>>;

  MaskedSeries() : known_(-1) {}
  explicit MaskedSeries(int order) : known_(order) {}
  MaskedSeries(TruncatedSeries known) : known_(std::move(known)) {}

  static MaskedSeries zero(int order) { return MaskedSeries(order); }
  static MaskedSeries constant(const Rational& c, int order) {
    return MaskedSeries(TruncatedSeries::constant(c, order));
  }

  int order() const { return known_.order(); }
  const TruncatedSeries& known() const { return known_; }
  const Mask& mask() const { return mask_; }
  bool fully_known() const { return mask_.empty(); }

  /// The union of all blocking keys below the given degree.
  std::set<CharKey> missing_keys(int up_to_degree) const;

  bool is_undetermined(const Monomial& m) const {
    return mask_.contains(m);
  }
  /// Determined coefficient; throws MissingBaseData if masked and
  /// AboveTruncation above the order.
  Rational coefficient(const Monomial& m) const;

  /// Marks a monomial undetermined (dropping any known value it had).
  /// Silently ignores monomials above the truncation order.
  void mark_unknown(const Monomial& m, const std::set<CharKey>& keys);
  void add_known(const Monomial& m, const Rational& c) {
    if (!mask_.contains(m)) known_.add_term(m, c);
  }

  MaskedSeries truncated(int new_order) const;

  MaskedSeries operator-() const;
  MaskedSeries& operator+=(const MaskedSeries& o);
  MaskedSeries& operator-=(const MaskedSeries& o);
  friend MaskedSeries operator+(MaskedSeries a, const MaskedSeries& b) {
    return a += b;
  }
  friend MaskedSeries operator-(MaskedSeries a, const MaskedSeries& b) {
    return a -= b;
  }
  friend MaskedSeries operator*(const MaskedSeries& a, const MaskedSeries& b);

  MaskedSeries scaled(const Rational& c) const;
  /// See TruncatedSeries::times_term; raises the order by deg(m).
  MaskedSeries times_term(const Rational& c, const Monomial& m) const;
  MaskedSeries partial(Var v) const;
  /// Keeps only terms and mask entries free of the given variables.
  MaskedSeries slice_zero(std::initializer_list<Var> vars) const;
  /// Substitution v -> delta[v] * T. A masked monomial whose substituted
  /// multiplier vanishes contributes nothing; otherwise it poisons its
  /// T-power.
  MaskedSeries substitute_line(const std::map<Var, Rational>& delta) const;

  std::string str() const;

 private:
  void prune_mask();

  TruncatedSeries known_;
  Mask mask_;
};

}  // namespace qcp2
