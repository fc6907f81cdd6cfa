#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qcp2/monomial.hpp"
#include "qcp2/rational.hpp"

namespace qcp2 {

struct AboveTruncation : std::logic_error {
  using std::logic_error::logic_error;
};

struct NonzeroConstantTerm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnassignedVariable : std::invalid_argument {
  explicit UnassignedVariable(Var v)
      : std::invalid_argument("series substitution: no assignment for " +
                              std::string(var_name(v))),
        var(v) {}
  Var var;
};

/// Sparse multivariate formal power series over Rational, truncated by
/// total degree. A series of order D guarantees every coefficient of total
/// degree <= D; terms beyond D are discarded on construction and by every
/// operation. Order -1 means "no coefficient guaranteed" (the result of
/// differentiating an order-0 truncation).
///
/// Representation is canonical: no stored zero coefficients, no stored
/// terms above the order, deterministic (ordered) term iteration.
class TruncatedSeries {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit TruncatedSeries(int order) : order_(order < -1 ? -1 : order) {}

  static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
  static TruncatedSeries constant(const Rational& c, int order);
  static TruncatedSeries term(const Rational& c, const Monomial& m, int order);
  static TruncatedSeries variable(Var v, int order);

  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Stored coefficient or 0; throws AboveTruncation when the monomial's
  /// degree exceeds the guaranteed order.
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial::unit()); }

  /// Copy truncated to a (weakly smaller or larger) guarantee. Raising the
  /// order is refused: the dropped terms are gone.
  TruncatedSeries truncated(int new_order) const;

  /// Adds c * m if m fits under the order; silently drops it otherwise.
  void add_term(const Monomial& m, const Rational& c);

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);

  TruncatedSeries scaled(const Rational& c) const;

  /// Multiplication by the single term c * m. Unlike a generic product this
  /// raises the guarantee: if f is exact to D, c*m*f is exact to
  /// D + deg(m).
  TruncatedSeries times_term(const Rational& c, const Monomial& m) const;

  /// Formal partial derivative. The advertised order drops by one: the
  /// derivative of a degree-D-exact truncation is exact only to D-1.
  TruncatedSeries partial(Var v) const;

  /// exp(f) = sum f^k / k!, finite because f is nilpotent modulo the
  /// truncation ideal. Requires a zero constant term.
  TruncatedSeries exp() const;

  /// Ring homomorphism sending each variable v to delta[v] * T. Every
  /// variable occurring in the series must be assigned.
  TruncatedSeries substitute_line(const std::map<Var, Rational>& delta) const;

  /// Keeps only terms with zero exponent in each of the given variables
  /// (evaluation at those variables = 0).
  TruncatedSeries slice_zero(std::initializer_list<Var> vars) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) =
      default;

  /// "0" or "c1*m1 + c2*m2 + ..." in monomial order.
  std::string str() const;

 private:
  TermMap terms_;
  int order_;
};

/// Equality of all coefficients of total degree <= ord (both series must
/// guarantee that order).
bool agree_to_order(const TruncatedSeries& a, const TruncatedSeries& b,
                    int ord);

}  // namespace qcp2
