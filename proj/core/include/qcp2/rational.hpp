#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <span>
#include <string>

namespace qcp2 {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; every arithmetic operation is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, ints embed in Q
  Rational(long num, long den);
  explicit Rational(mpz_class n) : v_(std::move(n)) {}
  explicit Rational(mpq_class v);

  /// Parses "p" or "p/q" (optional sign, arbitrary precision).
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rational from_string(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  /// Numerator of an integer value as long; throws if not representable.
  long to_long() const;

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! for n >= 0; throws std::invalid_argument for n < 0.
Rational factorial(long n);

/// C(n,k), with the out-of-range convention C(n,k) = 0 whenever
/// k < 0, k > n or n < 0. Recursions rely on out-of-range terms
/// vanishing silently.
Rational binomial(long n, long k);

/// n! / (parts[0]! ... parts[r]!) when all parts are nonnegative and sum
/// to n; 0 otherwise (same silent-vanish convention as binomial).
Rational multinomial(long n, std::span<const long> parts);

}  // namespace qcp2
