#include "qcp2/chow.hpp"

#include <mutex>

namespace qcp2 {

namespace {
const std::array<std::string, 6> kBasisNames = {"1",  "h",    "h^2",
                                                "hv", "hv^2", "h^2*hv"};
}  // namespace

ClassP2 ClassP2::basis(int i) {
  if (i < 0 || i > 2) throw std::out_of_range("ClassP2::basis");
  ClassP2 x;
  x.c[i] = Rational(1);
  return x;
}

bool ClassP2::is_zero() const {
  return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

ClassP2 ClassP2::operator+(const ClassP2& o) const {
  ClassP2 x;
  for (int i = 0; i < 3; ++i) x.c[i] = c[i] + o.c[i];
  return x;
}

ClassP2 ClassP2::operator-(const ClassP2& o) const {
  ClassP2 x;
  for (int i = 0; i < 3; ++i) x.c[i] = c[i] - o.c[i];
  return x;
}

ClassP2 ClassP2::scaled(const Rational& r) const {
  ClassP2 x;
  for (int i = 0; i < 3; ++i) x.c[i] = c[i] * r;
  return x;
}

std::string ClassP2::str() const {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c[i].str() + "*" + kBasisNames[i];
  }
  return s.empty() ? "0" : s;
}

ClassI ClassI::basis(int i) {
  if (i < 0 || i > 5) throw std::out_of_range("ClassI::basis");
  ClassI x;
  x.t[i] = Rational(1);
  return x;
}

bool ClassI::is_zero() const {
  for (const auto& v : t)
    if (!v.is_zero()) return false;
  return true;
}

ClassI ClassI::operator+(const ClassI& o) const {
  ClassI x;
  for (int i = 0; i < 6; ++i) x.t[i] = t[i] + o.t[i];
  return x;
}

ClassI ClassI::operator-(const ClassI& o) const {
  ClassI x;
  for (int i = 0; i < 6; ++i) x.t[i] = t[i] - o.t[i];
  return x;
}

ClassI ClassI::scaled(const Rational& r) const {
  ClassI x;
  for (int i = 0; i < 6; ++i) x.t[i] = t[i] * r;
  return x;
}

std::string ClassI::str() const {
  std::string s;
  for (int i = 0; i < 6; ++i) {
    if (t[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += t[i].str() + "*T" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

ClassP2 cup_p2(const ClassP2& x, const ClassP2& y) {
  ClassP2 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) r.c[i + j] += x.c[i] * y.c[j];
  return r;
}

Rational integrate_p2(const ClassP2& x) { return x.c[2]; }

namespace {

// Products T_i * T_j over the T-basis, from h^3 = hv^3 = 0 and
// h*hv = h^2 + hv^2 (everything of total degree >= 4 dies).
// table[i][j][k] is the T_k-coordinate of T_i * T_j.
constexpr int kCupTable[6][6][6] = {
    // T0 * ...
    {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
     {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}},
    // T1 * ...
    {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
     {0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}},
    // T2 * ...
    {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
     {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}},
    // T3 * ...
    {{0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
     {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}},
    // T4 * ...
    {{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0},
     {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}},
    // T5 * ...
    {{0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
     {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}},
};

ClassI cup_basis(int i, int j) {
  ClassI r;
  for (int k = 0; k < 6; ++k) r.t[k] = Rational(kCupTable[i][j][k]);
  return r;
}

ClassI cup_impl(const ClassI& x, const ClassI& y) {
  ClassI r;
  for (int i = 0; i < 6; ++i) {
    if (x.t[i].is_zero()) continue;
    for (int j = 0; j < 6; ++j) {
      if (y.t[j].is_zero()) continue;
      const Rational c = x.t[i] * y.t[j];
      for (int k = 0; k < 6; ++k)
        if (kCupTable[i][j][k] != 0)
          r.t[k] += c * Rational(kCupTable[i][j][k]);
    }
  }
  return r;
}

std::once_flag g_table_checked;

}  // namespace

void validate_chow_table() {
  // Anti-diagonal pairing: integral of T_i * T_j = [i + j == 5].
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const Rational want(i + j == 5 ? 1 : 0);
      if (integrate_i(cup_basis(i, j)) != want)
        throw std::logic_error("chow table: pairing fails at (" +
                               std::to_string(i) + "," + std::to_string(j) +
                               ")");
    }
  // Commutativity and associativity on all basis triples.
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (!(cup_basis(i, j) == cup_basis(j, i)))
        throw std::logic_error("chow table: not commutative");
      for (int k = 0; k < 6; ++k) {
        const ClassI lhs = cup_impl(cup_basis(i, j), ClassI::basis(k));
        const ClassI rhs = cup_impl(ClassI::basis(i), cup_basis(j, k));
        if (!(lhs == rhs))
          throw std::logic_error("chow table: not associative at (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + ")");
      }
    }
  // p_* annihilates exactly the image of p^*, and maps span{T3,T4,T5}
  // bijectively onto the plane's cohomology.
  for (int i = 0; i < 3; ++i) {
    if (!pushforward_p(pullback_p(ClassP2::basis(i))).is_zero())
      throw std::logic_error("chow table: p_* does not kill p^*");
    if (!(pushforward_p(ClassI::basis(3 + i)) == ClassP2::basis(i)))
      throw std::logic_error("chow table: p_* wrong on fiber classes");
  }
}

ClassI cup_i(const ClassI& x, const ClassI& y) {
  std::call_once(g_table_checked, validate_chow_table);
  return cup_impl(x, y);
}

Rational integrate_i(const ClassI& x) { return x.t[5]; }

ClassI pullback_p(const ClassP2& x) {
  ClassI r;
  for (int i = 0; i < 3; ++i) r.t[i] = x.c[i];
  return r;
}

ClassP2 pushforward_p(const ClassI& x) {
  ClassP2 r;
  for (int i = 0; i < 3; ++i) r.c[i] = x.t[3 + i];
  return r;
}

ClassI diagonal_decompose(const ClassI& x) {
  ClassI r;
  for (int s = 0; s < 6; ++s)
    r = r + ClassI::basis(5 - s).scaled(integrate_i(cup_i(x, ClassI::basis(s))));
  return r;
}

ClassI curve_class(int d) {
  if (d < 1) throw InvalidDegree("curve_class: degree must be >= 1");
  ClassI r;
  r.t[4] = Rational(d);
  r.t[2] = Rational(2 * d - 2);
  return r;
}

}  // namespace qcp2
