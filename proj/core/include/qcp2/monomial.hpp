#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace qcp2 {

/// The fixed ordered variable universe shared by every series in the
/// system: six deformation directions y0..y5, six dual directions z0..z5,
/// and the single deformation parameter T.
enum class Var : std::uint8_t {
  y0, y1, y2, y3, y4, y5,
  z0, z1, z2, z3, z4, z5,
  T,
};

inline constexpr int kNumVars = 13;

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

/// y-variable (resp. z-variable) with index 0..5.
Var y_var(int s);
Var z_var(int s);

/// Exponent vector over the fixed universe. Canonical by construction:
/// absent variables are exponent 0, so equal monomials have equal
/// representations and std::map keys iterate deterministically.
class Monomial {
 public:
  Monomial() = default;  // the unit monomial

  static Monomial unit() { return {}; }
  static Monomial var(Var v, int exp = 1);
  static Monomial of(std::initializer_list<std::pair<Var, int>> exps);

  int exponent(Var v) const { return e_[static_cast<int>(v)]; }
  int total_degree() const;

  /// Degree counting only the given half of the universe.
  int degree_in_y() const;
  int degree_in_z() const;

  bool is_unit() const { return total_degree() == 0; }

  Monomial times(const Monomial& o) const;
  /// Divides by v (for formal differentiation); exponent must be positive.
  Monomial divided_by(Var v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.e_ <=> b.e_;
  }

  /// "1", "y2", "y2^3*z5", ... in universe order.
  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument on malformed input.
  static Monomial parse(std::string_view s);

 private:
  std::array<std::uint8_t, kNumVars> e_{};
};

}  // namespace qcp2
