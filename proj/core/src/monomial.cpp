#include "qcp2/monomial.hpp"

#include <charconv>
#include <stdexcept>

namespace qcp2 {

namespace {
constexpr std::array<std::string_view, kNumVars> kNames = {
    "y0", "y1", "y2", "y3", "y4", "y5",
    "z0", "z1", "z2", "z3", "z4", "z5", "T"};
constexpr int kMaxExponent = 255;
}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<int>(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

Var y_var(int s) {
  if (s < 0 || s > 5) throw std::out_of_range("y_var: index out of range");
  return static_cast<Var>(s);
}

Var z_var(int s) {
  if (s < 0 || s > 5) throw std::out_of_range("z_var: index out of range");
  return static_cast<Var>(static_cast<int>(Var::z0) + s);
}

Monomial Monomial::var(Var v, int exp) {
  if (exp < 0 || exp > kMaxExponent)
    throw std::out_of_range("Monomial: exponent out of range");
  Monomial m;
  m.e_[static_cast<int>(v)] = static_cast<std::uint8_t>(exp);
  return m;
}

Monomial Monomial::of(std::initializer_list<std::pair<Var, int>> exps) {
  Monomial m;
  for (const auto& [v, e] : exps) {
    if (e < 0 || e > kMaxExponent)
      throw std::out_of_range("Monomial: exponent out of range");
    m.e_[static_cast<int>(v)] = static_cast<std::uint8_t>(e);
  }
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : e_) d += e;
  return d;
}

int Monomial::degree_in_y() const {
  int d = 0;
  for (int i = static_cast<int>(Var::y0); i <= static_cast<int>(Var::y5); ++i)
    d += e_[i];
  return d;
}

int Monomial::degree_in_z() const {
  int d = 0;
  for (int i = static_cast<int>(Var::z0); i <= static_cast<int>(Var::z5); ++i)
    d += e_[i];
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kNumVars; ++i) {
    const int e = e_[i] + o.e_[i];
    if (e > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
    m.e_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial Monomial::divided_by(Var v) const {
  const int i = static_cast<int>(v);
  if (e_[i] == 0)
    throw std::invalid_argument("Monomial: dividing by absent variable");
  Monomial m = *this;
  m.e_[i] -= 1;
  return m;
}

std::string Monomial::str() const {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += kNames[i];
    if (e_[i] > 1) {
      s += '^';
      s += std::to_string(static_cast<int>(e_[i]));
    }
  }
  return s.empty() ? "1" : s;
}

Monomial Monomial::parse(std::string_view s) {
  if (s == "1") return Monomial();
  Monomial m;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t star = s.find('*', pos);
    if (star == std::string_view::npos) star = s.size();
    std::string_view factor = s.substr(pos, star - pos);
    int exp = 1;
    if (size_t caret = factor.find('^'); caret != std::string_view::npos) {
      std::string_view num = factor.substr(caret + 1);
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), exp);
      if (ec != std::errc() || p != num.data() + num.size() || exp < 0)
        throw std::invalid_argument("Monomial: bad exponent in '" +
                                    std::string(s) + "'");
      factor = factor.substr(0, caret);
    }
    auto v = parse_var(factor);
    if (!v)
      throw std::invalid_argument("Monomial: unknown variable in '" +
                                  std::string(s) + "'");
    m = m.times(Monomial::var(*v, exp));
    pos = star + 1;
  }
  return m;
}

}  // namespace qcp2
