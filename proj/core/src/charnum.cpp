#include "qcp2/charnum.hpp"

#include <mutex>

#include "qcp2/chow.hpp"

namespace qcp2 {

std::string CharKey::str() const {
  return "(" + std::to_string(d) + "," + std::to_string(a) + "," +
         std::to_string(b) + "," + std::to_string(c) + ")";
}

InvalidKey::InvalidKey(const CharKey& k)
    : std::invalid_argument("invalid characteristic-number key " + k.str() +
                            ": a + b + 2c must equal 3d - 1"),
      key(k) {}

namespace {
std::string missing_message(const std::set<CharKey>& missing) {
  std::string msg = "missing base data for";
  for (const auto& k : missing) msg += " " + k.str();
  return msg;
}
}  // namespace

MissingBaseData::MissingBaseData(std::set<CharKey> missing)
    : std::runtime_error(missing_message(missing)), keys(std::move(missing)) {}

void BaseStore::put(const CharKey& key, Rational value, std::string source) {
  if (!key.dimension_ok())
    throw SchemaViolation("base entry " + key.str() +
                          " violates a + b + 2c = 3d - 1");
  if (key.a > 2)
    throw SchemaViolation("base entry " + key.str() +
                          " has a > 2; such values belong to the recursion");
  entries_[key] = Entry{std::move(value), std::move(source)};
}

std::optional<Rational> BaseStore::lookup(const CharKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

bool operator==(const BaseStore& a, const BaseStore& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (auto ita = a.entries_.begin(), itb = b.entries_.begin();
       ita != a.entries_.end(); ++ita, ++itb) {
    if (ita->first != itb->first || ita->second.value != itb->second.value ||
        ita->second.source != itb->second.source)
      return false;
  }
  return true;
}

BaseStore default_base() {
  BaseStore store;
  store.put({1, 2, 0, 0}, Rational(1), "two general points determine one line");
  store.put({1, 1, 1, 0}, Rational(0),
            "the lift of a line has class (1,0), so it meets no general "
            "dual-line condition");
  store.put({1, 0, 2, 0}, Rational(0),
            "the lift of a line has class (1,0), so it meets no general "
            "dual-line condition");
  store.put({1, 0, 0, 1}, Rational(1),
            "one line through a prescribed point with prescribed tangent "
            "direction");

  // The degree-2 values with a <= 2 and c = 0 follow from self-duality of
  // conics, N_2(a,b,0) = N_2(b,a,0), applied to the a >= 3 values that the
  // recursion already determines from the degree-1 data above.
  CharNumEngine lines(store);
  const char* duality =
      "conic duality N_2(a,b,0) = N_2(b,a,0) applied to the recursion value";
  store.put({2, 2, 3, 0}, lines.value({2, 3, 2, 0}), duality);
  store.put({2, 1, 4, 0}, lines.value({2, 4, 1, 0}), duality);
  store.put({2, 0, 5, 0}, lines.value({2, 5, 0, 0}), duality);
  return store;
}

Rational CharNumEngine::value(const CharKey& key) const {
  Outcome out = try_value(key);
  if (!out.value) throw MissingBaseData(std::move(out.missing));
  return *out.value;
}

CharNumEngine::Outcome CharNumEngine::try_value(const CharKey& key) const {
  if (!key.dimension_ok()) throw InvalidKey(key);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Outcome out = evaluate(key);
  {
    std::unique_lock lock(mutex_);
    memo_.emplace(key, out);
  }
  return out;
}

CharNumEngine::Outcome CharNumEngine::evaluate(const CharKey& key) const {
  if (auto it = pinned_.find(key); it != pinned_.end())
    return Outcome{it->second, {}};
  if (key.a <= 2) {
    if (auto v = base_.lookup(key)) return Outcome{*v, {}};
    return Outcome{std::nullopt, {key}};
  }

  const long a = key.a, b = key.b, c = key.c;
  Rational total(0);
  std::set<CharKey> missing;

  // One pass per sum of the recursion. Each is indexed by a splitting
  // d = d1 + d2 (both positive) and a splitting of the remaining
  // conditions; insertion-count shifts and multiplicities differ.
  struct Sum {
    long a_total, b_total, c_total;
    long outer_factor;
  };
  const std::array<Sum, 4> sums = {{
      {a - 1, b, c, 1},
      {a, b - 1, c, 2},
      {a + 1, b - 2, c, 4},
      {a + 1, b, c - 1, 2},
  }};

  for (int s = 0; s < 4; ++s) {
    const auto& [ta, tb, tc, outer] = sums[s];
    if (ta < 0 || tb < 0 || tc < 0) continue;
    for (int d1 = 1; d1 < key.d; ++d1) {
      const long d2 = key.d - d1;
      for (long a1 = 0; a1 <= ta; ++a1) {
        // The binomials in a1 vanish outside a window of width 2; skip
        // zero multipliers before recursing so they demand no base keys.
        Rational bracket;
        switch (s) {
          case 0:
            bracket = Rational(d1 * d1 * d2 * d2) * binomial(a - 3, a1 - 1) -
                      Rational(d1 * d1 * d1 * d2) * binomial(a - 3, a1);
            break;
          case 1:
            bracket = Rational(d1 * d1 * d2) * binomial(a - 3, a1 - 1) -
                      Rational(d1 * d1 * d1) * binomial(a - 3, a1);
            break;
          default:
            bracket = Rational(d1 * d2) * binomial(a - 3, a1 - 2) -
                      Rational(d1 * d1) * binomial(a - 3, a1 - 1);
            break;
        }
        if (bracket.is_zero()) continue;
        for (long b1 = 0; b1 <= tb; ++b1) {
          const long b2 = tb - b1;
          Rational b_factor;
          switch (s) {
            case 0:
            case 3:
              b_factor = binomial(b, b1);
              break;
            case 1: {
              const std::array<long, 3> parts = {b1, b2, 1};
              b_factor = multinomial(b, parts);
              break;
            }
            default: {
              const std::array<long, 3> parts = {b1, b2, 2};
              b_factor = multinomial(b, parts);
              break;
            }
          }
          if (b_factor.is_zero()) continue;
          for (long c1 = 0; c1 <= tc; ++c1) {
            const long c2 = tc - c1;
            Rational c_factor;
            if (s == 3) {
              const std::array<long, 3> parts = {c1, c2, 1};
              c_factor = multinomial(c, parts);
            } else {
              c_factor = binomial(c, c1);
            }
            if (c_factor.is_zero()) continue;

            const CharKey k1{d1, static_cast<int>(a1), static_cast<int>(b1),
                             static_cast<int>(c1)};
            const CharKey k2{static_cast<int>(d2), static_cast<int>(ta - a1),
                             static_cast<int>(b2), static_cast<int>(c2)};
            // Sub-keys violating their own dimension constraint
            // contribute nothing.
            if (!k1.dimension_ok() || !k2.dimension_ok()) continue;

            const Outcome o1 = try_value(k1);
            const Outcome o2 = try_value(k2);
            if (!o1.value || !o2.value) {
              missing.insert(o1.missing.begin(), o1.missing.end());
              missing.insert(o2.missing.begin(), o2.missing.end());
              continue;
            }
            total += Rational(outer) * bracket * b_factor * c_factor *
                     *o1.value * *o2.value;
          }
        }
      }
    }
  }

  if (!missing.empty()) return Outcome{std::nullopt, std::move(missing)};
  return Outcome{std::move(total), {}};
}

Rational char_number(const CharKey& key, const BaseStore& base) {
  return CharNumEngine(base).value(key);
}

Rational kontsevich_direct(int d) {
  if (d < 1) throw InvalidDegree("kontsevich_direct: degree must be >= 1");
  std::vector<Rational> n(static_cast<size_t>(d) + 1, Rational(0));
  n[1] = Rational(1);
  for (int m = 2; m <= d; ++m) {
    Rational sum(0);
    for (long d1 = 1; d1 < m; ++d1) {
      const long d2 = m - d1;
      sum += n[d1] * n[d2] *
             (Rational(d1 * d1 * d2 * d2) * binomial(3 * m - 4, 3 * d1 - 2) -
              Rational(d1 * d1 * d1 * d2) * binomial(3 * m - 4, 3 * d1 - 1));
    }
    n[m] = sum;
  }
  return n[d];
}

GWQuery GWQuery::of(int d, std::initializer_list<int> basis_indices) {
  GWQuery q;
  q.d = d;
  for (int i : basis_indices) {
    if (i < 0 || i > 5) throw std::out_of_range("GWQuery: basis index");
    ++q.counts[i];
  }
  return q;
}

Rational gw_first_order(const GWQuery& q, const CharNumEngine& engine) {
  if (q.d < 1) throw InvalidDegree("gw_first_order: degree must be >= 1");
  for (long n : q.counts)
    if (n < 0) throw std::invalid_argument("gw_first_order: negative count");
  // String equation: an identity insertion kills the invariant.
  if (q.counts[0] > 0) return Rational(0);
  // Divisor rule: T1 and T3 insertions peel off as pairings with the
  // curve class d*T4 + (2d-2)*T2.
  Rational factor(1);
  for (long i = 0; i < q.counts[1]; ++i) factor *= Rational(q.d);
  for (long i = 0; i < q.counts[3]; ++i) factor *= Rational(2 * q.d - 2);
  const CharKey key{q.d, static_cast<int>(q.counts[2]),
                    static_cast<int>(q.counts[4]),
                    static_cast<int>(q.counts[5])};
  if (!key.dimension_ok()) return Rational(0);
  if (factor.is_zero()) return Rational(0);
  return factor * engine.value(key);
}

}  // namespace qcp2
