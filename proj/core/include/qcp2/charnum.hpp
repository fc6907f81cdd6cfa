#pragma once

#include <array>
#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcp2/rational.hpp"

namespace qcp2 {

/// Index of a characteristic number N_d(a,b,c): rational plane curves of
/// degree d through a general points, tangent to b general lines, and
/// tangent to c general lines at a specified point on each. Valid keys
/// satisfy the dimension constraint a + b + 2c = 3d - 1.
struct CharKey {
  int d = 1;
  int a = 0;
  int b = 0;
  int c = 0;

  bool dimension_ok() const {
    return d >= 1 && a >= 0 && b >= 0 && c >= 0 && a + b + 2 * c == 3 * d - 1;
  }

  friend bool operator==(const CharKey&, const CharKey&) = default;
  friend auto operator<=>(const CharKey&, const CharKey&) = default;

  std::string str() const;
};

struct InvalidKey : std::invalid_argument {
  explicit InvalidKey(const CharKey& k);
  CharKey key;
};

struct MissingBaseData : std::runtime_error {
  explicit MissingBaseData(std::set<CharKey> missing);
  /// The exact base keys (a <= 2) whose absence blocks the evaluation.
  std::set<CharKey> keys;
};

struct SchemaViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Persistent store of externally supplied base values. The recursion can
/// only determine keys with a >= 3, so every key with a <= 2 is external
/// input; each entry carries a free-text provenance note.
class BaseStore {
 public:
  struct Entry {
    Rational value;
    std::string source;
  };

  /// Throws SchemaViolation unless key.a <= 2 and the dimension constraint
  /// holds. Overwrites an existing entry.
  void put(const CharKey& key, Rational value, std::string source);

  std::optional<Rational> lookup(const CharKey& key) const;
  const std::map<CharKey, Entry>& entries() const { return entries_; }

  friend bool operator==(const BaseStore&, const BaseStore&);

 private:
  std::map<CharKey, Entry> entries_;
};

/// The shipped store: the four degree-1 numbers (forced by the geometry of
/// lines and their lifts), and the degree-2 point/line numbers with a <= 2
/// obtained from the recursion-computed a >= 3 values through the conic
/// self-duality N_2(a,b,0) = N_2(b,a,0). Degree-2 flag entries (c > 0,
/// a <= 2) and everything with d >= 3 are deliberately absent.
BaseStore default_base();

/// Reads a base file (schema "charnum-base/1") and merges it over the
/// shipped defaults; file entries win. Throws ParseError on malformed
/// JSON or values, SchemaViolation on keys with a > 2 or broken dimension.
BaseStore load_base(const std::filesystem::path& path);
void save_base(const BaseStore& store, const std::filesystem::path& path);

/// Memoizing evaluator of characteristic numbers over a fixed base store.
/// Values with a <= 2 come from the store; values with a >= 3 evaluate the
/// four-sum recursion over degree splittings d1 + d2 = d (d1, d2 > 0).
/// Pure given (key, base): the memo table allows concurrent readers with
/// serialized insertion and never changes a published value.
class CharNumEngine {
 public:
  explicit CharNumEngine(BaseStore base) : base_(std::move(base)) {}

  /// Engine with pinned evaluation cells: the given keys evaluate to the
  /// given values directly, bypassing both the store and the recursion.
  /// Verifiers detect a pinned cell that disagrees with the recursion, so
  /// this is the injection point for corruption drills; it is not a way
  /// to supply legitimate data (that is what the store is for).
  CharNumEngine(BaseStore base, std::map<CharKey, Rational> pinned)
      : base_(std::move(base)), pinned_(std::move(pinned)) {}

  /// Throws InvalidKey when a+b+2c != 3d-1; MissingBaseData (listing the
  /// full set of absent a <= 2 keys) when the store cannot support the
  /// evaluation.
  Rational value(const CharKey& key) const;

  struct Outcome {
    std::optional<Rational> value;
    std::set<CharKey> missing;  // nonempty exactly when value is absent

    bool determinable() const { return value.has_value(); }
  };

  /// Like value(), but returns the blocking keys instead of throwing.
  /// Still throws InvalidKey for dimension-violating keys.
  Outcome try_value(const CharKey& key) const;

  const BaseStore& base() const { return base_; }

 private:
  Outcome evaluate(const CharKey& key) const;

  BaseStore base_;
  std::map<CharKey, Rational> pinned_;
  mutable std::map<CharKey, Outcome> memo_;
  mutable std::shared_mutex mutex_;
};

/// One-shot convenience wrapper around CharNumEngine.
Rational char_number(const CharKey& key, const BaseStore& base);

/// The count of rational degree-d curves through 3d-1 general points by
/// the classical point-conditions recursion. Deliberately a separate code
/// path from CharNumEngine: it is the cross-check oracle for the a = 3d-1,
/// b = c = 0 specialization. Throws InvalidDegree for d < 1.
Rational kontsevich_direct(int d);

/// A first-order Gromov-Witten query: degree d with a finite multiset of
/// insertions drawn from the basis {T0..T5} of the incidence variety,
/// stored as counts per basis index.
struct GWQuery {
  int d = 1;
  std::array<long, 6> counts{};

  static GWQuery of(int d, std::initializer_list<int> basis_indices);
};

/// Reduces the query by the string equation (any T0 insertion gives 0) and
/// the divisor rule (each T1 contributes a factor d, each T3 a factor
/// 2d-2), then matches the remaining point/tangency insertions against the
/// dimension constraint: a T2's, b T4's, c T5's with a + b + 2c = 3d - 1
/// yield (product of divisor factors) * N_d(a,b,c), anything else 0.
Rational gw_first_order(const GWQuery& q, const CharNumEngine& engine);

}  // namespace qcp2
