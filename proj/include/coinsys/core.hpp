#pragma once

// Coin systems, representations, and the greedy / optimal change-making
// routines everything else is built on.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coinsys {

using Value = std::uint64_t;
using Count = std::uint64_t;

/// Denominations are capped well below 2^64 so that sums of a few coins and
/// products like m * c_{n-1} never wrap.
inline constexpr Value kMaxDenomination = Value{1} << 40;

/// Largest value accepted by the greedy routines.
inline constexpr Value kMaxQueryValue = Value{1} << 62;

/// Largest v for which opt queries will allocate a table.
inline constexpr Value kDefaultTableCap = 10'000'000;

/// Input outside the supported numeric range (overflow).
class RangeError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A DP table would exceed the configured cap.
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

Value checked_add(Value a, Value b);
Value checked_mul(Value a, Value b);

/// ceil(a / b) for b > 0.
constexpr Value ceil_div(Value a, Value b) { return (a + b - 1) / b; }

/// Strictly increasing denominations starting at 1.
class CoinSystem {
 public:
  /// Throws std::invalid_argument unless values is nonempty, starts at 1 and
  /// is strictly increasing; RangeError if a value exceeds kMaxDenomination.
  explicit CoinSystem(std::vector<Value> values);
  CoinSystem(std::initializer_list<Value> values)
      : CoinSystem(std::vector<Value>(values)) {}

  /// Parses "1,5,10,25" (whitespace around entries tolerated).
  static CoinSystem parse(std::string_view text);

  std::size_t size() const { return values_.size(); }
  Value operator[](std::size_t i) const { return values_[i]; }
  Value largest() const { return values_.back(); }
  std::span<const Value> values() const { return values_; }

  /// First `length` denominations; 1 <= length <= size().
  CoinSystem prefix(std::size_t length) const;
  /// This system with `next` appended; next must exceed largest().
  CoinSystem extended(Value next) const;

  /// Index of the largest denomination <= v (v >= 1).
  std::size_t largest_index_at_most(Value v) const;

  std::string to_string() const;

  friend bool operator==(const CoinSystem&, const CoinSystem&) = default;
  friend auto operator<=>(const CoinSystem&, const CoinSystem&) = default;

 private:
  std::vector<Value> values_;
};

/// Per-denomination coin counts for some value, tied to the coin system
/// that gives them meaning.
class Representation {
 public:
  Representation(CoinSystem system, std::vector<Count> counts);
  /// The empty representation (all zero counts).
  explicit Representation(CoinSystem system);

  const CoinSystem& system() const { return system_; }
  std::span<const Count> counts() const { return counts_; }
  Count operator[](std::size_t i) const { return counts_[i]; }
  std::size_t length() const { return counts_.size(); }

  Value value() const;
  Count size() const;
  /// Indices with a nonzero count.
  std::vector<std::size_t> support() const;

  std::string to_string() const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.counts_ == b.counts_ && a.system_ == b.system_;
  }

 private:
  CoinSystem system_;
  std::vector<Count> counts_;
};

Representation greedy_representation(const CoinSystem& system, Value v);
Count greedy_count(const CoinSystem& system, Value v);

/// Minimum number of coins for v. Throws ResourceLimit if v > cap.
Count opt_count(const CoinSystem& system, Value v,
                Value cap = kDefaultTableCap);

/// Among minimum-size representations of v, the lexicographically smallest
/// (leftmost count dominant, smaller wins).
Representation lex_smallest_optimal(const CoinSystem& system, Value v,
                                    Value cap = kDefaultTableCap);

/// Every minimum-size representation of v, in lexicographic order.
std::vector<Representation> optimal_representations(
    const CoinSystem& system, Value v, Value cap = kDefaultTableCap);

/// Left-to-right comparison of counts. Throws std::invalid_argument when the
/// lengths differ.
std::strong_ordering lex_compare(const Representation& x,
                                 const Representation& y);

/// Greedy and optimal counts for every value in [0, bound], filled by one
/// forward pass each.
class ChangeTable {
 public:
  ChangeTable(const CoinSystem& system, Value bound,
              Value cap = kDefaultTableCap);

  Value bound() const { return static_cast<Value>(opt_.size()) - 1; }
  Count greedy(Value v) const { return greedy_.at(v); }
  Count opt(Value v) const { return opt_.at(v); }
  bool is_counterexample(Value v) const { return greedy(v) > opt(v); }

 private:
  std::vector<Count> greedy_;
  std::vector<Count> opt_;
};

}  // namespace coinsys
