#pragma once

// Closed-form orderliness tests for systems with 3 to 6 values, and the
// +/- pattern of prefix verdicts.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coinsys/core.hpp"

namespace coinsys {

enum class Mark : char { plus = '+', minus = '-' };

/// Orderliness of each prefix (1, c_2, ..., c_i), i = 1..n.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Mark> marks);

  /// Parses a string of '+' and '-'.
  static Pattern parse(std::string_view text);

  std::size_t size() const { return marks_.size(); }
  Mark operator[](std::size_t i) const { return marks_[i]; }
  bool all_plus() const;
  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Mark> marks_;
};

/// Orderliness of (1, c2, c3) via c3 - c2 in {m*c2 - m, ..., m*c2} for some
/// m >= 1. Requires 1 < c2 < c3.
bool orderly3(Value c2, Value c3);

/// A 4-value system is orderly iff it is totally orderly.
bool orderly4(const CoinSystem& system);

/// A 5-value system is orderly iff it is (1,2,a,a+1,2a) with a >= 4 or it is
/// totally orderly.
bool orderly5(const CoinSystem& system);

enum class SixValueCase {
  case_1a,
  case_1b,
  case_1c,
  case_2a,
  case_2b,
  case_3_totally,
  case_3_plus_minus_plus,
  not_orderly,
};

std::string_view to_string(SixValueCase label);

struct SixValueParams {
  std::optional<Value> a;
  std::optional<Value> b;
  std::optional<Value> m;
};

struct SixValueClass {
  SixValueCase label = SixValueCase::not_orderly;
  std::optional<SixValueParams> params;
};

/// Matches a 6-value system against the templates, in the order
/// 1a, 1b, 1c, 2a, 2b, 3; the first match wins.
SixValueClass classify6(const CoinSystem& system);

/// Rebuilds the system from a parametrised case (1a, 1b, 1c, 2a, 2b).
std::optional<CoinSystem> regenerate(SixValueCase label,
                                     const SixValueParams& params);

/// Pattern every system in the given case must have.
std::optional<Pattern> implied_pattern(SixValueCase label);

Pattern pattern(const CoinSystem& system);

/// The same pattern with every prefix decided by the brute-force
/// counterexample scan instead of the Pearson test.
Pattern oracle_pattern(const CoinSystem& system);

bool is_totally_orderly(const CoinSystem& system);

}  // namespace coinsys
