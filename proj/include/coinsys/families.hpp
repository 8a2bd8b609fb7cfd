#pragma once

// Fixed-gap coin systems and the three infinite families D, E, F whose
// pattern is (+++-...-+).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coinsys/core.hpp"

namespace coinsys {

/// (1, x) followed by alternating increments delta1 (odd positions) and
/// delta2 (even positions) up to position ell, then delta1 + delta2 up to n.
/// Positions are 1-based.
struct FixedGapSpec {
  std::size_t n;
  std::size_t ell;
  Value x;
  Value delta1;
  Value delta2;

  friend bool operator==(const FixedGapSpec&, const FixedGapSpec&) = default;
};

enum class Family : char { D = 'D', E = 'E', F = 'F' };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view text);

struct FamilyParams {
  Family family;
  Value r;
  Value a;
  Value m = 0;  // unused for D

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws std::invalid_argument if the spec breaks 3 < ell < n, x >= 2,
/// delta1 != delta2, or positive increments.
CoinSystem gen_fixed_gap(const FixedGapSpec& spec);

/// r >= 1, a >= 2; length 3r + 2.
CoinSystem gen_D(Value r, Value a);
/// r >= 2, 1 < m < a; length 3r.
CoinSystem gen_E(Value r, Value m, Value a);
/// r >= 2, 1 < m <= a; length 3r.
CoinSystem gen_F(Value r, Value m, Value a);

CoinSystem generate(const FamilyParams& params);

/// The fixed-gap parameters each family instance is built from.
FixedGapSpec fixed_gap_spec(const FamilyParams& params);

/// Pattern is exactly +++ followed by n-4 minuses and a final +. n >= 5.
bool verify_target_pattern(const CoinSystem& system);

struct LemmaPrefix {
  std::size_t length;
  bool oracle_non_orderly;
  Value named_witness;
  bool witness_is_counterexample;
};

struct LemmaReport {
  std::vector<LemmaPrefix> prefixes;

  bool holds() const {
    for (const auto& p : prefixes) {
      if (!p.oracle_non_orderly || !p.witness_is_counterexample) return false;
    }
    return true;
  }
};

/// Checks that each prefix in the lemma's range is not orderly and that the
/// named value (2c_{k-1} in stage 1, 2c_{2r} or 2c_{2r+1} in stage 2) is a
/// counterexample. Throws std::invalid_argument outside the lemma's
/// hypotheses (even ell needs x + delta1 > delta2 + 1).
LemmaReport lemma_prefix_check(const FixedGapSpec& spec);

/// Recovers D/E/F parameters that regenerate the system exactly.
std::optional<FamilyParams> family_membership(const CoinSystem& system);

}  // namespace coinsys
