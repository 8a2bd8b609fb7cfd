#pragma once

// Deciding whether a coin system is orderly (greedy is always optimal), plus
// the structural facts about minimal counterexamples that sweeps check.

#include <optional>
#include <utility>
#include <vector>

#include "coinsys/core.hpp"

namespace coinsys {

/// Orderly verdict plus, for non-orderly systems, the minimal counterexample
/// with its greedy and lexicographically smallest optimal representations.
struct CanonicalityReport {
  struct Witness {
    Value value;
    Representation greedy;
    Representation optimal;
    Count greedy_count;
    Count opt_count;
  };

  bool orderly = true;
  std::optional<Witness> witness;
};

/// One candidate of the Pearson test: the greedy vector of c_k - 1 with its
/// first p entries zeroed and entry p incremented (0-based source index k,
/// so entry p is the (p+1)-th coin).
struct PearsonCandidate {
  std::size_t source_k;
  std::size_t p;
  Value value;
  Representation vector;
};

struct OnePointVerdict {
  Value m;
  Count greedy_at_m_cn1;
  bool orderly;
};

enum class PrefixCheck { verify, trusted };

/// Brute-force search for the minimal counterexample: scans
/// c_3 < v < c_{n-1} + c_n comparing greedy and optimal counts.
std::optional<Value> min_counterexample_oracle(const CoinSystem& system);

/// Every Pearson candidate, in generation order (k ascending, then p).
std::vector<PearsonCandidate> pearson_candidates(const CoinSystem& system);

/// The smallest candidate whose candidate vector beats greedy. This equals
/// the minimal counterexample when the system is not orderly.
std::optional<Value> pearson_min_counterexample(const CoinSystem& system);

/// O(n^3) orderliness test with no DP table.
bool pearson_orderly(const CoinSystem& system);

/// Orderly verdict from the Pearson test; the witness is located by a scan
/// upward from c_3 + 1.
CanonicalityReport is_orderly(const CoinSystem& system);

/// Decides whether prefix + c_new is orderly given that prefix is orderly,
/// from the greedy count at m * last(prefix), m = ceil(c_new / last(prefix)).
/// With PrefixCheck::verify the prefix is tested first and a non-orderly
/// prefix throws std::invalid_argument.
OnePointVerdict one_point_check(const CoinSystem& prefix, Value c_new,
                                PrefixCheck check = PrefixCheck::verify);

/// No counterexample below the largest coin.
bool is_tight(const CoinSystem& system);

/// First pair (i, j), 1 <= i <= j <= n-2 (0-based), with c_i + c_j > c_{n-1}
/// whose sum is a counterexample. Requires n >= 4.
std::optional<std::pair<std::size_t, std::size_t>> sum_pair_counterexample(
    const CoinSystem& system);

/// Necessary condition: every consecutive gap is at least c_2 - 1.
bool gap_filter(const CoinSystem& system);

/// Necessary condition: once two consecutive gaps more than double, all
/// later gaps are at least the second of them.
bool jump_filter(const CoinSystem& system);

/// Outcome of checking that greedy and optimal representations of the
/// minimal counterexample use disjoint denominations.
struct DisjointnessResult {
  enum class Status { holds, vacuous, violated };
  Status status;
  std::optional<Value> counterexample;
  /// The offending optimal representation when violated.
  std::optional<Representation> violating_optimal;
};

DisjointnessResult chang_disjointness(const CoinSystem& system);

}  // namespace coinsys
