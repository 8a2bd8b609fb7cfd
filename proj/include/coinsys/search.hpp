#pragma once

// Exhaustive enumeration of coin systems, pattern censuses, and the scan for
// (+++-...-+) systems outside the known families.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coinsys/characterize.hpp"
#include "coinsys/core.hpp"
#include "coinsys/families.hpp"

namespace coinsys {

struct EnumSpec {
  std::size_t n;
  Value max_cn;
  bool gap_filter = false;
  bool jump_filter = false;
};

/// Throws std::invalid_argument unless n >= 3 and max_cn >= n.
void validate(const EnumSpec& spec);

struct EnumeratedSystem {
  CoinSystem system;
  bool gap_rejected = false;
  bool jump_rejected = false;

  bool pre_rejected() const { return gap_rejected || jump_rejected; }
};

/// Every (1, c_2, ..., c_n) with c_n <= max_cn in lexicographic order.
/// Systems failing an enabled filter are tagged, never dropped.
class SystemEnumerator {
 public:
  explicit SystemEnumerator(EnumSpec spec);

  std::optional<EnumeratedSystem> next();

 private:
  EnumSpec spec_;
  std::vector<Value> current_;
  bool started_ = false;
  bool done_ = false;
};

/// binomial(max_cn - 1, n - 1): the number of systems the enumerator yields.
std::uint64_t system_count(const EnumSpec& spec);

struct SweepOptions {
  unsigned jobs = 1;
  /// Fraction of Pearson verdicts re-derived by the brute-force oracle.
  double sample_rate = 0.01;
  /// Called after each finished partition with (done, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

struct Census {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::uint64_t spot_checked = 0;
  std::uint64_t spot_disagreements = 0;

  friend bool operator==(const Census&, const Census&) = default;
};

/// Counts of full-length patterns over the enumeration of spec.
Census pattern_census(const EnumSpec& spec, const SweepOptions& options = {});

struct ConjectureFinding {
  CoinSystem system;
  bool pattern_ok;
  std::optional<FamilyParams> membership;
  /// Every prefix verdict re-derived by the oracle matches the target.
  bool oracle_confirmed;
};

struct ConjectureScan {
  std::vector<ConjectureFinding> findings;
  /// Findings that belong to none of D, E, F.
  std::uint64_t unexplained = 0;
  /// Findings of length 3r + 1, r >= 2.
  std::uint64_t bad_length = 0;
  /// Findings the oracle did not confirm, plus failed spot checks.
  std::uint64_t disagreements = 0;
  std::uint64_t spot_checked = 0;

  std::uint64_t violations() const { return unexplained + bad_length; }
};

/// Finds every system of each requested length (>= 5) with c_n <= max_cn
/// whose pattern is (+++-...-+), with family membership attached. Subtrees
/// whose prefix pattern already departs from the target are skipped.
ConjectureScan conjecture_scan(const std::vector<std::size_t>& lengths,
                               Value max_cn, const SweepOptions& options = {});

}  // namespace coinsys
