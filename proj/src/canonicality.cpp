#include "coinsys/canonicality.hpp"

#include <stdexcept>

namespace coinsys {

namespace {

// Walks the Pearson candidate set. For each candidate calls
// visit(k, p, value, size) and stops early when visit returns false.
template <typename Visit>
void walk_candidates(const CoinSystem& system, Visit&& visit) {
  const std::size_t n = system.size();
  std::vector<Count> greedy(n);
  for (std::size_t k = 2; k < n; ++k) {
    Value remainder = system[k] - 1;
    for (std::size_t i = k; i-- > 0;) {
      greedy[i] = remainder / system[i];
      remainder %= system[i];
    }
    // Suffix sums over entries p..k-1 of the greedy vector.
    Value tail_value = 0;
    Count tail_size = 0;
    for (std::size_t p = k - 1; p >= 1; --p) {
      tail_value += greedy[p] * system[p];
      tail_size += greedy[p];
      if (!visit(k, p, tail_value + system[p], tail_size + 1)) return;
    }
  }
}

}  // namespace

std::optional<Value> min_counterexample_oracle(const CoinSystem& system) {
  const std::size_t n = system.size();
  if (n <= 2) return std::nullopt;
  const Value bound = system[n - 2] + system[n - 1] - 1;
  const ChangeTable table(system, bound);
  for (Value v = system[2] + 1; v <= bound; ++v) {
    if (table.is_counterexample(v)) return v;
  }
  return std::nullopt;
}

std::vector<PearsonCandidate> pearson_candidates(const CoinSystem& system) {
  std::vector<PearsonCandidate> out;
  const std::size_t n = system.size();
  for (std::size_t k = 2; k < n; ++k) {
    const Representation base = greedy_representation(system, system[k] - 1);
    for (std::size_t p = 1; p < k; ++p) {
      std::vector<Count> counts(base.counts().begin(), base.counts().end());
      std::fill(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(p), 0);
      counts[p] += 1;
      Representation vector(system, std::move(counts));
      const Value value = vector.value();
      out.push_back(PearsonCandidate{k, p, value, std::move(vector)});
    }
  }
  return out;
}

std::optional<Value> pearson_min_counterexample(const CoinSystem& system) {
  std::optional<Value> best;
  walk_candidates(system, [&](std::size_t, std::size_t, Value value, Count size) {
    if ((!best || value < *best) && greedy_count(system, value) > size) {
      best = value;
    }
    return true;
  });
  return best;
}

bool pearson_orderly(const CoinSystem& system) {
  bool orderly = true;
  walk_candidates(system, [&](std::size_t, std::size_t, Value value, Count size) {
    if (greedy_count(system, value) > size) orderly = false;
    return orderly;
  });
  return orderly;
}

CanonicalityReport is_orderly(const CoinSystem& system) {
  CanonicalityReport report;
  if (system.size() <= 2 || pearson_orderly(system)) return report;

  const auto w = min_counterexample_oracle(system);
  if (!w) {
    throw std::logic_error("Pearson test and counterexample scan disagree for " +
                           system.to_string());
  }
  report.orderly = false;
  Representation greedy = greedy_representation(system, *w);
  Representation optimal = lex_smallest_optimal(system, *w);
  const Count g = greedy.size();
  const Count o = optimal.size();
  report.witness = CanonicalityReport::Witness{*w, std::move(greedy),
                                               std::move(optimal), g, o};
  return report;
}

OnePointVerdict one_point_check(const CoinSystem& prefix, Value c_new,
                                PrefixCheck check) {
  const Value last = prefix.largest();
  if (c_new <= last) {
    throw std::invalid_argument("extension " + std::to_string(c_new) +
                                " does not exceed " + std::to_string(last));
  }
  if (check == PrefixCheck::verify && !pearson_orderly(prefix)) {
    throw std::invalid_argument("one point check needs an orderly prefix, got " +
                                prefix.to_string());
  }
  const CoinSystem full = prefix.extended(c_new);
  const Value m = ceil_div(c_new, last);
  const Count greedy = greedy_count(full, checked_mul(m, last));
  return OnePointVerdict{m, greedy, greedy <= m};
}

bool is_tight(const CoinSystem& system) {
  if (system.size() <= 2) return true;
  const Value top = system.largest();
  const ChangeTable table(system, top - 1);
  for (Value v = system[2] + 1; v < top; ++v) {
    if (table.is_counterexample(v)) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> sum_pair_counterexample(
    const CoinSystem& system) {
  const std::size_t n = system.size();
  if (n < 4) {
    throw std::invalid_argument("sum pair search needs at least 4 coin values");
  }
  const Value top = system[n - 1];
  const ChangeTable table(system, 2 * system[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = i; j + 1 < n; ++j) {
      const Value sum = system[i] + system[j];
      if (sum > top && table.is_counterexample(sum)) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

bool gap_filter(const CoinSystem& system) {
  if (system.size() < 2) return true;
  const Value min_gap = system[1] - 1;
  for (std::size_t i = 1; i < system.size(); ++i) {
    if (system[i] - system[i - 1] < min_gap) return false;
  }
  return true;
}

bool jump_filter(const CoinSystem& system) {
  const std::size_t n = system.size();
  for (std::size_t m = 2; m < n; ++m) {
    if (system[m - 1] <= 2 * system[m - 2] || system[m] <= 2 * system[m - 1]) {
      continue;
    }
    const Value jump = system[m] - system[m - 1];
    for (std::size_t t = m; t + 1 < n; ++t) {
      if (system[t + 1] - system[t] < jump) return false;
    }
  }
  return true;
}

DisjointnessResult chang_disjointness(const CoinSystem& system) {
  using Status = DisjointnessResult::Status;
  const auto w = min_counterexample_oracle(system);
  if (!w) return {Status::vacuous, std::nullopt, std::nullopt};

  const Representation greedy = greedy_representation(system, *w);
  for (const Representation& optimal : optimal_representations(system, *w)) {
    for (std::size_t i = 0; i < system.size(); ++i) {
      if (greedy[i] != 0 && optimal[i] != 0) {
        return {Status::violated, w, optimal};
      }
    }
  }
  return {Status::holds, w, std::nullopt};
}

}  // namespace coinsys
