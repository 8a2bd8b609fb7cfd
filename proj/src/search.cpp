#include "coinsys/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "coinsys/canonicality.hpp"

namespace coinsys {

namespace {

// Deterministic every-k-th sampler; period 0 disables sampling.
class SpotSampler {
 public:
  explicit SpotSampler(double rate)
      : period_(rate <= 0.0 ? 0
                            : static_cast<std::uint64_t>(std::llround(1.0 / std::min(rate, 1.0)))) {}

  bool take() { return period_ != 0 && counter_++ % period_ == 0; }

 private:
  std::uint64_t period_;
  std::uint64_t counter_ = 0;
};

// Depth-first walk over increasing tuples (1, c_2, ...) with c_2 fixed.
// At each prefix length >= 3 it computes the Pearson verdict once and asks
// descend(length, orderly) whether to keep going; leaf(values, marks) sees
// complete systems of length n.
class PrefixWalker {
 public:
  PrefixWalker(std::size_t n, Value max_cn, double sample_rate)
      : n_(n), max_cn_(max_cn), sampler_(sample_rate) {}

  template <typename Descend, typename Leaf>
  void run(Value c2, Descend&& descend, Leaf&& leaf) {
    values_ = {1, c2};
    marks_ = {Mark::plus, Mark::plus};
    extend(descend, leaf);
  }

  std::uint64_t spot_checked = 0;
  std::uint64_t spot_disagreements = 0;

 private:
  template <typename Descend, typename Leaf>
  void extend(Descend& descend, Leaf& leaf) {
    const std::size_t len = values_.size();
    if (len == n_) {
      leaf(values_, marks_);
      return;
    }
    // Leave room for the remaining n - len - 1 coins below max_cn.
    const Value hi = max_cn_ - (n_ - len - 1);
    for (Value c = values_.back() + 1; c <= hi; ++c) {
      values_.push_back(c);
      const CoinSystem prefix(values_);
      const bool orderly = pearson_orderly(prefix);
      if (sampler_.take()) {
        ++spot_checked;
        if (orderly == min_counterexample_oracle(prefix).has_value()) {
          ++spot_disagreements;
        }
      }
      marks_.push_back(orderly ? Mark::plus : Mark::minus);
      if (descend(len + 1, orderly)) extend(descend, leaf);
      marks_.pop_back();
      values_.pop_back();
    }
  }

  std::size_t n_;
  Value max_cn_;
  SpotSampler sampler_;
  std::vector<Value> values_;
  std::vector<Mark> marks_;
};

// Runs work(c2_index) for every partition, on up to `jobs` threads. Each
// partition writes only its own slot, so the merge order is fixed.
template <typename Work>
void run_partitions(std::size_t partitions, const SweepOptions& options,
                    Work&& work) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < partitions; i = next++) {
        work(i);
        const std::size_t finished = ++done;
        if (options.progress) {
          std::lock_guard lock(mutex);
          options.progress(finished, partitions);
        }
      }
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!failure) failure = std::current_exception();
      next = partitions;
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || partitions <= 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, partitions); ++t) {
      threads.emplace_back(worker);
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

void validate(const EnumSpec& spec) {
  if (spec.n < 3) throw std::invalid_argument("enumeration needs n >= 3");
  if (spec.max_cn < spec.n) {
    throw std::invalid_argument("enumeration needs max_cn >= n");
  }
  if (spec.max_cn > kMaxDenomination) {
    throw RangeError("max_cn exceeds the supported range");
  }
}

SystemEnumerator::SystemEnumerator(EnumSpec spec) : spec_(spec) {
  validate(spec_);
}

std::optional<EnumeratedSystem> SystemEnumerator::next() {
  if (done_) return std::nullopt;
  const std::size_t n = spec_.n;
  if (!started_) {
    started_ = true;
    current_.resize(n);
    for (std::size_t i = 0; i < n; ++i) current_[i] = i + 1;
  } else {
    // Advance the rightmost position that still has room.
    std::size_t i = n - 1;
    while (i >= 1 && current_[i] == spec_.max_cn - (n - 1 - i)) --i;
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
    ++current_[i];
    for (std::size_t j = i + 1; j < n; ++j) current_[j] = current_[j - 1] + 1;
  }
  EnumeratedSystem out{CoinSystem(current_)};
  if (spec_.gap_filter) out.gap_rejected = !gap_filter(out.system);
  if (spec_.jump_filter) out.jump_rejected = !jump_filter(out.system);
  return out;
}

std::uint64_t system_count(const EnumSpec& spec) {
  validate(spec);
  // binomial(max_cn - 1, n - 1), multiplicative form stays exact.
  const std::uint64_t top = spec.max_cn - 1;
  const std::uint64_t k = spec.n - 1;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = checked_mul(result, top - k + i) / i;
  }
  return result;
}

Census pattern_census(const EnumSpec& spec, const SweepOptions& options) {
  validate(spec);
  const std::size_t partitions = spec.max_cn - spec.n + 1;  // c2 = 2 .. max_cn-n+2
  std::vector<Census> parts(partitions);

  run_partitions(partitions, options, [&](std::size_t index) {
    Census& part = parts[index];
    PrefixWalker walker(spec.n, spec.max_cn, options.sample_rate);
    walker.run(
        static_cast<Value>(index + 2), [](std::size_t, bool) { return true; },
        [&](const std::vector<Value>&, const std::vector<Mark>& marks) {
          ++part.counts[Pattern(marks).to_string()];
          ++part.total;
        });
    part.spot_checked = walker.spot_checked;
    part.spot_disagreements = walker.spot_disagreements;
  });

  Census merged;
  for (const Census& part : parts) {
    for (const auto& [key, count] : part.counts) merged.counts[key] += count;
    merged.total += part.total;
    merged.spot_checked += part.spot_checked;
    merged.spot_disagreements += part.spot_disagreements;
  }
  return merged;
}

ConjectureScan conjecture_scan(const std::vector<std::size_t>& lengths,
                               Value max_cn, const SweepOptions& options) {
  ConjectureScan scan;
  for (std::size_t n : lengths) {
    if (n < 5) throw std::invalid_argument("conjecture scan needs n >= 5");
    if (max_cn < n) continue;

    const std::size_t partitions = max_cn - n + 1;
    std::vector<ConjectureScan> parts(partitions);
    run_partitions(partitions, options, [&](std::size_t index) {
      ConjectureScan& part = parts[index];
      PrefixWalker walker(n, max_cn, options.sample_rate);
      // Target: + at lengths 1..3 and n, - in between.
      auto descend = [&](std::size_t len, bool orderly) {
        if (len == n) return orderly;
        return len <= 3 ? orderly : !orderly;
      };
      walker.run(static_cast<Value>(index + 2), descend,
                 [&](const std::vector<Value>& values, const std::vector<Mark>& marks) {
                   CoinSystem system(values);
                   const bool pattern_ok = verify_target_pattern(system);
                   const bool confirmed = oracle_pattern(system) == Pattern(marks);
                   auto membership = family_membership(system);
                   part.findings.push_back(ConjectureFinding{
                       std::move(system), pattern_ok, membership, confirmed});
                 });
      part.spot_checked = walker.spot_checked;
      part.disagreements = walker.spot_disagreements;
    });

    for (ConjectureScan& part : parts) {
      for (ConjectureFinding& finding : part.findings) {
        if (!finding.membership) ++scan.unexplained;
        if (n >= 7 && n % 3 == 1) ++scan.bad_length;
        if (!finding.oracle_confirmed || !finding.pattern_ok) ++scan.disagreements;
        scan.findings.push_back(std::move(finding));
      }
      scan.spot_checked += part.spot_checked;
      scan.disagreements += part.disagreements;
    }
  }
  return scan;
}

}  // namespace coinsys
