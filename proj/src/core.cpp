#include "coinsys/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace coinsys {

namespace {

constexpr Count kUnreachable = std::numeric_limits<Count>::max();

void require_table(Value v, Value cap) {
  if (v > cap) {
    throw ResourceLimit("value " + std::to_string(v) +
                        " exceeds the DP table cap " + std::to_string(cap));
  }
}

// suffix[k][u]: fewest coins for u using denominations k..n-1 only.
// Row n is the empty coin set (0 for u = 0, unreachable otherwise).
std::vector<std::vector<Count>> suffix_tables(const CoinSystem& system,
                                              Value v) {
  const std::size_t n = system.size();
  std::vector<std::vector<Count>> suffix(n + 1,
                                         std::vector<Count>(v + 1, kUnreachable));
  suffix[n][0] = 0;
  for (std::size_t k = n; k-- > 0;) {
    const Value coin = system[k];
    auto& row = suffix[k];
    const auto& next = suffix[k + 1];
    for (Value u = 0; u <= v; ++u) {
      Count best = next[u];
      if (u >= coin && row[u - coin] != kUnreachable) {
        best = std::min(best, row[u - coin] + 1);
      }
      row[u] = best;
    }
  }
  return suffix;
}

void collect_optimal(const CoinSystem& system,
                     const std::vector<std::vector<Count>>& suffix,
                     std::size_t k, Value remaining, Count budget,
                     std::vector<Count>& counts,
                     std::vector<Representation>& out) {
  if (k == system.size()) {
    if (remaining == 0 && budget == 0) out.emplace_back(system, counts);
    return;
  }
  const Value coin = system[k];
  for (Count t = 0; t <= budget && t * coin <= remaining; ++t) {
    const Count rest = suffix[k + 1][remaining - t * coin];
    if (rest != kUnreachable && t + rest == budget) {
      counts[k] = t;
      collect_optimal(system, suffix, k + 1, remaining - t * coin, budget - t,
                      counts, out);
    }
  }
  counts[k] = 0;
}

}  // namespace

Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw RangeError("integer overflow in addition");
  }
  return out;
}

Value checked_mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw RangeError("integer overflow in multiplication");
  }
  return out;
}

CoinSystem::CoinSystem(std::vector<Value> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("coin system must have at least one value");
  }
  if (values_.front() != 1) {
    throw std::invalid_argument("coin system must start at 1");
  }
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] <= values_[i - 1]) {
      throw std::invalid_argument("coin values must be strictly increasing");
    }
  }
  if (values_.back() > kMaxDenomination) {
    throw RangeError("coin value " + std::to_string(values_.back()) +
                     " exceeds the supported range");
  }
}

CoinSystem CoinSystem::parse(std::string_view text) {
  std::vector<Value> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) {
      field.remove_prefix(1);
    }
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) {
      field.remove_suffix(1);
    }
    Value value = 0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      if (ec == std::errc::result_out_of_range) {
        throw RangeError("denomination out of range: '" + std::string(field) + "'");
      }
      throw std::invalid_argument("malformed denomination: '" +
                                  std::string(field) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return CoinSystem(std::move(values));
}

CoinSystem CoinSystem::prefix(std::size_t length) const {
  if (length == 0 || length > values_.size()) {
    throw std::invalid_argument("prefix length out of range");
  }
  return CoinSystem(std::vector<Value>(values_.begin(), values_.begin() + length));
}

CoinSystem CoinSystem::extended(Value next) const {
  if (next <= largest()) {
    throw std::invalid_argument("extension must exceed the largest coin");
  }
  auto values = values_;
  values.push_back(next);
  return CoinSystem(std::move(values));
}

std::size_t CoinSystem::largest_index_at_most(Value v) const {
  auto it = std::upper_bound(values_.begin(), values_.end(), v);
  return static_cast<std::size_t>(it - values_.begin()) - 1;
}

std::string CoinSystem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Representation::Representation(CoinSystem system, std::vector<Count> counts)
    : system_(std::move(system)), counts_(std::move(counts)) {
  if (counts_.size() != system_.size()) {
    throw std::invalid_argument("representation length must match the coin system");
  }
}

Representation::Representation(CoinSystem system)
    : Representation(system, std::vector<Count>(system.size(), 0)) {}

Value Representation::value() const {
  Value total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    total = checked_add(total, checked_mul(counts_[i], system_[i]));
  }
  return total;
}

Count Representation::size() const {
  Count total = 0;
  for (Count c : counts_) total = checked_add(total, c);
  return total;
}

std::vector<std::size_t> Representation::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] != 0) out.push_back(i);
  }
  return out;
}

std::string Representation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) os << ',';
    os << counts_[i];
  }
  os << ')';
  return os.str();
}

static void require_query(Value v) {
  if (v > kMaxQueryValue) {
    throw RangeError("value " + std::to_string(v) + " is out of the supported range");
  }
}

Representation greedy_representation(const CoinSystem& system, Value v) {
  require_query(v);
  std::vector<Count> counts(system.size(), 0);
  Value remainder = v;
  for (std::size_t i = system.size(); i-- > 0;) {
    counts[i] = remainder / system[i];
    remainder %= system[i];
  }
  return Representation(system, std::move(counts));
}

Count greedy_count(const CoinSystem& system, Value v) {
  require_query(v);
  Count total = 0;
  Value remainder = v;
  for (std::size_t i = system.size(); i-- > 0 && remainder != 0;) {
    total += remainder / system[i];
    remainder %= system[i];
  }
  return total;
}

Count opt_count(const CoinSystem& system, Value v, Value cap) {
  require_table(v, cap);
  std::vector<Count> best(v + 1, kUnreachable);
  best[0] = 0;
  for (Value u = 1; u <= v; ++u) {
    for (Value coin : system.values()) {
      if (coin > u) break;
      best[u] = std::min(best[u], best[u - coin] + 1);
    }
  }
  return best[v];
}

Representation lex_smallest_optimal(const CoinSystem& system, Value v,
                                    Value cap) {
  require_table(v, cap);
  const auto suffix = suffix_tables(system, v);
  std::vector<Count> counts(system.size(), 0);
  Value remaining = v;
  Count budget = suffix[0][v];
  for (std::size_t k = 0; k < system.size(); ++k) {
    const Value coin = system[k];
    for (Count t = 0; t * coin <= remaining; ++t) {
      const Count rest = suffix[k + 1][remaining - t * coin];
      if (rest != kUnreachable && t + rest == budget) {
        counts[k] = t;
        remaining -= t * coin;
        budget -= t;
        break;
      }
    }
  }
  return Representation(system, std::move(counts));
}

std::vector<Representation> optimal_representations(const CoinSystem& system,
                                                     Value v, Value cap) {
  require_table(v, cap);
  const auto suffix = suffix_tables(system, v);
  std::vector<Representation> out;
  std::vector<Count> counts(system.size(), 0);
  collect_optimal(system, suffix, 0, v, suffix[0][v], counts, out);
  return out;
}

std::strong_ordering lex_compare(const Representation& x,
                                 const Representation& y) {
  if (x.length() != y.length()) {
    throw std::invalid_argument("cannot compare representations of different length");
  }
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (x[i] != y[i]) return x[i] <=> y[i];
  }
  return std::strong_ordering::equal;
}

ChangeTable::ChangeTable(const CoinSystem& system, Value bound, Value cap) {
  require_table(bound, cap);
  greedy_.assign(bound + 1, 0);
  opt_.assign(bound + 1, kUnreachable);
  opt_[0] = 0;
  std::size_t top = 0;
  for (Value u = 1; u <= bound; ++u) {
    while (top + 1 < system.size() && system[top + 1] <= u) ++top;
    greedy_[u] = greedy_[u - system[top]] + 1;
    for (std::size_t i = 0; i <= top; ++i) {
      opt_[u] = std::min(opt_[u], opt_[u - system[i]] + 1);
    }
  }
}

}  // namespace coinsys
