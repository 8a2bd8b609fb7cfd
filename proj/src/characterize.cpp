#include "coinsys/characterize.hpp"

#include <algorithm>
#include <stdexcept>

#include "coinsys/canonicality.hpp"

namespace coinsys {

namespace {

void require_length(const CoinSystem& system, std::size_t n) {
  if (system.size() != n) {
    throw std::invalid_argument("expected a " + std::to_string(n) +
                                "-value coin system, got " + system.to_string());
  }
}

// One Point verdict for prefix(len) extended by its next coin, where the
// caller has already established that prefix(len - 1) is orderly.
bool extension_orderly(const CoinSystem& system, std::size_t len) {
  return one_point_check(system.prefix(len - 1), system[len - 1],
                         PrefixCheck::trusted)
      .orderly;
}

// greedy count of m * c evaluated in the 4-value prefix, the side condition
// of cases 1b and 1c.
bool prefix4_one_point(const CoinSystem& system, Value unit, Value bound) {
  const Value m = ceil_div(bound, unit);
  return greedy_count(system.prefix(4), m * unit) <= m;
}

}  // namespace

Pattern::Pattern(std::vector<Mark> marks) : marks_(std::move(marks)) {}

Pattern Pattern::parse(std::string_view text) {
  std::vector<Mark> marks;
  marks.reserve(text.size());
  for (char ch : text) {
    if (ch == '+') {
      marks.push_back(Mark::plus);
    } else if (ch == '-') {
      marks.push_back(Mark::minus);
    } else {
      throw std::invalid_argument("pattern must contain only '+' and '-'");
    }
  }
  return Pattern(std::move(marks));
}

bool Pattern::all_plus() const {
  return std::all_of(marks_.begin(), marks_.end(),
                     [](Mark m) { return m == Mark::plus; });
}

std::string Pattern::to_string() const {
  std::string out;
  out.reserve(marks_.size());
  for (Mark m : marks_) out.push_back(static_cast<char>(m));
  return out;
}

bool orderly3(Value c2, Value c3) {
  if (c2 <= 1 || c3 <= c2) {
    throw std::invalid_argument("orderly3 needs 1 < c2 < c3");
  }
  const Value gap = c3 - c2;
  const Value m = ceil_div(gap, c2);
  return m * c2 - m <= gap && gap <= m * c2;
}

bool orderly4(const CoinSystem& system) {
  require_length(system, 4);
  return orderly3(system[1], system[2]) && extension_orderly(system, 4);
}

bool orderly5(const CoinSystem& system) {
  require_length(system, 5);
  const Value a = system[2];
  if (system[1] == 2 && a >= 4 && system[3] == a + 1 && system[4] == 2 * a) {
    return true;
  }
  return orderly4(system.prefix(4)) && extension_orderly(system, 5);
}

std::string_view to_string(SixValueCase label) {
  switch (label) {
    case SixValueCase::case_1a: return "1a";
    case SixValueCase::case_1b: return "1b";
    case SixValueCase::case_1c: return "1c";
    case SixValueCase::case_2a: return "2a";
    case SixValueCase::case_2b: return "2b";
    case SixValueCase::case_3_totally: return "3-totally";
    case SixValueCase::case_3_plus_minus_plus: return "3-plusminusplus";
    case SixValueCase::not_orderly: return "not-orderly";
  }
  return "unknown";
}

SixValueClass classify6(const CoinSystem& system) {
  require_length(system, 6);
  const Value c2 = system[1], c3 = system[2], c4 = system[3], c5 = system[4],
              c6 = system[5];

  // 1a: (1, 2, 3, a, a+1, 2a), a >= 5
  if (c2 == 2 && c3 == 3 && c4 >= 5 && c5 == c4 + 1 && c6 == 2 * c4) {
    return {SixValueCase::case_1a, SixValueParams{c4, {}, {}}};
  }

  const Value a = c2;
  const Value b = c4;

  // 1b: (1, a, 2a, b, b+a, 2b)
  if (c3 == 2 * a && c5 == b + a && c6 == 2 * b && b >= 3 * a - 1 && b != 3 * a &&
      prefix4_one_point(system, 2 * a, b)) {
    return {SixValueCase::case_1b, SixValueParams{a, b, ceil_div(b, 2 * a)}};
  }

  // 1c: (1, a, 2a-1, b, b+a-1, 2b-1)
  if (c3 == 2 * a - 1 && c5 == b + a - 1 && c6 == 2 * b - 1 && b >= 3 * a - 1 &&
      prefix4_one_point(system, 2 * a - 1, b)) {
    return {SixValueCase::case_1c, SixValueParams{a, b, ceil_div(b, 2 * a - 1)}};
  }

  const Value unit = 2 * a - 1;

  // 2a: (1, a, 2a-1, m(2a-1)-(a-1), m(2a-1), (2m-1)(2a-1)), 1 < m < a
  if (c3 == unit && c5 % unit == 0) {
    const Value m = c5 / unit;
    if (1 < m && m < a && c4 + (a - 1) == m * unit && c6 == (2 * m - 1) * unit) {
      return {SixValueCase::case_2a, SixValueParams{a, {}, m}};
    }
  }

  // 2b: (1, a, 2a, m(2a-1)-(a-1), m(2a-1)+1, (2m-1)(2a-1)+1), 1 < m <= a
  if (c3 == 2 * a && (c5 - 1) % unit == 0) {
    const Value m = (c5 - 1) / unit;
    if (1 < m && m <= a && c4 + (a - 1) == m * unit &&
        c6 == (2 * m - 1) * unit + 1) {
      return {SixValueCase::case_2b, SixValueParams{a, {}, m}};
    }
  }

  // 3: orderly 5-value prefix and a passing One Point check on c6.
  const CoinSystem prefix5 = system.prefix(5);
  if (orderly5(prefix5) && extension_orderly(system, 6)) {
    return {orderly4(system.prefix(4)) ? SixValueCase::case_3_totally
                                       : SixValueCase::case_3_plus_minus_plus,
            std::nullopt};
  }
  return {};
}

std::optional<CoinSystem> regenerate(SixValueCase label,
                                     const SixValueParams& params) {
  switch (label) {
    case SixValueCase::case_1a: {
      const Value a = params.a.value();
      return CoinSystem{1, 2, 3, a, a + 1, 2 * a};
    }
    case SixValueCase::case_1b: {
      const Value a = params.a.value(), b = params.b.value();
      return CoinSystem{1, a, 2 * a, b, b + a, 2 * b};
    }
    case SixValueCase::case_1c: {
      const Value a = params.a.value(), b = params.b.value();
      return CoinSystem{1, a, 2 * a - 1, b, b + a - 1, 2 * b - 1};
    }
    case SixValueCase::case_2a: {
      const Value a = params.a.value(), m = params.m.value();
      const Value u = 2 * a - 1;
      return CoinSystem{1, a, u, m * u - (a - 1), m * u, (2 * m - 1) * u};
    }
    case SixValueCase::case_2b: {
      const Value a = params.a.value(), m = params.m.value();
      const Value u = 2 * a - 1;
      return CoinSystem{1, a, 2 * a, m * u - (a - 1), m * u + 1, (2 * m - 1) * u + 1};
    }
    default:
      return std::nullopt;
  }
}

std::optional<Pattern> implied_pattern(SixValueCase label) {
  switch (label) {
    case SixValueCase::case_1a:
    case SixValueCase::case_1b:
    case SixValueCase::case_1c:
      return Pattern::parse("++++-+");
    case SixValueCase::case_2a:
    case SixValueCase::case_2b:
      return Pattern::parse("+++--+");
    case SixValueCase::case_3_totally:
      return Pattern::parse("++++++");
    case SixValueCase::case_3_plus_minus_plus:
      return Pattern::parse("+++-++");
    case SixValueCase::not_orderly:
      return std::nullopt;
  }
  return std::nullopt;
}

Pattern pattern(const CoinSystem& system) {
  std::vector<Mark> marks;
  marks.reserve(system.size());
  for (std::size_t len = 1; len <= system.size(); ++len) {
    const bool orderly = len <= 2 || pearson_orderly(system.prefix(len));
    marks.push_back(orderly ? Mark::plus : Mark::minus);
  }
  return Pattern(std::move(marks));
}

Pattern oracle_pattern(const CoinSystem& system) {
  std::vector<Mark> marks;
  marks.reserve(system.size());
  for (std::size_t len = 1; len <= system.size(); ++len) {
    const bool orderly = !min_counterexample_oracle(system.prefix(len));
    marks.push_back(orderly ? Mark::plus : Mark::minus);
  }
  return Pattern(std::move(marks));
}

bool is_totally_orderly(const CoinSystem& system) {
  return pattern(system).all_plus();
}

}  // namespace coinsys
