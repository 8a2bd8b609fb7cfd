#include "coinsys/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "coinsys/canonicality.hpp"
#include "coinsys/characterize.hpp"

namespace coinsys {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

bool is_counterexample(const CoinSystem& system, Value v) {
  return greedy_count(system, v) > opt_count(system, v);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  if (text == "D" || text == "d") return Family::D;
  if (text == "E" || text == "e") return Family::E;
  if (text == "F" || text == "f") return Family::F;
  return std::nullopt;
}

CoinSystem gen_fixed_gap(const FixedGapSpec& spec) {
  require(3 < spec.ell && spec.ell < spec.n, "fixed gap spec needs 3 < ell < n");
  require(spec.x >= 2, "fixed gap spec needs x >= 2");
  require(spec.delta1 > 0 && spec.delta2 > 0, "fixed gap increments must be positive");
  require(spec.delta1 != spec.delta2, "fixed gap increments must differ");

  std::vector<Value> values{1, spec.x};
  values.reserve(spec.n);
  const Value both = checked_add(spec.delta1, spec.delta2);
  for (std::size_t i = 3; i <= spec.n; ++i) {
    Value step;
    if (i > spec.ell) {
      step = both;
    } else {
      step = (i % 2 == 1) ? spec.delta1 : spec.delta2;
    }
    values.push_back(checked_add(values.back(), step));
  }
  return CoinSystem(std::move(values));
}

FixedGapSpec fixed_gap_spec(const FamilyParams& p) {
  switch (p.family) {
    case Family::D:
      require(p.r >= 1 && p.a >= 2, "family D needs r >= 1 and a >= 2");
      return {3 * p.r + 2, 2 * p.r + 2, 2, p.a, 1};
    case Family::E: {
      require(p.r >= 2 && 1 < p.m && p.m < p.a, "family E needs r >= 2 and 1 < m < a");
      const Value stage2 = checked_mul(p.m - 1, 2 * p.a - 1);
      return {3 * p.r, 2 * p.r + 1, p.a, p.a - 1, stage2 - (p.a - 1)};
    }
    case Family::F: {
      require(p.r >= 2 && 1 < p.m && p.m <= p.a, "family F needs r >= 2 and 1 < m <= a");
      const Value stage2 = checked_mul(p.m - 1, 2 * p.a - 1);
      require(stage2 > p.a, "family F needs (m-1)(2a-1) > a");
      return {3 * p.r, 2 * p.r + 1, p.a, p.a, stage2 - p.a};
    }
  }
  throw std::invalid_argument("unknown family");
}

CoinSystem generate(const FamilyParams& params) {
  return gen_fixed_gap(fixed_gap_spec(params));
}

CoinSystem gen_D(Value r, Value a) { return generate({Family::D, r, a, 0}); }
CoinSystem gen_E(Value r, Value m, Value a) { return generate({Family::E, r, a, m}); }
CoinSystem gen_F(Value r, Value m, Value a) { return generate({Family::F, r, a, m}); }

bool verify_target_pattern(const CoinSystem& system) {
  const std::size_t n = system.size();
  require(n >= 5, "target pattern needs at least 5 coin values");
  const Pattern p = pattern(system);
  for (std::size_t i = 0; i < n; ++i) {
    const Mark expected = (i < 3 || i + 1 == n) ? Mark::plus : Mark::minus;
    if (p[i] != expected) return false;
  }
  return true;
}

LemmaReport lemma_prefix_check(const FixedGapSpec& spec) {
  const CoinSystem system = gen_fixed_gap(spec);
  const bool odd = spec.ell % 2 == 1;
  if (!odd) {
    require(spec.x + spec.delta1 > spec.delta2 + 1,
            "even ell needs x + delta1 > delta2 + 1");
  }
  const std::size_t last = std::min<std::size_t>(
      odd ? (3 * spec.ell - 5) / 2 : (3 * spec.ell - 4) / 2, spec.n);

  // 1-based coin c_i is system[i - 1].
  auto coin = [&](std::size_t i) { return system[i - 1]; };
  LemmaReport report;
  for (std::size_t k = 5; k <= last; ++k) {
    Value witness;
    if (k <= spec.ell) {
      witness = 2 * coin(k - 1);
    } else {
      // 2 c_{2r} when ell = 2r + 1, 2 c_{2r+1} when ell = 2r + 2.
      witness = 2 * coin(spec.ell - 1);
    }
    const CoinSystem prefix = system.prefix(k);
    report.prefixes.push_back(LemmaPrefix{
        k, min_counterexample_oracle(prefix).has_value(), witness,
        is_counterexample(prefix, witness)});
  }
  return report;
}

std::optional<FamilyParams> family_membership(const CoinSystem& system) {
  const std::size_t n = system.size();
  auto matches = [&](const FamilyParams& p) {
    try {
      return generate(p) == system;
    } catch (const std::invalid_argument&) {
      return false;
    }
  };

  if (n >= 5 && n % 3 == 2 && system[1] == 2 && system[2] > 3) {
    const FamilyParams p{Family::D, (n - 2) / 3, system[2] - 2, 0};
    if (matches(p)) return p;
  }
  if (n >= 6 && n % 3 == 0) {
    const Value a = system[1];
    const Value unit = 2 * a - 1;
    const Value gap = system[n - 1] - system[n - 2];
    if (gap % unit == 0) {
      const Value m = gap / unit + 1;
      for (Family family : {Family::E, Family::F}) {
        const FamilyParams p{family, n / 3, a, m};
        if (matches(p)) return p;
      }
    }
  }
  return std::nullopt;
}

}  // namespace coinsys
