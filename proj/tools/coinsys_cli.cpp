// coinsys: command-line front end for checking, classifying and searching
// coin systems.
//
// Exit codes: 0 success, 1 conjecture violation found, 2 usage error,
// 3 internal disagreement between independent checks.

#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "coinsys/canonicality.hpp"
#include "coinsys/characterize.hpp"
#include "coinsys/core.hpp"
#include "coinsys/families.hpp"
#include "coinsys/record.hpp"
#include "coinsys/search.hpp"

namespace {

using namespace coinsys;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;

// Reported by a command when independent routes disagree.
struct Disagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  bool csv = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  double sample = 0.01;
};

class Printer {
 public:
  Printer(bool csv, std::vector<std::string> columns)
      : csv_(csv), columns_(std::move(columns)) {
    if (csv_) std::cout << csv_header(columns_) << '\n';
  }

  void emit(const OutputRecord& record) {
    std::cout << (csv_ ? record.to_csv_row(columns_) : record.to_json_line())
              << '\n';
  }

 private:
  bool csv_;
  std::vector<std::string> columns_;
};

Json counts_json(const Representation& rep) {
  return Json(std::vector<Count>(rep.counts().begin(), rep.counts().end()));
}

SweepOptions sweep_options(const GlobalOptions& global) {
  SweepOptions options;
  options.jobs = global.jobs;
  options.sample_rate = global.sample;
  if (isatty(STDERR_FILENO)) {
    options.progress = [](std::size_t done, std::size_t total) {
      std::cerr << "\rpartition " << done << "/" << total << std::flush;
      if (done == total) std::cerr << '\n';
    };
  }
  return options;
}

// --- check -----------------------------------------------------------------

enum class CheckRoute { both, oracle, pearson };

OutputRecord check_record(const CoinSystem& system, CheckRoute route) {
  std::optional<Value> witness;
  bool orderly = true;
  if (route != CheckRoute::pearson) {
    witness = min_counterexample_oracle(system);
    orderly = !witness;
  }
  if (route != CheckRoute::oracle) {
    const bool pearson = pearson_orderly(system);
    const auto pearson_witness = pearson_min_counterexample(system);
    if (route == CheckRoute::both &&
        (pearson != orderly || pearson_witness != witness)) {
      throw Disagreement("oracle and Pearson routes disagree on " +
                         system.to_string());
    }
    orderly = pearson;
    witness = pearson_witness;
  }

  OutputRecord record;
  record.set("system", system.to_string()).set("orderly", orderly);
  if (witness) {
    const Representation greedy = greedy_representation(system, *witness);
    const Representation optimal = lex_smallest_optimal(system, *witness);
    record.set("min_counterexample", *witness)
        .set("greedy_count", greedy.size())
        .set("opt_count", optimal.size())
        .set("greedy_representation", counts_json(greedy))
        .set("optimal_representation", counts_json(optimal));
  }
  return record;
}

// --- classify --------------------------------------------------------------

OutputRecord classify_record(const CoinSystem& system) {
  OutputRecord record;
  record.set("system", system.to_string());
  switch (system.size()) {
    case 3: {
      const bool ok = orderly3(system[1], system[2]);
      record.set("orderly", ok).set("case_label", ok ? "orderly" : "not-orderly");
      break;
    }
    case 4: {
      const bool ok = orderly4(system);
      record.set("orderly", ok)
          .set("case_label", ok ? "totally-orderly" : "not-orderly");
      break;
    }
    case 5: {
      const bool ok = orderly5(system);
      record.set("orderly", ok);
      if (!ok) {
        record.set("case_label", "not-orderly");
      } else if (system[1] == 2 && system[3] == system[2] + 1 &&
                 system[4] == 2 * system[2] && system[2] >= 4 &&
                 !orderly4(system.prefix(4))) {
        record.set("case_label", "1").set("params", Json{{"a", system[2]}});
      } else {
        record.set("case_label", "2-totally-orderly");
      }
      break;
    }
    case 6: {
      const SixValueClass cls = classify6(system);
      record.set("orderly", cls.label != SixValueCase::not_orderly)
          .set("case_label", std::string(to_string(cls.label)));
      if (cls.params) {
        Json params = Json::object();
        if (cls.params->a) params["a"] = *cls.params->a;
        if (cls.params->b) params["b"] = *cls.params->b;
        if (cls.params->m) params["m"] = *cls.params->m;
        record.set("params", params);
      }
      break;
    }
    default:
      throw std::invalid_argument("classify needs a system of 3 to 6 values");
  }
  return record;
}

Json family_params_json(const FamilyParams& p) {
  Json params{{"r", p.r}, {"a", p.a}};
  if (p.family != Family::D) params["m"] = p.m;
  return params;
}

// --- commands --------------------------------------------------------------

int run_check(const GlobalOptions& global, const std::string& text,
              bool oracle, bool pearson) {
  if (oracle && pearson) {
    throw std::invalid_argument("--oracle and --pearson are mutually exclusive");
  }
  const CheckRoute route = oracle    ? CheckRoute::oracle
                           : pearson ? CheckRoute::pearson
                                     : CheckRoute::both;
  Printer printer(global.csv, system_columns());
  printer.emit(check_record(CoinSystem::parse(text), route));
  return kExitOk;
}

int run_pattern(const GlobalOptions& global, const std::string& text) {
  const CoinSystem system = CoinSystem::parse(text);
  OutputRecord record;
  record.set("system", system.to_string()).set("pattern", pattern(system).to_string());
  Printer(global.csv, system_columns()).emit(record);
  return kExitOk;
}

int run_classify(const GlobalOptions& global, const std::string& text) {
  Printer(global.csv, system_columns()).emit(classify_record(CoinSystem::parse(text)));
  return kExitOk;
}

int run_family(const GlobalOptions& global, const std::string& name, Value r,
               Value a, Value m) {
  const auto family = parse_family(name);
  if (!family) throw std::invalid_argument("unknown family '" + name + "'");
  const FamilyParams params{*family, r, a, *family == Family::D ? 0 : m};
  const CoinSystem system = generate(params);

  OutputRecord record;
  record.set("system", system.to_string())
      .set("family", std::string(to_string(*family)))
      .set("params", family_params_json(params))
      .set("pattern", pattern(system).to_string())
      .set("orderly", pearson_orderly(system));
  if (system.size() >= 5 && !verify_target_pattern(system)) {
    throw Disagreement("generated system " + system.to_string() +
                       " does not have the target pattern");
  }
  Printer(global.csv, system_columns()).emit(record);
  return kExitOk;
}

int run_enumerate(const GlobalOptions& global, std::size_t n, Value max_cn) {
  const EnumSpec spec{n, max_cn};
  const Census census = pattern_census(spec, sweep_options(global));

  Printer printer(global.csv, {"kind", "pattern", "count", "total",
                               "spot_checked", "spot_disagreements"});
  for (const auto& [key, count] : census.counts) {
    OutputRecord record;
    record.set("kind", "census").set("pattern", key).set("count", count);
    printer.emit(record);
  }
  OutputRecord summary;
  summary.set("kind", "summary")
      .set("total", census.total)
      .set("spot_checked", census.spot_checked)
      .set("spot_disagreements", census.spot_disagreements);
  printer.emit(summary);
  if (census.spot_disagreements != 0) {
    std::cerr << "error: oracle spot checks disagreed with the Pearson test\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int run_conjecture(const GlobalOptions& global,
                   const std::vector<std::size_t>& lengths, Value max_cn) {
  const ConjectureScan scan = conjecture_scan(lengths, max_cn, sweep_options(global));

  Printer printer(global.csv,
                  {"kind", "system", "pattern", "family", "params",
                   "oracle_confirmed", "findings", "unexplained", "bad_length",
                   "violations", "disagreements", "spot_checked"});
  for (const ConjectureFinding& finding : scan.findings) {
    OutputRecord record;
    record.set("kind", "finding")
        .set("system", finding.system.to_string())
        .set("pattern", pattern(finding.system).to_string());
    if (finding.membership) {
      record.set("family", std::string(to_string(finding.membership->family)))
          .set("params", family_params_json(*finding.membership));
    }
    record.set("oracle_confirmed", finding.oracle_confirmed);
    printer.emit(record);
  }
  OutputRecord summary;
  summary.set("kind", "summary")
      .set("findings", scan.findings.size())
      .set("unexplained", scan.unexplained)
      .set("bad_length", scan.bad_length)
      .set("violations", scan.violations())
      .set("disagreements", scan.disagreements)
      .set("spot_checked", scan.spot_checked);
  printer.emit(summary);

  if (scan.disagreements != 0) {
    std::cerr << "error: oracle re-verification disagreed with the Pearson test\n";
    return kExitDisagreement;
  }
  if (scan.violations() != 0) {
    std::cerr << "conjecture violation: " << scan.violations()
              << " finding(s) outside the known families\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy change-making: orderliness checks, characterizations "
               "and exhaustive searches over coin systems"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_flag("--csv", global.csv, "CSV output instead of JSON lines");
  app.add_option("--jobs", global.jobs, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber);
  app.add_option("--sample", global.sample,
                 "Fraction of sweep verdicts re-checked by the brute-force oracle")
      ->check(CLI::Range(0.0, 1.0));

  std::string system_text;
  bool oracle = false;
  bool pearson = false;
  auto* check = app.add_subcommand("check", "Decide orderliness and report the minimal counterexample");
  check->add_option("system", system_text, "Comma-separated denominations, e.g. 1,5,10,25")->required();
  check->add_flag("--oracle", oracle, "Brute-force route only");
  check->add_flag("--pearson", pearson, "Pearson candidate route only");

  auto* pattern_cmd = app.add_subcommand("pattern", "Print the +/- pattern of prefix verdicts");
  pattern_cmd->add_option("system", system_text)->required();

  auto* classify = app.add_subcommand("classify", "Closed-form classification for 3 to 6 values");
  classify->add_option("system", system_text)->required();

  std::string family_name;
  Value r = 0, a = 0, m = 0;
  auto* family = app.add_subcommand("family", "Generate a member of family D, E or F");
  family->add_option("name", family_name, "D, E or F")->required();
  family->add_option("--r", r)->required();
  family->add_option("--a", a)->required();
  family->add_option("--m", m, "Required for E and F");

  std::size_t enum_n = 0;
  Value enum_max = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Pattern census over all systems of one length");
  enumerate->add_option("--n", enum_n)->required();
  enumerate->add_option("--max", enum_max, "Upper bound on the largest coin")->required();

  std::vector<std::size_t> conj_lengths;
  Value conj_max = 0;
  auto* conjecture = app.add_subcommand("conjecture", "Scan for (+++-...-+) systems outside D, E, F");
  conjecture->add_option("--n", conj_lengths, "Lengths to scan (repeat or comma-separate)")
      ->required()
      ->delimiter(',');
  conjecture->add_option("--max", conj_max)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return run_check(global, system_text, oracle, pearson);
    if (*pattern_cmd) return run_pattern(global, system_text);
    if (*classify) return run_classify(global, system_text);
    if (*family) {
      if (family_name != "D" && family_name != "d" && !family->count("--m")) {
        throw std::invalid_argument("families E and F need --m");
      }
      return run_family(global, family_name, r, a, m);
    }
    if (*enumerate) return run_enumerate(global, enum_n, enum_max);
    if (*conjecture) return run_conjecture(global, conj_lengths, conj_max);
  } catch (const Disagreement& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const std::logic_error& e) {
    // invalid_argument and length_error (DP cap) land here.
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
