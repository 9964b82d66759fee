// kdyck: exact turn statistics of k-Dyck paths.
//
// A k-Dyck path takes up-steps (1, k) and down-steps (1, -1), starts and
// ends on the x-axis and never dips below it. The tool computes, for the
// s-th up-step of such paths, the cumulative and average level of its
// max-turn (top of the up-step) and min-turn (end of the following
// down-run), by three independent routes that it can cross-verify:
// closed-form binomial sums, truncated generating-function expansion,
// and exhaustive enumeration.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 enumeration over budget, 4 routes disagree.

#include "kdyck/kdyck.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource_bound = 3;
constexpr int exit_method_mismatch = 4;

class method_mismatch_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

kdyck::Int oracle_bound_from_env() {
  const char* env = std::getenv("KDYCK_ORACLE_BOUND");
  if (env == nullptr || *env == '\0') return kdyck::Int(10000000);
  try {
    return kdyck::Int(std::string(env));
  } catch (const std::exception&) {
    throw std::invalid_argument("KDYCK_ORACLE_BOUND is not an integer: " + std::string(env));
  }
}

// Runs the writer against stdout or the --out file.
void with_output(const std::string& out_path, const std::function<void(std::ostream&)>& write) {
  if (out_path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
  write(file);
  if (!file.flush()) throw std::invalid_argument("cannot write output file: " + out_path);
}

struct TurnsConfig {
  int k = 1;
  int n = 0;
  int s = 0;
  int s_from = 0;
  int s_to = 0;
  std::string kind = "all";
  std::string method = "closed";
  std::string format = "csv";
  std::string out;
};

std::vector<kdyck::TurnKind> kinds_from_name(const std::string& name) {
  if (name == "all") return {kdyck::TurnKind::Min, kdyck::TurnKind::Max, kdyck::TurnKind::Osc};
  return {kdyck::kind_from_name(name)};
}

std::vector<kdyck::ReportRow> compute_turns(const TurnsConfig& cfg) {
  using namespace kdyck;
  validate_path_class(cfg.k, cfg.n);
  if (cfg.n < 1) throw std::invalid_argument("turns needs N >= 1 (an empty path has no turns)");
  int s_from = 1;
  int s_to = cfg.n;
  if (cfg.s != 0) {
    s_from = s_to = cfg.s;
  } else if (cfg.s_from != 0 || cfg.s_to != 0) {
    s_from = cfg.s_from != 0 ? cfg.s_from : 1;
    s_to = cfg.s_to != 0 ? cfg.s_to : cfg.n;
  }
  if (s_from < 1 || s_to > cfg.n || s_from > s_to)
    throw std::invalid_argument("turn range " + std::to_string(s_from) + ".." +
                                std::to_string(s_to) + " is not within 1.." +
                                std::to_string(cfg.n));
  const std::vector<TurnKind> kinds = kinds_from_name(cfg.kind);
  const Int count = fuss_catalan(cfg.k, cfg.n);

  const auto closed_value = [&](TurnKind kind, int s) {
    const StatRequest req{cfg.k, cfg.n, s};
    switch (kind) {
      case TurnKind::Min: return min_sum(req);
      case TurnKind::Max: return max_sum(req);
      case TurnKind::Osc: return osc_sum(req);
    }
    throw std::invalid_argument("unknown turn kind");
  };

  // The requested method computes the reported value; any non-closed
  // method is cross-checked against the closed form.
  std::function<Int(TurnKind, int)> method_value;
  std::optional<SeriesZW> gfs[3];
  std::optional<TurnSums> sums;
  if (cfg.method == "closed") {
    method_value = closed_value;
  } else if (cfg.method == "series") {
    method_value = [&, z = (cfg.k + 1) * cfg.n](TurnKind kind, int s) {
      auto& slot = gfs[static_cast<int>(kind)];
      if (!slot) {
        switch (kind) {
          case TurnKind::Min: slot = min_gf(cfg.k, z, s_to); break;
          case TurnKind::Max: slot = max_gf(cfg.k, z, s_to); break;
          case TurnKind::Osc: slot = osc_gf(cfg.k, z, s_to); break;
        }
      }
      return slot->int_coeff(z, s);
    };
  } else if (cfg.method == "oracle") {
    require_within_bound(cfg.k, cfg.n, oracle_bound_from_env());
    method_value = [&](TurnKind kind, int s) {
      if (!sums) sums = oracle_turn_sums(cfg.k, cfg.n);
      switch (kind) {
        case TurnKind::Min: return sums->min_sums[s - 1];
        case TurnKind::Max: return sums->max_sums[s - 1];
        case TurnKind::Osc: return sums->osc_sums[s - 1];
      }
      throw std::invalid_argument("unknown turn kind");
    };
  } else {
    throw std::invalid_argument("unknown method '" + cfg.method +
                                "' (expected closed, series or oracle)");
  }

  std::vector<ReportRow> rows;
  for (int s = s_from; s <= s_to; ++s) {
    for (const TurnKind kind : kinds) {
      const Int value = method_value(kind, s);
      if (cfg.method != "closed") {
        const Int reference = closed_value(kind, s);
        if (value != reference)
          throw method_mismatch_error(
              std::string(kind_name(kind)) + " k=" + std::to_string(cfg.k) + " N=" +
              std::to_string(cfg.n) + " s=" + std::to_string(s) + ": method " + cfg.method +
              " gives " + value.str() + ", closed form gives " + reference.str());
      }
      rows.push_back(make_row(cfg.k, cfg.n, s, kind, value, count));
    }
  }
  return rows;
}

void write_rows(const TurnsConfig& cfg, const std::vector<kdyck::ReportRow>& rows) {
  if (cfg.format != "csv" && cfg.format != "json")
    throw std::invalid_argument("unknown format '" + cfg.format + "' (expected csv or json)");
  with_output(cfg.out, [&](std::ostream& os) {
    if (cfg.format == "csv")
      kdyck::write_csv(os, rows);
    else
      kdyck::write_json(os, rows);
  });
}

int cmd_count(int k, int n) {
  std::cout << kdyck::fuss_catalan(k, n).str() << "\n";
  return exit_ok;
}

int cmd_turns(const TurnsConfig& cfg) {
  write_rows(cfg, compute_turns(cfg));
  return exit_ok;
}

int cmd_paths(int k, int n, const std::string& out_path) {
  kdyck::validate_path_class(k, n);
  kdyck::require_within_bound(k, n, oracle_bound_from_env());
  with_output(out_path, [&](std::ostream& os) {
    kdyck::enumerate_paths(k, n,
                           [&](const kdyck::DyckPath& p) { os << p.to_string() << "\n"; });
  });
  return exit_ok;
}

int cmd_verify(kdyck::VerifyOptions options) {
  options.oracle_bound = oracle_bound_from_env();
  const std::vector<kdyck::CheckResult> results = kdyck::run_verify(options);
  std::size_t passed = 0;
  for (const kdyck::CheckResult& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    if (r.passed) ++passed;
  }
  std::cout << passed << "/" << results.size() << " checks passed\n";
  return passed == results.size() ? exit_ok : exit_verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact turn statistics of k-Dyck paths"};
  app.require_subcommand(1);

  int count_k = 1;
  int count_n = 0;
  CLI::App* count_cmd = app.add_subcommand("count", "number of k-Dyck paths with N up-steps");
  count_cmd->add_option("--k", count_k, "up-step rise k")->required();
  count_cmd->add_option("--n", count_n, "number of up-steps N")->required();

  TurnsConfig turns;
  CLI::App* turns_cmd =
      app.add_subcommand("turns", "cumulative and average s-th turn levels");
  turns_cmd->add_option("--k", turns.k, "up-step rise k")->required();
  turns_cmd->add_option("--n", turns.n, "number of up-steps N")->required();
  CLI::Option* s_opt = turns_cmd->add_option("--s", turns.s, "turn index s (default: all)")
                           ->check(CLI::PositiveNumber);
  turns_cmd->add_option("--s-from", turns.s_from, "first turn index")
      ->check(CLI::PositiveNumber)
      ->excludes(s_opt);
  turns_cmd->add_option("--s-to", turns.s_to, "last turn index")
      ->check(CLI::PositiveNumber)
      ->excludes(s_opt);
  turns_cmd->add_option("--kind", turns.kind, "statistic: min, max, osc or all")
      ->capture_default_str();
  turns_cmd
      ->add_option("--method", turns.method,
                   "computation route: closed, series or oracle (non-closed routes are "
                   "cross-checked against the closed form)")
      ->capture_default_str();
  turns_cmd->add_option("--format", turns.format, "output format: csv or json")
      ->capture_default_str();
  turns_cmd->add_option("--out", turns.out, "write to this file instead of stdout");

  int paths_k = 1;
  int paths_n = 0;
  std::string paths_out;
  CLI::App* paths_cmd =
      app.add_subcommand("paths", "list all k-Dyck paths with N up-steps (debug aid)");
  paths_cmd->add_option("--k", paths_k, "up-step rise k")->required();
  paths_cmd->add_option("--n", paths_n, "number of up-steps N")->required();
  paths_cmd->add_option("--out", paths_out, "write to this file instead of stdout");

  kdyck::VerifyOptions verify_options;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "cross-verify the three computation routes");
  verify_cmd->add_option("--k-max", verify_options.k_max, "verify k = 1..k_max");
  verify_cmd->add_option("--n-max", verify_options.n_max, "sweep N = 0..n_max");
  verify_cmd->add_option("--z-order", verify_options.z_order, "series truncation order in z");
  verify_cmd->add_option("--w-order", verify_options.w_order, "series truncation order in w");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*count_cmd) return cmd_count(count_k, count_n);
    if (*turns_cmd) return cmd_turns(turns);
    if (*paths_cmd) return cmd_paths(paths_k, paths_n, paths_out);
    if (*verify_cmd) return cmd_verify(verify_options);
  } catch (const kdyck::resource_bound_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_resource_bound;
  } catch (const method_mismatch_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_method_mismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_verify_failed;
  }
  return exit_usage;
}
