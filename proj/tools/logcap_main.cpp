// logcap: logarithmic capacity of finite unions of real intervals.
//
//   logcap cap    -e "-1:-0.5,0.5:1" [--method auto|akhiezer|widom]
//   logcap bounds -e "-1:-0.6,-0.1:0.2,0.5:1" [--out table.csv]
//   logcap sweep  --family moving_gap --fixed 0.4 --grid -0.95:0.55:101 --out sweep.csv
//   logcap verify [--seed N] [--count N]
//
// Exit codes: 0 success, 1 domain error, 2 parse error, 3 I/O error.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "logcap/bounds.hpp"
#include "logcap/errors.hpp"
#include "logcap/exact.hpp"
#include "logcap/io.hpp"
#include "logcap/sweep.hpp"
#include "logcap/verify.hpp"

namespace {

enum ExitCode : int { kOk = 0, kDomain = 1, kParse = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SetOptions {
  std::string inline_set;
  std::string json_path;
};

void add_set_options(CLI::App* cmd, SetOptions& opts) {
  cmd->add_option("-e,--set", opts.inline_set, "Inline set a1:b1,a2:b2,...");
  cmd->add_option("--json", opts.json_path, "JSON file {\"intervals\": [[a,b],...]}");
}

logcap::IntervalUnion load_set(const SetOptions& opts) {
  if (opts.inline_set.empty() == opts.json_path.empty())
    throw logcap::ParseError("give exactly one of -e/--set or --json");
  if (!opts.inline_set.empty()) return logcap::parse_inline_set(opts.inline_set);
  std::ifstream in(opts.json_path);
  if (!in) throw IoError("cannot read " + opts.json_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return logcap::parse_json_set(buf.str());
}

logcap::MethodChoice parse_method(const std::string& m) {
  if (m == "auto") return logcap::MethodChoice::automatic;
  if (m == "akhiezer") return logcap::MethodChoice::akhiezer;
  if (m == "widom") return logcap::MethodChoice::widom;
  throw logcap::ParseError("unknown method '" + m + "'");
}

int cmd_cap(const SetOptions& set_opts, const std::string& method) {
  const logcap::IntervalUnion e = load_set(set_opts);
  const logcap::CapacityResult r = logcap::capacity(e, parse_method(method));
  std::cout << logcap::format_roundtrip(r.value) << ' ' << logcap::to_string(r.method)
            << ' ' << logcap::format_roundtrip(r.est_error) << '\n';
  if (r.near_degenerate) std::cerr << "warning: a gap is narrower than 1e-6; accuracy may degrade\n";
  return kOk;
}

int cmd_bounds(const SetOptions& set_opts, const std::string& out_path) {
  const logcap::IntervalUnion e = load_set(set_opts);
  // Bounds are stated on subsets of [-1, 1]; other sets are normalized and
  // the results scaled back, since capacity is homogeneous of degree one.
  const logcap::Normalized norm = logcap::normalize_to_unit(e);
  const double exact = logcap::capacity(e).value;
  const auto reports = logcap::all_bounds(norm.set);

  std::ostringstream table;
  table << "set " << logcap::to_inline(e) << '\n';
  table << "exact " << logcap::format_17g(exact) << '\n';
  table << std::left << std::setw(20) << "name" << std::setw(7) << "kind" << std::setw(24) << "value"
        << "gap_to_exact\n";
  std::ostringstream csv;
  csv << "name,kind,value,gap_to_exact\n";
  for (const auto& r : reports) {
    const double v = r.value * norm.scale;
    const double gap = std::abs(v - exact);
    table << std::setw(20) << r.name << std::setw(7) << logcap::to_string(r.kind) << std::setw(24)
          << logcap::format_17g(v) << logcap::format_17g(gap) << '\n';
    csv << r.name << ',' << logcap::to_string(r.kind) << ',' << logcap::format_17g(v) << ','
        << logcap::format_17g(gap) << '\n';
  }
  std::cout << table.str();
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + out_path);
    out << csv.str();
    if (!out) throw IoError("write failed for " + out_path);
  }
  return kOk;
}

int cmd_sweep(const std::string& family, double fixed, const std::string& grid, const std::string& out_path) {
  logcap::SweepSpec spec;
  spec.family = logcap::parse_sweep_family(family);
  spec.fixed = fixed;
  spec.grid = logcap::parse_grid(grid);
  const logcap::SweepTable table = logcap::run_sweep(spec);
  if (out_path.empty() || out_path == "-") {
    logcap::write_csv(std::cout, table);
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + out_path);
  logcap::write_csv(out, table);
  if (!out) throw IoError("write failed for " + out_path);
  return kOk;
}

int cmd_verify(std::uint64_t seed, int count) {
  const logcap::VerifyReport rep = logcap::run_verify(seed, count);
  std::cout << rep.text();
  return rep.ok() ? kOk : kDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic capacity of finite unions of real intervals"};
  app.require_subcommand(1);

  SetOptions cap_set;
  std::string method = "auto";
  auto* cap = app.add_subcommand("cap", "Exact capacity of a set");
  add_set_options(cap, cap_set);
  cap->add_option("--method", method, "auto | akhiezer | widom");

  SetOptions bounds_set;
  std::string bounds_out;
  auto* bounds = app.add_subcommand("bounds", "All applicable lower and upper bounds");
  add_set_options(bounds, bounds_set);
  bounds->add_option("--out", bounds_out, "Also write the table as CSV");

  std::string family = "moving_gap";
  double fixed = 0.4;
  std::string grid = "-0.95:0.55:101";
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep of exact values and bounds as CSV");
  sweep->add_option("--family", family, "moving_gap | spreading_gap | moving_two_gaps");
  sweep->add_option("--fixed", fixed, "Gap width (moving families) or gap centre (spreading_gap)");
  sweep->add_option("--grid", grid, "start:stop:count");
  sweep->add_option("--out", sweep_out, "Output CSV path (default: standard output)");

  std::uint64_t seed = logcap::kDefaultVerifySeed;
  int count = 200;
  auto* verify = app.add_subcommand("verify", "Run the built-in verification suites");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--count", count, "Cases per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*cap) return cmd_cap(cap_set, method);
    if (*bounds) return cmd_bounds(bounds_set, bounds_out);
    if (*sweep) return cmd_sweep(family, fixed, grid, sweep_out);
    if (*verify) return cmd_verify(seed, count);
  } catch (const logcap::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const logcap::ValidationError& e) {
    std::cerr << "invalid set: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
