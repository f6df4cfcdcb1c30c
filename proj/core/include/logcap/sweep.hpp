#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "logcap/interval_set.hpp"

namespace logcap {

enum class SweepFamily {
  moving_gap,       // [-1, a] U [a + w, 1], parameter a, fixed width w
  spreading_gap,    // [-1, c - w/2] U [c + w/2, 1], parameter w, fixed centre c
  moving_two_gaps,  // gaps of width w centred at -x and x, parameter x
};

std::string_view to_string(SweepFamily f);
SweepFamily parse_sweep_family(std::string_view name);

struct Grid {
  double start;
  double stop;
  int count;

  double at(int i) const;
};

/// Parses "start:stop:count".
Grid parse_grid(std::string_view text);

struct SweepSpec {
  SweepFamily family = SweepFamily::moving_gap;
  double fixed = 0.4;  // width (moving_gap, moving_two_gaps) or centre (spreading_gap)
  Grid grid{-0.95, 0.55, 101};

  /// Throws DomainError when count < 2 or any grid point gives an
  /// inadmissible set.
  void validate() const;
  IntervalUnion set_at(double parameter) const;
};

struct SweepTable {
  std::vector<std::string> columns;  // "parameter", "exact", then bound names
  std::vector<std::string> kinds;    // "", "", then lower/upper per bound
  std::vector<std::vector<double>> rows;

  std::size_t column(std::string_view name) const;
};

SweepTable run_sweep(const SweepSpec& spec);

/// Header row plus one row per grid point, comma separated, LF endings,
/// 17 significant digits.
void write_csv(std::ostream& os, const SweepTable& table);

}  // namespace logcap
