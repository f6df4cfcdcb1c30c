#include "logcap/sweep.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include "logcap/bounds.hpp"
#include "logcap/errors.hpp"
#include "logcap/exact.hpp"
#include "logcap/io.hpp"

namespace logcap {

std::string_view to_string(SweepFamily f) {
  switch (f) {
    case SweepFamily::moving_gap:
      return "moving_gap";
    case SweepFamily::spreading_gap:
      return "spreading_gap";
    case SweepFamily::moving_two_gaps:
      return "moving_two_gaps";
  }
  return "unknown";
}

SweepFamily parse_sweep_family(std::string_view name) {
  if (name == "moving_gap") return SweepFamily::moving_gap;
  if (name == "spreading_gap") return SweepFamily::spreading_gap;
  if (name == "moving_two_gaps") return SweepFamily::moving_two_gaps;
  throw ParseError("unknown sweep family '" + std::string(name) + "'");
}

double Grid::at(int i) const {
  if (i == count - 1) return stop;
  return start + (stop - start) * i / (count - 1);
}

Grid parse_grid(std::string_view text) {
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ParseError("grid must be start:stop:count");
  auto num = [](std::string_view s) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
      throw ParseError("bad grid number '" + std::string(s) + "'");
    return v;
  };
  const std::string_view cnt = text.substr(c2 + 1);
  int count = 0;
  const auto [p, ec] = std::from_chars(cnt.data(), cnt.data() + cnt.size(), count);
  if (cnt.empty() || ec != std::errc() || p != cnt.data() + cnt.size())
    throw ParseError("bad grid count '" + std::string(cnt) + "'");
  return {num(text.substr(0, c1)), num(text.substr(c1 + 1, c2 - c1 - 1)), count};
}

IntervalUnion SweepSpec::set_at(double x) const {
  switch (family) {
    case SweepFamily::moving_gap:
      return IntervalUnion::from_pairs({{-1.0, x}, {x + fixed, 1.0}});
    case SweepFamily::spreading_gap:
      return IntervalUnion::from_pairs({{-1.0, fixed - 0.5 * x}, {fixed + 0.5 * x, 1.0}});
    case SweepFamily::moving_two_gaps:
      return IntervalUnion::from_pairs({{-1.0, -x - 0.5 * fixed}, {-x + 0.5 * fixed, x - 0.5 * fixed}, {x + 0.5 * fixed, 1.0}});
  }
  throw DomainError("unknown sweep family");
}

void SweepSpec::validate() const {
  if (grid.count < 2) throw DomainError("sweep grid needs at least two points");
  for (int i = 0; i < grid.count; ++i) {
    const double x = grid.at(i);
    bool ok = false;
    switch (family) {
      case SweepFamily::moving_gap:
        ok = fixed > 0.0 && x > -1.0 && x + fixed < 1.0;
        break;
      case SweepFamily::spreading_gap:
        ok = x > 0.0 && fixed - 0.5 * x > -1.0 && fixed + 0.5 * x < 1.0;
        break;
      case SweepFamily::moving_two_gaps:
        ok = fixed > 0.0 && x - 0.5 * fixed > -x + 0.5 * fixed && x + 0.5 * fixed < 1.0;
        break;
    }
    if (!ok) {
      std::ostringstream os;
      os << to_string(family) << ": grid point " << x << " gives an inadmissible set";
      throw DomainError(os.str());
    }
  }
}

std::size_t SweepTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw DomainError("no column named '" + std::string(name) + "'");
}

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepTable table;
  table.columns = {"parameter", "exact"};
  table.kinds = {"", ""};
  // Rows are computed in grid order; every row is independent.
  for (int i = 0; i < spec.grid.count; ++i) {
    const double x = spec.grid.at(i);
    const IntervalUnion e = spec.set_at(x);
    const std::vector<BoundReport> reports = all_bounds(e);
    if (i == 0) {
      for (const auto& r : reports) {
        table.columns.push_back(r.name);
        table.kinds.emplace_back(to_string(r.kind));
      }
    }
    std::vector<double> row{x, capacity(e).value};
    for (const auto& r : reports) row.push_back(r.value);
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_csv(std::ostream& os, const SweepTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) os << ',';
    os << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << format_17g(row[i]);
    }
    os << '\n';
  }
}

}  // namespace logcap
