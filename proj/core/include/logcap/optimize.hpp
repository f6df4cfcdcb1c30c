#pragma once

#include <functional>
#include <span>
#include <vector>

namespace logcap {

/// Box coordinate for the grid search: the open interval (lo, hi).
struct OpenRange {
  double lo;
  double hi;
};

struct GridSearchOptions {
  int candidates = 33;        // interior points per coordinate and sweep
  int refinement_rounds = 3;  // each shrinks the step by `refinement`
  double refinement = 10.0;
  int max_sweeps = 50;        // coordinate sweeps per round
};

struct GridSearchResult {
  double value;
  std::vector<double> argmax;
  int evaluations;
};

/// Deterministic maximization over a product of open intervals: start at
/// the midpoint, sweep each coordinate over `candidates` equispaced interior
/// points until a sweep changes nothing, then refine the step around the
/// incumbent. Ties go to the lowest-index candidate.
GridSearchResult grid_maximize(const std::function<double(std::span<const double>)>& objective,
                               std::span<const OpenRange> box, const GridSearchOptions& opts = {});

}  // namespace logcap
