#include "logcap/optimize.hpp"

#include <stdexcept>

namespace logcap {

GridSearchResult grid_maximize(const std::function<double(std::span<const double>)>& objective,
                               std::span<const OpenRange> box, const GridSearchOptions& opts) {
  if (opts.candidates < 1) throw std::invalid_argument("grid_maximize: need at least one candidate");
  const std::size_t dim = box.size();
  std::vector<double> x(dim);
  std::vector<double> step(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    if (!(box[c].lo < box[c].hi)) throw std::invalid_argument("grid_maximize: empty coordinate range");
    x[c] = 0.5 * (box[c].lo + box[c].hi);
    step[c] = (box[c].hi - box[c].lo) / (opts.candidates + 1);
  }
  int evals = 1;
  double best = objective(x);
  if (dim == 0) return {best, x, evals};

  std::vector<double> trial(x);
  for (int round = 0; round <= opts.refinement_rounds; ++round) {
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
      bool moved = false;
      for (std::size_t c = 0; c < dim; ++c) {
        trial = x;
        const double centre = x[c];
        for (int j = 0; j < opts.candidates; ++j) {
          double v;
          if (round == 0) {
            v = box[c].lo + (j + 1) * step[c];
          } else {
            v = centre + (j - 0.5 * (opts.candidates - 1)) * step[c];
          }
          if (!(v > box[c].lo && v < box[c].hi) || v == centre) continue;
          trial[c] = v;
          const double f = objective(trial);
          ++evals;
          if (f > best) {
            best = f;
            x[c] = v;
            moved = true;
          }
        }
      }
      if (!moved) break;
    }
    for (auto& s : step) s /= opts.refinement;
  }
  return {best, x, evals};
}

}  // namespace logcap
