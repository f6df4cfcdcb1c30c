#include "logcap/verify.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>

#include "logcap/bounds.hpp"
#include "logcap/errors.hpp"
#include "logcap/exact.hpp"
#include "logcap/random_sets.hpp"

namespace logcap {
namespace {

constexpr double kCrossTol = 1e-8;
constexpr double kSandwichSlack = 1e-9;
constexpr double kEqualityTol = 1e-8;
constexpr double kDominanceSlack = 1e-10;

std::string sci(double v) {
  std::array<char, 32> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 3);
  return std::string(buf.data(), r.ptr);
}

// Records one check: `excess` > 0 means the check failed by that much.
void record(SuiteResult& s, double excess) {
  ++s.total;
  if (excess <= 0.0 && std::isfinite(excess)) {
    ++s.passed;
  } else {
    s.max_violation = std::max(s.max_violation, std::isfinite(excess) ? excess : 1.0);
  }
}

// Runs one check; a thrown error counts as a failed check.
template <class Check>
void guarded(SuiteResult& s, Check&& check) {
  double excess = 0.0;
  try {
    excess = check();
  } catch (const std::exception&) {
    excess = std::numeric_limits<double>::infinity();
  }
  record(s, excess);
}

SuiteResult cross_method_suite(SetSampler& rng, int count) {
  SuiteResult s{"cross_method"};
  for (int i = 0; i < count; ++i) {
    const auto [a, b] = rng.two_interval();
    guarded(s, [a, b] {
      const double ak = akhiezer_capacity(a, b).value;
      const double wd = widom_capacity(IntervalUnion::from_pairs({{-1.0, a}, {b, 1.0}})).value;
      return std::abs(ak - wd) - kCrossTol;
    });
  }
  return s;
}

SuiteResult sandwich_suite(SetSampler& rng, int count) {
  SuiteResult s{"sandwich"};
  for (int i = 0; i < count; ++i) {
    const IntervalUnion e = rng.unit_set(rng.integer(2, 4));
    guarded(s, [&e] {
      const double exact = capacity(e).value;
      double worst = -1.0;
      for (const auto& r : all_bounds(e)) {
        const double excess = r.kind == BoundKind::lower ? r.value - exact : exact - r.value;
        worst = std::max(worst, excess - kSandwichSlack);
      }
      return worst;
    });
  }
  return s;
}

SuiteResult equality_suite(SetSampler& rng, int count) {
  SuiteResult s{"equality"};
  constexpr double pi = std::numbers::pi;
  for (int i = 0; i < count; ++i) {
    const double l = rng.uniform(0.2, 2.0 * pi - 0.2);
    const int kind = i % 3;
    const int param = kind == 0 ? rng.integer(1, 6) : rng.integer(2, 4);
    guarded(s, [l, kind, param] {
      if (kind == 0) {
        const IntervalUnion e = canonical_set_E(l, param);
        return std::abs(partition_lower(e, Partition::uniform_mu(param)) - widom_capacity(e).value) -
               kEqualityTol;
      }
      const IntervalUnion e = canonical_set_E(l, 2 * (param - 1));
      const double bound =
          kind == 1 ? theorem2_lower(e, theorem2_equality_deltas(param)) : theorem3_upper(e);
      return std::abs(bound - widom_capacity(e).value) - kEqualityTol;
    });
  }
  return s;
}

SuiteResult dominance_suite(SetSampler& rng, int count) {
  SuiteResult s{"dominance"};
  for (int i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      const IntervalUnion e = rng.unit_set(3);
      DeltaVector d;
      for (std::size_t k = 0; k < 2; ++k) d.deltas.push_back(rng.uniform(e.gap(k).lo, e.gap(k).hi));
      std::vector<double> g{rng.uniform(e[1].lo, e[1].hi)};
      if (!(g[0] > e[1].lo)) g[0] = 0.5 * (e[1].lo + e[1].hi);
      if (!(d.deltas[0] > e.gap(0).lo)) d.deltas[0] = 0.5 * (e.gap(0).lo + e.gap(0).hi);
      if (!(d.deltas[1] > e.gap(1).lo)) d.deltas[1] = 0.5 * (e.gap(1).lo + e.gap(1).hi);
      guarded(s, [&] { return solynin_lower(e, d, g) - theorem2_lower(e, d) - kDominanceSlack; });
    } else {
      const auto [a, b] = rng.two_interval();
      guarded(s, [a, b] {
        const IntervalUnion e = IntervalUnion::from_pairs({{-1.0, a}, {b, 1.0}});
        return schiefermayr_lower(a, b) - theorem2_optimize(e).value - kDominanceSlack;
      });
    }
  }
  return s;
}

}  // namespace

bool VerifyReport::ok() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << "logcap verify seed=" << seed << " count=" << count << '\n';
  for (const auto& s : suites) {
    os << (s.ok() ? "PASS " : "FAIL ") << s.name << " passed=" << s.passed << '/' << s.total
       << " max_violation=" << sci(s.max_violation) << '\n';
  }
  os << "result: " << (ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

VerifyReport run_verify(std::uint64_t seed, int count) {
  if (count < 0) throw DomainError("verify: count must be non-negative");
  VerifyReport rep;
  rep.seed = seed;
  rep.count = count;
  // One stream per suite so suites do not perturb each other.
  SetSampler cross(seed);
  SetSampler sandwich(seed + 1);
  SetSampler equality(seed + 2);
  SetSampler dominance(seed + 3);
  rep.suites.push_back(cross_method_suite(cross, count));
  rep.suites.push_back(sandwich_suite(sandwich, count));
  rep.suites.push_back(equality_suite(equality, count));
  rep.suites.push_back(dominance_suite(dominance, count));
  return rep;
}

}  // namespace logcap
