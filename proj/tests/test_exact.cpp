#include <cmath>
#include <numbers>

#include "doctest.h"
#include "logcap/errors.hpp"
#include "logcap/exact.hpp"
#include "logcap/random_sets.hpp"
#include "logcap/theta.hpp"
#include "oracles.hpp"

using namespace logcap;
using doctest::Approx;

namespace {

IntervalUnion two(double a, double b) { return IntervalUnion::from_pairs({{-1.0, a}, {b, 1.0}}); }

IntervalUnion from_case(const oracle::PreimageCase& c) { return IntervalUnion::from_pairs(c.components); }

}  // namespace

TEST_CASE("symmetric two-interval closed form") {
  for (double g : {0.1, 0.2, 0.5, 0.8, 0.95}) {
    const double want = 0.5 * std::sqrt(1 - g * g);
    CAPTURE(g);
    CHECK(akhiezer_capacity(-g, g).value == Approx(want).epsilon(1e-15));
    CHECK(widom_capacity(two(-g, g)).value == Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("Akhiezer formula against an independent theta evaluation") {
  for (auto [a, b] : {std::pair{-0.3, 0.5}, std::pair{-0.9, -0.7}, std::pair{0.2, 0.9}}) {
    const EllipticParams ep = akhiezer_params(a, b);
    const double t = double(oracle::theta4(0, ep.q) * oracle::theta3(0, ep.q) /
                            (oracle::theta4(ep.omega, ep.q) * oracle::theta3(ep.omega, ep.q)));
    CHECK(akhiezer_capacity(a, b).value == Approx(0.5 * t * t).epsilon(1e-14));
    CHECK(ep.k * ep.k + ep.k_prime * ep.k_prime == Approx(1.0).epsilon(1e-15));
  }
  CHECK(akhiezer_capacity(-0.3, 0.5).value == Approx(0.457718411572720236).epsilon(1e-15));
  CHECK_THROWS_AS(akhiezer_capacity(0.5, 0.3), DomainError);
  CHECK_THROWS_AS(akhiezer_capacity(-1.0, 0.3), DomainError);
}

TEST_CASE("only one convention reproduces the Widom values") {
  const AkhiezerConvention others[] = {{true, false}, {false, true}, {false, false}};
  for (auto [a, b] : {std::pair{-0.3, 0.5}, std::pair{-0.6, 0.1}, std::pair{0.1, 0.4}}) {
    const double wd = widom_capacity(two(a, b)).value;
    CHECK(akhiezer_capacity(a, b).value == Approx(wd).epsilon(1e-13));
    for (const auto& c : others) CHECK(std::abs(akhiezer_capacity(a, b, c).value - wd) > 1e-4);
  }
}

TEST_CASE("Widom polynomial data") {
  const auto e = IntervalUnion::from_pairs({{-1.0, -0.6}, {-0.1, 0.2}, {0.5, 1.0}});
  const WidomModel m = widom_polynomial(e);
  REQUIRE(m.coeffs().size() == 2);
  CHECK(m.coeffs()[0] == Approx(-0.126879296517486830).epsilon(1e-13));
  CHECK(m.coeffs()[1] == Approx(0.00887868300925932297).epsilon(1e-12));
  CHECK(m.max_gap_residual() < 1e-12);
  CHECK(m.q().size() == 7);
  CHECK(widom_capacity(e).value == Approx(0.474151423084075756).epsilon(1e-14));

  const auto single = widom_polynomial(IntervalUnion::from_pairs({{0.0, 3.0}}));
  CHECK(single.coeffs().empty());
  CHECK(single.p() == Polynomial{1.0});

  const auto m2 = widom_polynomial(two(-0.3, 0.5));
  CHECK(m2.coeffs()[0] == Approx(-0.109450616355916262).epsilon(1e-14));

  const auto e4 = IntervalUnion::from_pairs({{-1.0, -0.7}, {-0.4, 0.1}, {0.3, 0.5}, {0.7, 1.0}});
  CHECK(widom_capacity(e4).value == Approx(0.484715236435066566).epsilon(1e-14));
}

TEST_CASE("polynomial preimages") {
  const oracle::PreimageCase cases[] = {
      oracle::square_preimage(0.25L, 4.0L),
      oracle::square_preimage(0.01L, 0.5L),
      oracle::cubic_preimage(-1.0L, 1.0L),
      oracle::cubic_preimage(-1.5L, 0.5L),
      oracle::cubic_preimage(-1.9L, 1.2L),
      oracle::quartic_preimage(-3.5L, -0.5L),
      oracle::quartic_preimage(-3.9L, -1.0L),
  };
  for (const auto& c : cases) {
    const IntervalUnion e = from_case(c);
    CAPTURE(e.size());
    CHECK(widom_capacity(e).value == Approx(c.capacity).epsilon(1e-13));
    CHECK(capacity(e).value == Approx(c.capacity).epsilon(1e-13));
  }
}

TEST_CASE("single intervals") {
  SetSampler rng(3);
  for (int i = 0; i < 10; ++i) {
    const double a = rng.uniform(-10, 10);
    const double b = a + rng.uniform(0.001, 20);
    const auto e = IntervalUnion::from_pairs({{a, b}});
    CHECK(capacity(e).value == (b - a) / 4);
    CHECK(capacity(e).method == Method::closed_form);
    CHECK(widom_capacity(e, true).value == Approx((b - a) / 4).epsilon(1e-14));
    const auto m = widom_polynomial(e);
    CHECK(robin_constant(m).value == Approx(-std::log((b - a) / 4)).epsilon(1e-14));
  }
}

TEST_CASE("scaling, translation and reflection") {
  SetSampler rng(11);
  for (int i = 0; i < 12; ++i) {
    const IntervalUnion e = rng.unit_set(2 + i % 4);
    const double c = capacity(e).value;
    const double s = rng.uniform(0.2, 3.0);
    const double shift = rng.uniform(-5, 5);
    CHECK(capacity(e.affine(s, shift)).value == Approx(s * c).epsilon(1e-13));
    CHECK(capacity(e.affine(-1.0, 0.0)).value == Approx(c).epsilon(1e-13));
  }
}

TEST_CASE("capacity grows with the set") {
  // Shrinking the gap of [-1, a] U [b, 1] from either side increases capacity.
  double prev = 0.0;
  for (double b : {0.9, 0.7, 0.5, 0.3, 0.1}) {
    const double c = capacity(two(-0.2, b)).value;
    CHECK(c > prev);
    prev = c;
  }
  CHECK(prev < 0.5);
  const auto e = IntervalUnion::from_pairs({{-1.0, -0.6}, {-0.1, 0.2}, {0.5, 1.0}});
  const auto bigger = IntervalUnion::from_pairs({{-1.0, -0.6}, {-0.2, 0.2}, {0.5, 1.0}});
  CHECK(capacity(bigger).value > capacity(e).value);
}

TEST_CASE("moving a gap of fixed width: maximum at the symmetric position") {
  const double w = 0.4;
  auto cap_at = [w](double a) { return capacity(two(a, a + w)).value; };
  const double mid = cap_at(-w / 2);
  for (double d : {0.01, 0.1, 0.3}) {
    CHECK(cap_at(-w / 2 + d) < mid);
    CHECK(cap_at(-w / 2 - d) < mid);
    CHECK(cap_at(-w / 2 + d) == Approx(cap_at(-w / 2 - d)).epsilon(1e-13));
  }
}

TEST_CASE("Green function") {
  const auto e = IntervalUnion::from_pairs({{-1.0, -0.6}, {-0.1, 0.2}, {0.5, 1.0}});
  const WidomModel base = widom_polynomial(e);
  const WidomModel m = base.with_robin(robin_constant(base).value, 0.0);
  for (double x : e.endpoints()) CHECK(std::abs(green_value(m, x)) < 1e-12);
  CHECK_THROWS_AS(green_value(m, 0.0), DomainError);
  // Positive off the set, growing like log|x| + R.
  CHECK(green_value(m, 0.35) > 0.0);
  CHECK(green_value(m, -0.3) > 0.0);
  // g(x) - log|x| - R = O(1/x).
  for (double big : {1e4, 1e6}) {
    CHECK(std::abs(green_value(m, big) - std::log(big) - *m.robin()) < 10 / big);
    CHECK(std::abs(green_value(m, -big) - std::log(big) - *m.robin()) < 10 / big);
  }
  // Continuity across the integration split at distance 2.
  CHECK(green_value(m, 3.0 - 1e-9) == Approx(green_value(m, 3.0 + 1e-9)).epsilon(1e-8));
  // Single interval: g(x) = acosh(x) on [-1, 1].
  const auto unit = widom_polynomial(IntervalUnion::from_pairs({{-1.0, 1.0}}));
  CHECK(green_value(unit, 1.5) == Approx(std::acosh(1.5)).epsilon(1e-13));
  CHECK(green_value(unit, -4.0) == Approx(std::acosh(4.0)).epsilon(1e-13));
}

TEST_CASE("capacity dispatch") {
  CHECK(capacity(two(-0.3, 0.5)).method == Method::akhiezer);
  CHECK(capacity(IntervalUnion::from_pairs({{-1.0, -0.6}, {-0.1, 0.2}, {0.5, 1.0}})).method == Method::widom);
  CHECK(capacity(two(-0.3, 0.5), MethodChoice::widom).method == Method::widom);
  // The theta route normalizes any two-interval set.
  const auto e = IntervalUnion::from_pairs({{2.0, 3.0}, {4.0, 7.0}});
  CHECK(capacity(e, MethodChoice::akhiezer).value == Approx(capacity(e, MethodChoice::widom).value).epsilon(1e-13));
  CHECK_THROWS_AS(capacity(IntervalUnion::from_pairs({{-1.0, -0.6}, {-0.1, 0.2}, {0.5, 1.0}}), MethodChoice::akhiezer),
                  DomainError);
  CHECK(to_string(Method::widom) == "widom");
}

TEST_CASE("near-degenerate gaps are flagged but computed") {
  const auto r = capacity(two(0.1, 0.1 + 1e-7));
  CHECK(r.near_degenerate);
  CHECK(r.value < 0.5);
  CHECK(capacity(two(0.1, 0.1 + 1e-9)).value <= 0.5);
  CHECK(r.value > capacity(two(0.1, 0.2)).value);
  CHECK_FALSE(capacity(two(0.1, 0.2)).near_degenerate);
}
