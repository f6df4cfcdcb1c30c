#include "logcap/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

#include "logcap/errors.hpp"

namespace logcap {

double gauss_chebyshev_gap(const RealFunction& g, double a, double b, int m) {
  if (m < 1) throw std::invalid_argument("gauss_chebyshev_gap: node count must be >= 1");
  if (!(a < b)) throw DomainError("gauss_chebyshev_gap: need a < b");
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int j = 1; j <= m; ++j) {
    const double x = std::cos((2.0 * j - 1.0) * std::numbers::pi / (2.0 * m));
    sum += g(mid + half * x);
  }
  return std::numbers::pi / m * sum;
}

QuadratureResult gauss_chebyshev_gap_adaptive(const RealFunction& g, double a, double b, int m0,
                                              double tol, int m_max) {
  int m = m0;
  double prev = gauss_chebyshev_gap(g, a, b, m);
  double diff = std::numeric_limits<double>::infinity();
  int used = m;
  while (2 * m <= m_max) {
    m *= 2;
    const double cur = gauss_chebyshev_gap(g, a, b, m);
    used += m;
    diff = std::abs(cur - prev);
    prev = cur;
    if (diff < tol) break;
  }
  // At the cap the last difference is returned as the error estimate;
  // callers that certify residuals see it there.
  return {prev, diff, used};
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

// One 15-point Kronrod panel with the QUADPACK error heuristic.
Segment kronrod15(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const double fa = f(center - dx);
    const double fb = f(center + dx);
    f1[static_cast<std::size_t>(j)] = fa;
    f2[static_cast<std::size_t>(j)] = fb;
    const double w = kWgk[static_cast<std::size_t>(j)];
    resk += w * (fa + fb);
    resabs += w * (std::abs(fa) + std::abs(fb));
    if (j % 2 == 1) resg += kWg[static_cast<std::size_t>(j / 2)] * (fa + fb);
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * resabs, err);
  if (!std::isfinite(value)) throw DomainError("integrate_adaptive: integrand is not finite");
  return {a, b, value, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b,
                                    const AdaptiveOptions& opts) {
  if (a == b) return {0.0, 0.0, 0};
  std::priority_queue<Segment> heap;
  Segment first = kronrod15(f, a, b);
  int evals = 15;
  double total = first.value;
  double err = first.error;
  heap.push(first);
  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
  while (err > target()) {
    if (evals + 30 > opts.max_evaluations)
      throw ConvergenceError("integrate_adaptive: evaluation budget exhausted", total, err);
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Segment below floating resolution; accept what we have.
      heap.push(worst);
      break;
    }
    Segment left = kronrod15(f, worst.a, mid);
    Segment right = kronrod15(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed accumulated update drift.
  double value = 0.0;
  double error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {value, error, evals};
}

QuadratureResult tail_integral(const OffsetFunction& h, double b, double tol, const TailOptions& opts) {
  if (!(tol > 0.0)) throw std::invalid_argument("tail_integral: tol must be positive");
  const double w = opts.split_width;
  if (!(w > 0.0)) throw std::invalid_argument("tail_integral: split width must be positive");

  auto near = [&](double u) {
    const double off = w * u * u;
    return h(b + off, off) * 2.0 * w * u;
  };
  auto far = [&](double s) {
    const double off = w - 1.0 + 1.0 / s;
    return h(b + off, off) / (s * s);
  };

  AdaptiveOptions ao;
  ao.abs_tol = 0.5 * tol;
  ao.max_evaluations = opts.max_evaluations / 2;
  QuadratureResult near_part;
  QuadratureResult far_part;
  try {
    near_part = integrate_adaptive(near, 0.0, 1.0, ao);
    far_part = integrate_adaptive(far, 0.0, 1.0, ao);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(std::string("tail_integral: ") + e.what(),
                           near_part.value + far_part.value + e.partial_value(), e.partial_error());
  }
  return {near_part.value + far_part.value, near_part.est_error + far_part.est_error,
          near_part.nodes_used + far_part.nodes_used};
}

QuadratureResult tail_integral(const RealFunction& h, double b, double tol, const TailOptions& opts) {
  return tail_integral(OffsetFunction([&](double t, double) { return h(t); }), b, tol, opts);
}

}  // namespace logcap
