#include "sedlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace sedlab {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval eval_gk15(const std::function<double(double)>& f, double a,
                   double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kKronrodW[7] * fc;
  double resg = kGaussW[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kNodes[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kKronrodW[j] * (f1 + f2);
    if (j % 2 == 1) resg += kGaussW[j / 2] * (f1 + f2);
  }
  return {a, b, resk * h, std::abs(resk - resg) * h};
}

}  // namespace

double gauss_kronrod_15(const std::function<double(double)>& f, double a,
                        double b) {
  return eval_gk15(f, a, b).value;
}

QuadratureResult integrate_segments(const std::function<double(double)>& f,
                                    std::span<const double> points,
                                    const QuadratureSpec& spec) {
  if (points.size() < 2) {
    throw std::invalid_argument("integrate_segments: need >= 2 points");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i] > points[i - 1])) {
      throw std::invalid_argument(
          "integrate_segments: points must be strictly increasing");
    }
  }

  std::priority_queue<Interval> heap;
  QuadratureResult res;
  double total = 0.0, err = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Interval iv = eval_gk15(f, points[i - 1], points[i]);
    total += iv.value;
    err += iv.error;
    res.evaluations += 15;
    heap.push(iv);
  }

  std::size_t n_intervals = points.size() - 1;
  while (true) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (err <= tol) {
      res.converged = true;
      break;
    }
    if (n_intervals >= spec.max_intervals) break;
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {  // interval at double resolution
      res.converged = err <= std::max(spec.abs_tol,
                                      2.0 * spec.rel_tol * std::abs(total));
      break;
    }
    Interval left = eval_gk15(f, worst.a, mid);
    Interval right = eval_gk15(f, mid, worst.b);
    res.evaluations += 30;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++n_intervals;
  }

  res.value = total;
  res.error_estimate = err;
  return res;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec) {
  const double pts[2] = {a, b};
  return integrate_segments(f, pts, spec);
}

}  // namespace sedlab
