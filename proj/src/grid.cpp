#include "kgyukawa/grid.hpp"

#include <algorithm>
#include <cmath>

#include "kgyukawa/errors.hpp"

namespace kgy {

void RadialGrid::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
    throw InvalidArgument("radial grid requires 0 < r_min < r_max");
  }
  if (points < 100) throw InvalidArgument("radial grid requires at least 100 points");
}

RadialGrid RadialGrid::refined() const { return {r_min, r_max, 2 * points - 1}; }

QuadratureGrid QuadratureGrid::uniform(const RadialGrid& grid) {
  grid.validate();
  QuadratureGrid q;
  const double h = grid.spacing();
  q.r.resize(grid.points);
  q.weights.assign(grid.points, h);
  for (int i = 0; i < grid.points; ++i) q.r[i] = grid.at(i);
  q.r.back() = grid.r_max;
  q.weights.front() *= 0.5;
  q.weights.back() *= 0.5;
  return q;
}

QuadratureGrid QuadratureGrid::log_linear(double r_min, double r_max, int points, double b) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
    throw InvalidArgument("log-linear grid requires 0 < r_min < r_max");
  }
  if (points < 2) throw InvalidArgument("log-linear grid requires at least 2 points");
  if (!(b > 0.0)) throw InvalidArgument("log-linear grid requires b > 0");

  const auto u_of = [b](double r) { return r + b * std::log(r); };
  const double u0 = u_of(r_min);
  const double du = (u_of(r_max) - u0) / (points - 1);

  QuadratureGrid q;
  q.r.resize(points);
  q.weights.resize(points);
  double r = r_min;
  for (int i = 0; i < points; ++i) {
    const double u = u0 + i * du;
    // Newton on r + b ln r = u; monotone and convex in ln r, so iterate in ln r.
    double x = std::log(r);
    for (int it = 0; it < 100; ++it) {
      const double ex = std::exp(x);
      const double step = (ex + b * x - u) / (ex + b);
      x -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    r = std::exp(x);
    q.r[i] = r;
    q.weights[i] = du * r / (r + b);
  }
  q.r.front() = r_min;
  q.r.back() = r_max;
  q.weights.front() = 0.5 * du * r_min / (r_min + b);
  q.weights.back() = 0.5 * du * r_max / (r_max + b);
  return q;
}

QuadratureGrid QuadratureGrid::log_linear(double r_min, double r_max, int points) {
  if (!(r_min > 0.0) || !(r_max > r_min)) {
    throw InvalidArgument("log-linear grid requires 0 < r_min < r_max");
  }
  const double b = r_max / (3.0 * std::log(r_max / r_min));
  return log_linear(r_min, r_max, points, b);
}

double QuadratureGrid::integrate(const std::vector<double>& values) const {
  if (values.size() != r.size()) throw InvalidArgument("sample count does not match grid");
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += weights[i] * values[i];
  return sum;
}

}  // namespace kgy
