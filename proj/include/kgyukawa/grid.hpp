#pragma once

#include <vector>

namespace kgy {

/// Uniform radial grid r_i = r_min + i h, i = 0 .. points-1. Used by the
/// finite-difference eigensolver, which imposes Dirichlet conditions at both
/// ends.
struct RadialGrid {
  double r_min = 1e-4;
  double r_max = 400.0;
  int points = 16000;

  double spacing() const { return (r_max - r_min) / (points - 1); }
  double at(int i) const { return r_min + i * spacing(); }
  /// Throws InvalidArgument unless 0 < r_min < r_max and points >= 100.
  void validate() const;
  /// Same interval, spacing halved (2 points - 1 nodes).
  RadialGrid refined() const;
};

/// Sample points with trapezoid weights for integrals over [r.front(), r.back()].
struct QuadratureGrid {
  std::vector<double> r;
  std::vector<double> weights;

  std::size_t size() const { return r.size(); }

  /// Plain composite trapezoid on a uniform grid.
  static QuadratureGrid uniform(const RadialGrid& grid);

  /// Nodes equally spaced in u = r + b ln r: geometric near the origin,
  /// uniform once r >> b. Weights are the trapezoid rule in u times dr/du.
  static QuadratureGrid log_linear(double r_min, double r_max, int points, double b);

  /// log_linear with b chosen so roughly a third of the nodes fall in the
  /// geometric region.
  static QuadratureGrid log_linear(double r_min, double r_max, int points);

  /// Weighted sum of f sampled at the nodes.
  double integrate(const std::vector<double>& values) const;
};

}  // namespace kgy
