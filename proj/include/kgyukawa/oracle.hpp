#pragma once

#include <functional>
#include <optional>

#include "kgyukawa/grid.hpp"
#include "kgyukawa/kg_yukawa.hpp"

// Grid-based reference solver for the radial equation R'' + Q(r; E) R = 0,
// independent of the NU closed form. The KG problem is quadratic in E, so the
// radial operator is diagonalized at frozen E and the outer equation
// lambda_k(E) = E^2 - M^2 is solved by bisection.

namespace kgy {

enum class PotentialMode {
  Exact,         // Yukawa couplings and 1/r^2 barrier as they stand
  Approximated,  // exponential stand-ins for 1/r and 1/r^2
};

/// Q(r; E): everything multiplying R in the radial equation, including -eps^2.
double effective_ode_coefficient(double r, double energy, const PotentialParams& pp,
                                 const ParticleParams& mp, const QuantumNumbers& qn,
                                 PotentialMode mode);

/// k-th eigenvalue of -d^2/dr^2 - (Q(r; E) + eps^2) with Dirichlet ends,
/// second-order central differences on `grid`.
double eigenvalue_k(double energy, const PotentialParams& pp, const ParticleParams& mp,
                    const QuantumNumbers& qn, const RadialGrid& grid, PotentialMode mode, int k);

/// Same, for an arbitrary potential W on a uniform grid (used for checks
/// such as the free box).
double box_eigenvalue(const RadialGrid& grid, int k, const std::function<double(double)>& potential);

struct OracleOptions {
  int scan_points = 200;
  double tolerance = 1e-13;
  /// Prefer the root nearest this energy; otherwise the lowest root.
  std::optional<double> target;
  double edge = 1e-9;
};

struct OracleResult {
  double energy = 0.0;  // coarse-grid root
  int eigen_index = 0;  // n - 1
  RadialGrid grid;
  double fine_energy = 0.0;  // on grid.refined()
  double richardson_estimate = 0.0;
  double grid_error = 0.0;  // |energy - richardson_estimate|
};

/// Default grid: r_min = 1e-4, r_max = max(400, 40/eps_estimate), 16000 points.
RadialGrid default_oracle_grid(double epsilon_estimate);

/// Root of g(E) = lambda_{n-1}(E) - (E^2 - M^2) on (-M, M), refined on the
/// half-spacing grid and Richardson-extrapolated. Throws NoRootInBracket if g
/// never changes sign.
OracleResult oracle_energy(const PotentialParams& pp, const ParticleParams& mp,
                           const QuantumNumbers& qn, const RadialGrid& grid, PotentialMode mode,
                           const OracleOptions& opts = {});

}  // namespace kgy
