#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgyukawa/errors.hpp"
#include "kgyukawa/grid.hpp"
#include "kgyukawa/nu_core.hpp"

// D-dimensional Klein-Gordon equation with vector V(r) = -v0 e^{-ar}/r and
// scalar S(r) = -s0 e^{-ar}/r couplings, solved on the exponential
// (Greene-Aldrich type) approximation of the 1/r and 1/r^2 terms. Units are
// hbar = c = 1 with lengths in fm and energies/masses in fm^-1.

namespace kgy {

struct PotentialParams {
  double v0 = 0.0;  // vector strength
  double s0 = 0.0;  // scalar strength
  double a = 0.0;   // screening, fm^-1

  /// s0 / v0; throws DomainError when v0 == 0.
  double beta() const;
  static PotentialParams from_beta(double v0, double beta, double a);
  /// a > 0 and finite strengths.
  void validate() const;
};

struct ParticleParams {
  double mass = 1.0;  // fm^-1
  void validate() const;
};

/// (n, l, D) with n the table label used directly in the energy equation.
struct QuantumNumbers {
  int n = 1;
  int l = 0;
  int d = 3;

  /// D + 2l - 2; the spectrum depends on (l, D) only through this.
  int kappa() const { return d + 2 * l - 2; }
  /// ((D + 2l - 2)^2 - 1) / 4, equal to l(l+1) at D = 3.
  double centrifugal_constant() const {
    const double k = kappa();
    return (k * k - 1.0) / 4.0;
  }
  void validate() const;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// sqrt((D+2l-2)^2 + 4(S0^2 - V0^2)). Throws ComplexChannel when the
/// argument is negative.
double coupling_root(const PotentialParams& pp, const QuantumNumbers& qn);

/// NU canonical form of the s = e^{-2ar} radial equation at a trial energy.
NuProblem map_to_nu(const PotentialParams& pp, const ParticleParams& mp,
                    const QuantumNumbers& qn, double energy_trial);

/// (2n+1 + Lambda - eps/a)^2 - [(M/a + 2 S0)^2 - (E/a - 2 V0)^2] with
/// Lambda = coupling_root and eps = sqrt(M^2 - E^2). Requires |E| < M.
double energy_equation_residual(double energy, const PotentialParams& pp,
                                const ParticleParams& mp, const QuantumNumbers& qn);

enum class RootBranch {
  Lowest,   // most bound root; what the tables list
  Highest,  // root closest to +M
};

struct SolverOptions {
  int scan_points = 20000;
  /// Bisection stops once the bracket is narrower than this (or cannot shrink).
  double tolerance = 1e-14;
  /// Accepted |energy_equation_residual| at a returned root.
  double residual_tolerance = 1e-10;
  /// Accepted |NU energy relation residual| at a returned root.
  double nu_tolerance = 1e-8;
  /// Scan covers [-M(1 - edge), M(1 - edge)].
  double edge = 1e-9;
  RootBranch branch = RootBranch::Lowest;

  void validate() const;
};

struct EnergySolution {
  double energy = 0.0;
  double epsilon = 0.0;  // sqrt(M^2 - E^2)
  double residual = 0.0;
  double nu_residual = 0.0;
  std::pair<double, double> bracket{0.0, 0.0};  // scan cell holding the root
  int iterations = 0;
};

/// Every accepted root in ascending energy order.
std::vector<EnergySolution> solve_energy_roots(const PotentialParams& pp, const ParticleParams& mp,
                                               const QuantumNumbers& qn,
                                               const SolverOptions& opts = {});

/// Root chosen by opts.branch. Throws NoRootInBracket when no sign change is
/// found or none survives the residual checks.
EnergySolution solve_energy(const PotentialParams& pp, const ParticleParams& mp,
                            const QuantumNumbers& qn, const SolverOptions& opts = {});

struct IntRange {
  int first = 0;
  int last = -1;  // inclusive; empty when last < first
  bool empty() const { return last < first; }
  int size() const { return empty() ? 0 : last - first + 1; }
};

struct EnergyCell {
  QuantumNumbers qn;
  std::optional<EnergySolution> solution;
  std::optional<ErrorKind> error;  // set iff solution is empty
  std::string message;
};

/// Cells ordered by D, then n, then l.
struct EnergyTable {
  std::vector<EnergyCell> cells;
  const EnergyCell* find(const QuantumNumbers& qn) const;
};

/// Solves every (n, l, D) in the Cartesian product. Per-cell failures are
/// recorded in the cell. `threads` > 1 evaluates cells concurrently; the
/// result does not depend on it.
EnergyTable solve_table(const PotentialParams& pp, const ParticleParams& mp, IntRange n_range,
                        IntRange l_range, IntRange d_range, const SolverOptions& opts = {},
                        int threads = 1);

enum class Direction {
  Up,    // (n, l+1, D-2)
  Down,  // (n, l-1, D+2)
};

/// Partner state sharing D + 2l. Throws OutOfDomain if l < 0 or D < 2 results.
QuantumNumbers degeneracy_partner(const QuantumNumbers& qn, Direction direction);

struct RadialWavefunction {
  QuantumNumbers qn;
  double epsilon = 0.0;
  double a = 0.0;             // screening used to build the samples
  double jacobi_alpha = 0.0;  // eps / a
  double jacobi_beta = 0.0;   // coupling_root
  double exponent = 0.0;      // power of (1 - e^{-2ar}), (1 + jacobi_beta) / 2
  std::vector<double> r;
  std::vector<double> values;
  double norm = 0.0;  // N_nl fixed by int R^2 dr = 1
  int nodes = 0;      // interior sign changes

  /// N_nl e^{-eps r} (1 - e^{-2ar})^exponent P_n^(alpha,beta)(1 - 2e^{-2ar}).
  double evaluate(double r) const;
};

/// Default sampling for wavefunctions: r in [1e-9, 30/eps], log-linear.
QuadratureGrid default_wavefunction_grid(double epsilon, int points = 4096);

/// Samples the normalized radial function on `grid`. Normalization uses the
/// grid's trapezoid weights with the tail truncated where R^2 < 1e-16 of its
/// peak.
RadialWavefunction radial_wavefunction(const EnergySolution& sol, const PotentialParams& pp,
                                       const ParticleParams& mp, const QuantumNumbers& qn,
                                       const QuadratureGrid& grid);

}  // namespace kgy
