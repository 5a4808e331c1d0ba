#pragma once

#include <span>
#include <vector>

#include "kgyukawa/kg_yukawa.hpp"

// Schroedinger-limit and Coulomb-limit energies of the Yukawa problem with
// hbar = 1, and the mapping that relates them to the relativistic solver.

namespace kgy {

struct NonRelParams {
  double mu = 1.0;  // reduced mass, fm^-1
  double v0 = 0.0;  // Yukawa strength in the Schroedinger equation
  double a = 0.0;   // screening, fm^-1; 0 is the Coulomb limit
  void validate() const;
};

/// n + D/2 + l - 1/2.
double nonrel_principal(const QuantumNumbers& qn);

/// -(1/2mu) [nu a - mu v0 / nu]^2.
double nonrel_energy(const NonRelParams& p, const QuantumNumbers& qn);

/// -mu v0^2 / (2 nu^2).
double coulomb_energy(const NonRelParams& p, const QuantumNumbers& qn);

/// mu v0 / nu^2, where the bracket of nonrel_energy vanishes.
double critical_screening(const NonRelParams& p, const QuantumNumbers& qn);

/// mu v0 / nu - nu a: the e^{-kr} decay constant of the Schroedinger state.
/// Positive (a bound state) iff a < critical_screening.
double nonrel_decay_constant(const NonRelParams& p, const QuantumNumbers& qn);

struct RelativisticInputs {
  PotentialParams potential;
  ParticleParams particle;
};

/// V -> V/2, S -> S/2 with S = V and E + M -> 2 mu: gives v0 = s0 = p.v0 / 2,
/// the same screening and M = mu. The Schroedinger energy is then E - M.
RelativisticInputs map_nonrel_to_relativistic(const NonRelParams& p);

struct LimitPoint {
  NonRelParams params;
  double relativistic_energy = 0.0;  // E on the root nearest +M
  double shifted_energy = 0.0;       // E - M
  double nonrel_energy = 0.0;
  double gap = 0.0;                  // |shifted - nonrel|
};

/// Solves the mapped relativistic problem for each entry of `sequence` and
/// compares E - M with nonrel_energy. Throws NoRootInBracket when the mapped
/// problem has no root with E > 0; other solver errors propagate.
std::vector<LimitPoint> nonrel_limit_of_relativistic(std::span<const NonRelParams> sequence,
                                                     const QuantumNumbers& qn,
                                                     SolverOptions opts = {});

}  // namespace kgy
