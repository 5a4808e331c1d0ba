#include "kgyukawa/limits.hpp"

#include <cmath>

namespace kgy {

void NonRelParams::validate() const {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidArgument("reduced mass must be > 0");
  if (!std::isfinite(v0)) throw InvalidArgument("v0 must be finite");
  if (!(a >= 0.0) || !std::isfinite(a)) throw InvalidArgument("screening a must be >= 0");
}

double nonrel_principal(const QuantumNumbers& qn) {
  const double nu = qn.n + 0.5 * qn.d + qn.l - 0.5;
  if (!(nu > 0.0)) throw DomainError("n + D/2 + l - 1/2 must be positive");
  return nu;
}

double nonrel_energy(const NonRelParams& p, const QuantumNumbers& qn) {
  p.validate();
  const double nu = nonrel_principal(qn);
  const double bracket = nu * p.a - p.mu * p.v0 / nu;
  return -bracket * bracket / (2.0 * p.mu);
}

double coulomb_energy(const NonRelParams& p, const QuantumNumbers& qn) {
  p.validate();
  const double nu = nonrel_principal(qn);
  return -p.mu * p.v0 * p.v0 / (2.0 * nu * nu);
}

double critical_screening(const NonRelParams& p, const QuantumNumbers& qn) {
  p.validate();
  const double nu = nonrel_principal(qn);
  return p.mu * p.v0 / (nu * nu);
}

double nonrel_decay_constant(const NonRelParams& p, const QuantumNumbers& qn) {
  p.validate();
  const double nu = nonrel_principal(qn);
  return p.mu * p.v0 / nu - nu * p.a;
}

RelativisticInputs map_nonrel_to_relativistic(const NonRelParams& p) {
  p.validate();
  if (!(p.a > 0.0)) throw InvalidArgument("relativistic solver needs a > 0");
  return {PotentialParams{0.5 * p.v0, 0.5 * p.v0, p.a}, ParticleParams{p.mu}};
}

std::vector<LimitPoint> nonrel_limit_of_relativistic(std::span<const NonRelParams> sequence,
                                                     const QuantumNumbers& qn,
                                                     SolverOptions opts) {
  opts.branch = RootBranch::Highest;
  std::vector<LimitPoint> out;
  out.reserve(sequence.size());
  for (const auto& p : sequence) {
    const auto rel = map_nonrel_to_relativistic(p);
    const auto sol = solve_energy(rel.potential, rel.particle, qn, opts);
    if (!(sol.energy > 0.0)) {
      throw NoRootInBracket("no root on the particle branch (E > 0) for the mapped problem");
    }
    LimitPoint pt;
    pt.params = p;
    pt.relativistic_energy = sol.energy;
    pt.shifted_energy = sol.energy - rel.particle.mass;
    pt.nonrel_energy = nonrel_energy(p, qn);
    pt.gap = std::abs(pt.shifted_energy - pt.nonrel_energy);
    out.push_back(pt);
  }
  return out;
}

}  // namespace kgy
