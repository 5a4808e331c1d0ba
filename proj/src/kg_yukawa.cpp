#include "kgyukawa/kg_yukawa.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "kgyukawa/polynomials.hpp"

namespace kgy {

double PotentialParams::beta() const {
  if (v0 == 0.0) throw DomainError("beta = s0/v0 undefined for v0 = 0");
  return s0 / v0;
}

PotentialParams PotentialParams::from_beta(double v0, double beta, double a) {
  return {v0, beta * v0, a};
}

void PotentialParams::validate() const {
  if (!std::isfinite(v0) || !std::isfinite(s0)) {
    throw InvalidArgument("potential strengths must be finite");
  }
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("screening a must be > 0");
}

void ParticleParams::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw InvalidArgument("mass must be > 0");
}

void QuantumNumbers::validate() const {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (l < 0) throw InvalidArgument("l must be >= 0");
  if (d < 2) throw InvalidArgument("dimension D must be >= 2");
}

void SolverOptions::validate() const {
  if (scan_points < 2) throw InvalidArgument("scan_points must be >= 2");
  if (!(tolerance > 0.0)) throw InvalidArgument("tolerance must be > 0");
  if (!(residual_tolerance > 0.0) || !(nu_tolerance > 0.0)) {
    throw InvalidArgument("residual tolerances must be > 0");
  }
  if (!(edge > 0.0) || !(edge < 1.0)) throw InvalidArgument("edge must lie in (0, 1)");
}

double coupling_root(const PotentialParams& pp, const QuantumNumbers& qn) {
  const double k = qn.kappa();
  const double arg = k * k + 4.0 * (pp.s0 * pp.s0 - pp.v0 * pp.v0);
  if (arg < 0.0) {
    throw ComplexChannel("(D+2l-2)^2 + 4(S0^2 - V0^2) = " + std::to_string(arg) +
                         " < 0: vector coupling too strong for a real solution");
  }
  return std::sqrt(arg);
}

namespace {

void validate_inputs(const PotentialParams& pp, const ParticleParams& mp, const QuantumNumbers& qn) {
  pp.validate();
  mp.validate();
  qn.validate();
}

double epsilon_of(double energy, double mass) {
  if (!std::isfinite(energy) || !(std::abs(energy) < mass)) {
    throw DomainError("energy " + std::to_string(energy) + " outside (-M, M)");
  }
  return std::sqrt((mass - energy) * (mass + energy));
}

// Magnitude of the terms entering the residual; sets the rounding floor.
double residual_scale(double energy, const PotentialParams& pp, const ParticleParams& mp) {
  const double big = mp.mass / pp.a + 2.0 * std::abs(pp.s0);
  const double vec = std::abs(energy) / pp.a + 2.0 * std::abs(pp.v0);
  return big * big + vec * vec;
}

}  // namespace

NuProblem map_to_nu(const PotentialParams& pp, const ParticleParams& mp, const QuantumNumbers& qn,
                    double energy_trial) {
  validate_inputs(pp, mp, qn);
  coupling_root(pp, qn);
  const double eps = epsilon_of(energy_trial, mp.mass);
  const double p0 = eps * eps / (4.0 * pp.a * pp.a);
  const double coupling = (mp.mass * pp.s0 + energy_trial * pp.v0) / pp.a;
  NuProblem p;
  p.c1 = 1.0;
  p.c2 = 1.0;
  p.c3 = 1.0;
  p.p0 = p0;
  p.p1 = 2.0 * p0 + coupling - qn.centrifugal_constant();
  p.p2 = p0 - (pp.v0 * pp.v0 - pp.s0 * pp.s0) + coupling;
  return p;
}

double energy_equation_residual(double energy, const PotentialParams& pp, const ParticleParams& mp,
                                const QuantumNumbers& qn) {
  validate_inputs(pp, mp, qn);
  const double lambda = coupling_root(pp, qn);
  const double eps = epsilon_of(energy, mp.mass);
  const double base = 2.0 * qn.n + 1.0 + lambda - eps / pp.a;
  const double vec = energy / pp.a - 2.0 * pp.v0;
  const double sca = mp.mass / pp.a + 2.0 * pp.s0;
  return base * base - (sca * sca - vec * vec);
}

std::vector<EnergySolution> solve_energy_roots(const PotentialParams& pp, const ParticleParams& mp,
                                               const QuantumNumbers& qn, const SolverOptions& opts) {
  validate_inputs(pp, mp, qn);
  opts.validate();
  coupling_root(pp, qn);

  const auto f = [&](double e) { return energy_equation_residual(e, pp, mp, qn); };
  const double e_lo = -mp.mass * (1.0 - opts.edge);
  const double e_hi = mp.mass * (1.0 - opts.edge);
  const int points = opts.scan_points;
  const double step = (e_hi - e_lo) / (points - 1);

  std::vector<EnergySolution> roots;
  double x0 = e_lo;
  double f0 = f(x0);
  for (int i = 1; i < points; ++i) {
    const double x1 = (i == points - 1) ? e_hi : e_lo + i * step;
    const double f1 = f(x1);
    const bool zero_at_left = (f0 == 0.0);
    if (zero_at_left || (f0 < 0.0) != (f1 < 0.0)) {
      double lo = x0, hi = x1, flo = f0;
      int iterations = 0;
      if (zero_at_left) {
        hi = lo;
      }
      while (hi - lo > opts.tolerance) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        ++iterations;
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      const double flo_final = f(lo);
      const double fhi_final = f(hi);
      const double root = std::abs(flo_final) <= std::abs(fhi_final) ? lo : hi;

      EnergySolution sol;
      sol.energy = root;
      sol.epsilon = epsilon_of(root, mp.mass);
      sol.residual = f(root);
      const NuProblem problem = map_to_nu(pp, mp, qn, root);
      sol.nu_residual = energy_relation_residual(problem, derive_coefficients(problem), qn.n);
      sol.bracket = {x0, x1};
      sol.iterations = iterations;

      const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                           residual_scale(root, pp, mp);
      const bool residual_ok = std::abs(sol.residual) <= std::max(opts.residual_tolerance, floor);
      const bool nu_ok = std::abs(sol.nu_residual) <= std::max(opts.nu_tolerance, floor);
      // Skip a root sitting exactly on the right edge of this cell; the next
      // cell picks it up as its left endpoint.
      const bool duplicate = !roots.empty() && roots.back().energy == root;
      if (residual_ok && nu_ok && !duplicate) roots.push_back(sol);
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

EnergySolution solve_energy(const PotentialParams& pp, const ParticleParams& mp,
                            const QuantumNumbers& qn, const SolverOptions& opts) {
  auto roots = solve_energy_roots(pp, mp, qn, opts);
  if (roots.empty()) {
    throw NoRootInBracket("no bound state for (n, l, D) = (" + std::to_string(qn.n) + ", " +
                          std::to_string(qn.l) + ", " + std::to_string(qn.d) +
                          ") in (-M, M)");
  }
  return opts.branch == RootBranch::Lowest ? roots.front() : roots.back();
}

const EnergyCell* EnergyTable::find(const QuantumNumbers& qn) const {
  for (const auto& cell : cells) {
    if (cell.qn == qn) return &cell;
  }
  return nullptr;
}

EnergyTable solve_table(const PotentialParams& pp, const ParticleParams& mp, IntRange n_range,
                        IntRange l_range, IntRange d_range, const SolverOptions& opts,
                        int threads) {
  pp.validate();
  mp.validate();
  opts.validate();

  EnergyTable table;
  table.cells.reserve(static_cast<std::size_t>(n_range.size()) * l_range.size() * d_range.size());
  for (int d = d_range.first; d <= d_range.last; ++d) {
    for (int n = n_range.first; n <= n_range.last; ++n) {
      for (int l = l_range.first; l <= l_range.last; ++l) {
        table.cells.push_back({QuantumNumbers{n, l, d}, std::nullopt, std::nullopt, {}});
      }
    }
  }

  const auto solve_cell = [&](EnergyCell& cell) {
    try {
      cell.solution = solve_energy(pp, mp, cell.qn, opts);
    } catch (const Error& e) {
      cell.error = e.kind();
      cell.message = e.what();
    }
  };

  const int workers = std::clamp(threads, 1, std::max<int>(1, static_cast<int>(table.cells.size())));
  if (workers == 1) {
    for (auto& cell : table.cells) solve_cell(cell);
    return table;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < table.cells.size(); i = next++) solve_cell(table.cells[i]);
      });
    }
  }
  return table;
}

QuantumNumbers degeneracy_partner(const QuantumNumbers& qn, Direction direction) {
  QuantumNumbers partner = qn;
  if (direction == Direction::Up) {
    partner.l += 1;
    partner.d -= 2;
  } else {
    partner.l -= 1;
    partner.d += 2;
  }
  if (partner.l < 0 || partner.d < 2) {
    throw OutOfDomain("partner (n, l, D) = (" + std::to_string(partner.n) + ", " +
                      std::to_string(partner.l) + ", " + std::to_string(partner.d) +
                      ") is outside l >= 0, D >= 2");
  }
  return partner;
}

double RadialWavefunction::evaluate(double r) const {
  if (!(r > 0.0)) throw DomainError("wavefunction evaluated at r <= 0");
  const double s = std::exp(-2.0 * a * r);
  const double one_minus_s = -std::expm1(-2.0 * a * r);
  return norm * std::exp(-epsilon * r) * std::pow(one_minus_s, exponent) *
         jacobi_eval(qn.n, jacobi_alpha, jacobi_beta, 1.0 - 2.0 * s);
}

QuadratureGrid default_wavefunction_grid(double epsilon, int points) {
  if (!(epsilon > 0.0)) throw DomainError("wavefunction grid needs epsilon > 0");
  return QuadratureGrid::log_linear(1e-9, 30.0 / epsilon, points);
}

RadialWavefunction radial_wavefunction(const EnergySolution& sol, const PotentialParams& pp,
                                       const ParticleParams& mp, const QuantumNumbers& qn,
                                       const QuadratureGrid& grid) {
  const NuProblem problem = map_to_nu(pp, mp, qn, sol.energy);
  const NuCoefficients coeffs = derive_coefficients(problem);
  const WavefunctionExponents w = wavefunction_exponents(coeffs, ExponentBranch::Decaying);

  RadialWavefunction wf;
  wf.qn = qn;
  wf.epsilon = epsilon_of(sol.energy, mp.mass);
  wf.a = pp.a;
  wf.jacobi_alpha = w.jacobi_alpha;
  wf.jacobi_beta = w.jacobi_beta;
  wf.exponent = w.phi_t;
  wf.norm = 1.0;
  wf.r = grid.r;
  wf.values.resize(grid.size());

  double peak = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    wf.values[i] = wf.evaluate(grid.r[i]);
    peak = std::max(peak, wf.values[i] * wf.values[i]);
  }
  std::size_t last = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (wf.values[i] * wf.values[i] >= 1e-16 * peak) last = i;
  }
  double integral = 0.0;
  for (std::size_t i = 0; i <= last; ++i) integral += grid.weights[i] * wf.values[i] * wf.values[i];
  if (!std::isfinite(integral) || !(integral > 0.0)) {
    throw NormalizationFailure("radial norm integral is " + std::to_string(integral));
  }
  wf.norm = 1.0 / std::sqrt(integral);
  for (auto& v : wf.values) v *= wf.norm;

  const double floor = 1e-12 * std::sqrt(peak) * wf.norm;
  int sign = 0;
  for (double v : wf.values) {
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (sign != 0 && s != sign) ++wf.nodes;
    sign = s;
  }
  return wf;
}

}  // namespace kgy
