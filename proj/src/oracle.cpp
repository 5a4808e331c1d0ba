#include "kgyukawa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "kgyukawa/potentials.hpp"
#include "kgyukawa/tridiagonal.hpp"

namespace kgy {

namespace {

void check_energy(double energy, double mass) {
  if (!std::isfinite(energy) || !(std::abs(energy) < mass)) {
    throw DomainError("energy " + std::to_string(energy) + " outside (-M, M)");
  }
}

// Q(r; E) + eps^2, i.e. the r-dependent part of the coefficient.
double coupling_terms(double r, double energy, const PotentialParams& pp, const ParticleParams& mp,
                      const QuantumNumbers& qn, PotentialMode mode) {
  const double quad = pp.v0 * pp.v0 - pp.s0 * pp.s0;
  const double lin = mp.mass * pp.s0 + energy * pp.v0;
  const double barrier = qn.centrifugal_constant();
  if (mode == PotentialMode::Exact) {
    const double e1 = std::exp(-pp.a * r);
    return quad * e1 * e1 / (r * r) + 2.0 * lin * e1 / r - barrier / (r * r);
  }
  const double x = std::exp(-2.0 * pp.a * r);
  const double inv_r2 = centrifugal_approx(r, pp.a);  // 4a^2 x / (1-x)^2
  return quad * x * inv_r2 + 2.0 * lin * (-approx_yukawa(r, 1.0, pp.a)) - barrier * inv_r2;
}

SymTridiagonal discretize(const RadialGrid& grid, const std::function<double(double)>& potential) {
  grid.validate();
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const int interior = grid.points - 2;
  SymTridiagonal t;
  t.diag.resize(interior);
  t.off.assign(interior - 1, -inv_h2);
  for (int i = 0; i < interior; ++i) {
    t.diag[i] = 2.0 * inv_h2 + potential(grid.at(i + 1));
  }
  return t;
}

// -d^2/dr^2 + W(r; E) on the interior nodes, with W = fixed + E * slope.
class FrozenOperator {
 public:
  FrozenOperator(const PotentialParams& pp, const ParticleParams& mp, const QuantumNumbers& qn,
                 const RadialGrid& grid, PotentialMode mode) {
    grid.validate();
    const double h = grid.spacing();
    inv_h2_ = 1.0 / (h * h);
    const int interior = grid.points - 2;
    fixed_.resize(interior);
    slope_.resize(interior);
    for (int i = 0; i < interior; ++i) {
      const double r = grid.at(i + 1);
      const double w0 = -coupling_terms(r, 0.0, pp, mp, qn, mode);
      const double w1 = -coupling_terms(r, 1.0, pp, mp, qn, mode);
      fixed_[i] = 2.0 * inv_h2_ + w0;
      slope_[i] = w1 - w0;
    }
  }

  SymTridiagonal at(double energy) const {
    SymTridiagonal t;
    t.diag.resize(fixed_.size());
    for (std::size_t i = 0; i < fixed_.size(); ++i) t.diag[i] = fixed_[i] + energy * slope_[i];
    t.off.assign(fixed_.size() - 1, -inv_h2_);
    return t;
  }

  // Eigenvalues of the operator at `energy` lying strictly below x.
  int count_below(double energy, double x) const {
    const double off2 = inv_h2_ * inv_h2_;
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, off2);
    int count = 0;
    double q = fixed_[0] + energy * slope_[0] - x;
    for (std::size_t i = 0;; ++i) {
      if (std::abs(q) < pivmin) q = -pivmin;
      if (q < 0.0) ++count;
      if (i + 1 == fixed_.size()) break;
      q = fixed_[i + 1] + energy * slope_[i + 1] - x - off2 / q;
    }
    return count;
  }

 private:
  double inv_h2_ = 0.0;
  std::vector<double> fixed_;
  std::vector<double> slope_;
};

struct Bracket {
  double lo, hi, flo, fhi;
};

template <typename F>
double bisect(F&& g, Bracket b, double tol) {
  for (int it = 0; it < 300; ++it) {
    if (b.flo == 0.0) return b.lo;
    if (b.fhi == 0.0) return b.hi;
    const double mid = b.lo + 0.5 * (b.hi - b.lo);
    if (mid <= b.lo || mid >= b.hi || b.hi - b.lo <= tol) {
      return b.lo + 0.5 * (b.hi - b.lo);
    }
    const double fm = g(mid);
    if ((fm < 0.0) == (b.flo < 0.0)) {
      b.lo = mid;
      b.flo = fm;
    } else {
      b.hi = mid;
      b.fhi = fm;
    }
  }
  throw ConvergenceFailure("oracle energy bisection did not converge");
}

}  // namespace

double effective_ode_coefficient(double r, double energy, const PotentialParams& pp,
                                 const ParticleParams& mp, const QuantumNumbers& qn,
                                 PotentialMode mode) {
  pp.validate();
  mp.validate();
  qn.validate();
  if (!(r > 0.0)) throw DomainError("r must be > 0");
  check_energy(energy, mp.mass);
  const double eps2 = (mp.mass - energy) * (mp.mass + energy);
  return -eps2 + coupling_terms(r, energy, pp, mp, qn, mode);
}

double box_eigenvalue(const RadialGrid& grid, int k, const std::function<double(double)>& potential) {
  return discretize(grid, potential).eigenvalue(k);
}

double eigenvalue_k(double energy, const PotentialParams& pp, const ParticleParams& mp,
                    const QuantumNumbers& qn, const RadialGrid& grid, PotentialMode mode, int k) {
  pp.validate();
  mp.validate();
  qn.validate();
  check_energy(energy, mp.mass);
  if (k < 0) throw DomainError("eigenvalue index must be >= 0");
  return FrozenOperator(pp, mp, qn, grid, mode).at(energy).eigenvalue(k);
}

RadialGrid default_oracle_grid(double epsilon_estimate) {
  double r_max = 400.0;
  if (epsilon_estimate > 0.0) r_max = std::max(r_max, 40.0 / epsilon_estimate);
  return {1e-4, r_max, 16000};
}

OracleResult oracle_energy(const PotentialParams& pp, const ParticleParams& mp,
                           const QuantumNumbers& qn, const RadialGrid& grid, PotentialMode mode,
                           const OracleOptions& opts) {
  pp.validate();
  mp.validate();
  qn.validate();
  grid.validate();
  if (opts.scan_points < 2) throw InvalidArgument("oracle scan_points must be >= 2");

  const int k = qn.n - 1;
  const double m = mp.mass;
  // sign of g(E) = lambda_k(E) + eps^2: positive iff fewer than k+1
  // eigenvalues lie below -eps^2.
  const auto g_on = [&](const FrozenOperator& op) {
    return [&op, k, m](double e) {
      return op.count_below(e, -(m - e) * (m + e)) <= k ? 1.0 : -1.0;
    };
  };

  const FrozenOperator coarse_op(pp, mp, qn, grid, mode);
  const auto g = g_on(coarse_op);
  const double e_lo = -m * (1.0 - opts.edge);
  const double e_hi = m * (1.0 - opts.edge);
  const double step = (e_hi - e_lo) / (opts.scan_points - 1);

  std::vector<Bracket> brackets;
  double x0 = e_lo;
  double f0 = g(x0);
  for (int i = 1; i < opts.scan_points; ++i) {
    const double x1 = (i == opts.scan_points - 1) ? e_hi : e_lo + i * step;
    const double f1 = g(x1);
    if (f0 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) brackets.push_back({x0, x1, f0, f1});
    x0 = x1;
    f0 = f1;
  }
  if (brackets.empty()) {
    throw NoRootInBracket("oracle: lambda_" + std::to_string(k) +
                          "(E) = E^2 - M^2 has no solution in (-M, M)");
  }

  std::vector<double> roots;
  roots.reserve(brackets.size());
  for (const auto& b : brackets) roots.push_back(bisect(g, b, opts.tolerance));
  double coarse = roots.front();
  if (opts.target) {
    coarse = *std::min_element(roots.begin(), roots.end(), [&](double x, double y) {
      return std::abs(x - *opts.target) < std::abs(y - *opts.target);
    });
  }

  const FrozenOperator fine_op(pp, mp, qn, grid.refined(), mode);
  const auto gf = g_on(fine_op);
  double width = 16.0 * std::max(1e-6, std::abs(step) * 1e-3);
  std::optional<Bracket> fine_bracket;
  for (int attempt = 0; attempt < 12 && !fine_bracket; ++attempt, width *= 4.0) {
    const double lo = std::max(e_lo, coarse - width);
    const double hi = std::min(e_hi, coarse + width);
    const double flo = gf(lo);
    const double fhi = gf(hi);
    if (flo == 0.0 || fhi == 0.0 || (flo < 0.0) != (fhi < 0.0)) fine_bracket = Bracket{lo, hi, flo, fhi};
  }
  if (!fine_bracket) {
    throw ConvergenceFailure("oracle: root lost on the refined grid");
  }
  const double fine = bisect(gf, *fine_bracket, opts.tolerance);

  OracleResult out;
  out.energy = coarse;
  out.eigen_index = k;
  out.grid = grid;
  out.fine_energy = fine;
  // Spacing ratio is exactly 2 for refined().
  out.richardson_estimate = fine + (fine - coarse) / 3.0;
  out.grid_error = std::abs(coarse - out.richardson_estimate);
  return out;
}

}  // namespace kgy
