#include "kgyukawa/nu_core.hpp"

#include <cmath>
#include <string>

#include "kgyukawa/errors.hpp"
#include "kgyukawa/polynomials.hpp"

namespace kgy {

namespace {

void check_finite(const NuProblem& p) {
  require_finite(p.c1, "c1");
  require_finite(p.c2, "c2");
  require_finite(p.c3, "c3");
  require_finite(p.p0, "p0");
  require_finite(p.p1, "p1");
  require_finite(p.p2, "p2");
}

void check_discriminants(const NuCoefficients& c) {
  if (c.c8 < 0.0) {
    throw NegativeDiscriminant("c8 = " + std::to_string(c.c8) + " < 0");
  }
  if (c.c9 < 0.0) {
    throw NegativeDiscriminant("c9 = " + std::to_string(c.c9) + " < 0");
  }
}

}  // namespace

NuCoefficients derive_coefficients(const NuProblem& p) {
  check_finite(p);
  NuCoefficients c;
  c.c4 = 0.5 * (1.0 - p.c1);
  c.c5 = 0.5 * (p.c2 - 2.0 * p.c3);
  c.c6 = c.c5 * c.c5 + p.p2;
  c.c7 = 2.0 * c.c4 * c.c5 - p.p1;
  c.c8 = c.c4 * c.c4 + p.p0;
  c.c9 = p.c3 * (c.c7 + p.c3 * c.c8) + c.c6;
  check_discriminants(c);

  const double sqrt_c8 = std::sqrt(c.c8);
  const double sqrt_c9 = std::sqrt(c.c9);
  c.c10 = p.c1 + 2.0 * c.c4 - 2.0 * sqrt_c8 - 1.0;
  c.c12 = c.c4 - sqrt_c8;
  if (p.c3 != 0.0) {
    c.c11 = 1.0 - p.c1 - 2.0 * c.c4 + 2.0 / p.c3 * sqrt_c9;
    c.c13 = -c.c4 + (sqrt_c9 - c.c5) / p.c3;
  }
  return c;
}

double energy_relation_residual(const NuProblem& p, const NuCoefficients& c, int n) {
  if (n < 0) throw DomainError("NU degree n must be nonnegative");
  check_discriminants(c);
  const double sqrt_c8 = std::sqrt(c.c8);
  const double sqrt_c9 = std::sqrt(c.c9);
  const double two_n_1 = 2.0 * n + 1.0;
  return p.c2 * n - two_n_1 * c.c5 + two_n_1 * (sqrt_c9 - p.c3 * sqrt_c8) +
         n * (n - 1.0) * p.c3 + c.c7 + 2.0 * p.c3 * c.c8 - 2.0 * std::sqrt(c.c8 * c.c9);
}

WavefunctionExponents wavefunction_exponents(const NuCoefficients& c, ExponentBranch branch) {
  if (!c.c11 || !c.c13) {
    throw InvalidArgument("wavefunction exponents need c3 != 0 (use the Laguerre limit)");
  }
  double c10 = c.c10;
  double c12 = c.c12;
  if (branch == ExponentBranch::Decaying) {
    const double sqrt_c8 = std::sqrt(c.c8);
    c10 += 4.0 * sqrt_c8;
    c12 += 2.0 * sqrt_c8;
  }
  if (!(c10 > -1.0)) throw ConstraintViolation("c10", c10);
  if (!(*c.c11 > -1.0)) throw ConstraintViolation("c11", *c.c11);
  if (!(c12 > 0.0)) throw ConstraintViolation("c12", c12);
  if (!(*c.c13 > 0.0)) throw ConstraintViolation("c13", *c.c13);

  WavefunctionExponents w;
  w.rho_s = c10;
  w.rho_t = *c.c11;
  w.phi_s = c12;
  w.phi_t = *c.c13;
  w.jacobi_alpha = c10;
  w.jacobi_beta = *c.c11;
  return w;
}

LaguerreLimit laguerre_limit_check(double alpha, double scale, int n, double s, double rate) {
  if (n < 0 || n > 6) throw DomainError("Laguerre limit check supports 0 <= n <= 6");
  LaguerreLimit out;
  const double laguerre = laguerre_eval(n, alpha, scale * s);
  for (int e = 1; e <= 6; ++e) {
    const double c3 = std::pow(10.0, -e);
    if (c3 * s >= 1.0) continue;  // outside s in [0, 1/c3)
    LaguerreLimitSample sample;
    sample.c3 = c3;
    sample.jacobi_value = jacobi_eval(n, alpha, scale / c3, 1.0 - 2.0 * c3 * s);
    sample.laguerre_value = laguerre;
    sample.power_value = require_finite(std::pow(1.0 - c3 * s, -rate / c3), "power factor");
    sample.exp_value = require_finite(std::exp(rate * s), "exponential factor");
    out.sequence.push_back(sample);
  }
  if (out.sequence.empty()) throw DomainError("s lies outside the overlap domain for every c3");
  out.jacobi_value = out.sequence.back().jacobi_value;
  out.laguerre_value = laguerre;
  return out;
}

}  // namespace kgy
