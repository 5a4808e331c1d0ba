#pragma once

#include <optional>
#include <vector>

// Shortcut parametric Nikiforov-Uvarov machinery for equations of the form
//
//   psi'' + (c1 - c2 s) / (s (1 - c3 s)) psi'
//         + (-p2 s^2 + p1 s - p0) / (s^2 (1 - c3 s)^2) psi = 0.
//
// Everything here is a pure function of its inputs.

namespace kgy {

struct NuProblem {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

/// Derived constants c4..c13. c11 and c13 divide by c3 and are absent when
/// c3 == 0.
struct NuCoefficients {
  double c4 = 0.0;
  double c5 = 0.0;
  double c6 = 0.0;
  double c7 = 0.0;
  double c8 = 0.0;
  double c9 = 0.0;
  double c10 = 0.0;
  std::optional<double> c11;
  double c12 = 0.0;
  std::optional<double> c13;
};

/// Computes c4..c13. Throws NegativeDiscriminant when c8 < 0 or c9 < 0 and
/// NonFinite for non-finite input.
NuCoefficients derive_coefficients(const NuProblem& problem);

/// Left-hand side of the NU quantization condition for Jacobi degree `n`,
/// evaluated on the "+sqrt" branch. Zero at an eigenvalue.
double energy_relation_residual(const NuProblem& problem, const NuCoefficients& coeffs, int n);

/// Sign of sqrt(c8) used when composing rho/phi exponents. `AsDerived` keeps
/// c10 and c12 exactly as derive_coefficients returns them. `Decaying` flips
/// the sqrt(c8) term (c10 -> c1 + 2c4 + 2sqrt(c8) - 1, c12 -> c4 + sqrt(c8)),
/// which is the branch whose phi(s) vanishes at s -> 0.
enum class ExponentBranch { AsDerived, Decaying };

/// rho(s) = s^rho_s (1 - c3 s)^rho_t, phi(s) = s^phi_s (1 - c3 s)^phi_t,
/// y_n(s) = P_n^(jacobi_alpha, jacobi_beta)(1 - 2 c3 s).
struct WavefunctionExponents {
  double rho_s = 0.0;
  double rho_t = 0.0;
  double phi_s = 0.0;
  double phi_t = 0.0;
  double jacobi_alpha = 0.0;
  double jacobi_beta = 0.0;
};

/// Requires c10, c11 > -1 and c12, c13 > 0 on the chosen branch; throws
/// ConstraintViolation naming the first offending coefficient.
WavefunctionExponents wavefunction_exponents(const NuCoefficients& coeffs,
                                             ExponentBranch branch = ExponentBranch::AsDerived);

/// One step of the c3 -> 0 approach.
struct LaguerreLimitSample {
  double c3 = 0.0;
  double jacobi_value = 0.0;    // P_n^(alpha, scale/c3)(1 - 2 c3 s)
  double laguerre_value = 0.0;  // L_n^alpha(scale s)
  double power_value = 0.0;     // (1 - c3 s)^(-rate/c3)
  double exp_value = 0.0;       // e^(rate s)
};

struct LaguerreLimit {
  std::vector<LaguerreLimitSample> sequence;  // c3 = 1e-1 .. 1e-6
  double jacobi_value = 0.0;                  // at the smallest c3
  double laguerre_value = 0.0;
};

/// Numerically approaches the c3 -> 0 degeneration of the Jacobi factor into
/// a generalized Laguerre polynomial and of (1 - c3 s)^c13 into an
/// exponential. `scale` is the finite limit of c3 * c11 and `rate` the finite
/// limit of -c3 * c13. Requires 0 <= n <= 6 and alpha > -1.
LaguerreLimit laguerre_limit_check(double alpha, double scale, int n, double s, double rate = 0.0);

}  // namespace kgy
