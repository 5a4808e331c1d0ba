#pragma once

namespace kgy {

inline constexpr int kMaxPolynomialDegree = 200;

/// Jacobi polynomial P_n^(alpha,beta)(x) via the three-term recurrence.
/// Requires alpha, beta > -1 and 0 <= n <= 200; throws DomainError otherwise
/// and NonFinite if the recurrence overflows.
double jacobi_eval(int n, double alpha, double beta, double x);

/// Generalized Laguerre polynomial L_n^(alpha)(x) via the three-term recurrence.
double laguerre_eval(int n, double alpha, double x);

}  // namespace kgy
