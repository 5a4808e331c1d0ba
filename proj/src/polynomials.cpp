#include "kgyukawa/polynomials.hpp"

#include <string>

#include "kgyukawa/errors.hpp"

namespace kgy {

namespace {

void check_degree(int n) {
  if (n < 0 || n > kMaxPolynomialDegree) {
    throw DomainError("polynomial degree " + std::to_string(n) +
                      " outside [0, " + std::to_string(kMaxPolynomialDegree) + "]");
  }
}

}  // namespace

double jacobi_eval(int n, double alpha, double beta, double x) {
  check_degree(n);
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("Jacobi parameters must exceed -1");
  }
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
  const double ab = alpha + beta;
  for (int m = 2; m <= n; ++m) {
    const double two_m_ab = 2.0 * m + ab;
    const double a1 = 2.0 * m * (m + ab) * (two_m_ab - 2.0);
    const double a2 = (two_m_ab - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (two_m_ab - 2.0) * (two_m_ab - 1.0) * two_m_ab;
    const double a4 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * two_m_ab;
    const double next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return require_finite(cur, "Jacobi polynomial value");
}

double laguerre_eval(int n, double alpha, double x) {
  check_degree(n);
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int m = 2; m <= n; ++m) {
    const double next = ((2.0 * m - 1.0 + alpha - x) * cur - (m - 1.0 + alpha) * prev) / m;
    prev = cur;
    cur = next;
  }
  return require_finite(cur, "Laguerre polynomial value");
}

}  // namespace kgy
