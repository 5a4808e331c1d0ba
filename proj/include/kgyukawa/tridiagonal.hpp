#pragma once

#include <span>
#include <vector>

namespace kgy {

/// Symmetric tridiagonal matrix with diagonal `diag` and off-diagonal `off`
/// (off.size() == diag.size() - 1).
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  /// Number of eigenvalues strictly below x (Sturm sequence count).
  int count_below(double x) const;

  /// Gershgorin enclosure of the spectrum.
  std::pair<double, double> gershgorin() const;

  /// k-th smallest eigenvalue (k = 0 is the lowest) by Sturm bisection.
  /// Throws DomainError for k out of range and ConvergenceFailure if the
  /// bisection stalls before reaching `abs_tol`.
  double eigenvalue(int k, double abs_tol = 0.0) const;
};

}  // namespace kgy
