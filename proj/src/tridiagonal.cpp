#include "kgyukawa/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kgyukawa/errors.hpp"

namespace kgy {

int SymTridiagonal::count_below(double x) const {
  // LDL^T pivots of (T - x I); negatives count eigenvalues below x. Pivots
  // smaller than pivmin are pushed to -pivmin before counting (LAPACK dstebz).
  double max_off2 = 1.0;
  for (double e : off) max_off2 = std::max(max_off2, e * e);
  const double pivmin = std::numeric_limits<double>::min() * max_off2;
  int count = 0;
  double q = diag[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    if (i + 1 == diag.size()) break;
    q = diag[i + 1] - x - off[i] * off[i] / q;
  }
  return count;
}

std::pair<double, double> SymTridiagonal::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < n) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  const double pad = 4.0 * n * std::numeric_limits<double>::epsilon() *
                     std::max(std::abs(lo), std::abs(hi));
  return {lo - pad, hi + pad};
}

double SymTridiagonal::eigenvalue(int k, double abs_tol) const {
  const int n = static_cast<int>(diag.size());
  if (n == 0 || off.size() + 1 != diag.size()) {
    throw InvalidArgument("malformed tridiagonal matrix");
  }
  if (k < 0 || k >= n) throw DomainError("eigenvalue index " + std::to_string(k) + " out of range");

  auto [lo, hi] = gershgorin();
  for (int it = 0; it < 2000; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi || hi - lo <= abs_tol) return mid;
    if (count_below(mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw ConvergenceFailure("Sturm bisection did not converge");
}

}  // namespace kgy
