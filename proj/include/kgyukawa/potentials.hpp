#pragma once

#include <vector>

namespace kgy {

/// -strength e^{-ar} / r. Throws DomainError for r <= 0.
double yukawa(double r, double strength, double a);

/// -2a strength e^{-2ar} / (1 - e^{-2ar}), the exponential stand-in for the
/// Yukawa form, accurate for ar << 1.
double approx_yukawa(double r, double strength, double a);

/// 4a^2 e^{-2ar} / (1 - e^{-2ar})^2, the stand-in for 1/r^2.
double centrifugal_approx(double r, double a);

/// 2a e^{-ar} / (1 - e^{-2ar}), the stand-in for 1/r.
double inverse_r_approx(double r, double a);

struct ProfileRow {
  double r = 0.0;
  double exact = 0.0;
  double approx = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;  // NaN-free; 0 when exact is within 1e-300 of zero
  bool has_rel_err = true;
};

struct PotentialProfile {
  std::vector<ProfileRow> rows;
};

/// Uniform tabulation on [r_min, r_max]. Requires 0 < r_min < r_max and
/// points >= 2.
PotentialProfile profile(double strength, double a, double r_min, double r_max, int points);

}  // namespace kgy
