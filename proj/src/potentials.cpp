#include "kgyukawa/potentials.hpp"

#include <cmath>
#include <string>

#include "kgyukawa/errors.hpp"

namespace kgy {

namespace {

void check_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("potential evaluated at r = " + std::to_string(r) + " (need r > 0)");
  }
}

void check_strength(double strength) {
  if (!std::isfinite(strength)) throw DomainError("potential strength must be finite");
}

// a = 0 is the Coulomb limit for the exact form only.
void check_screening(double a, bool allow_zero) {
  if (!std::isfinite(a) || a < 0.0 || (!allow_zero && a == 0.0)) {
    throw DomainError("screening a = " + std::to_string(a) + (allow_zero ? " (need a >= 0)" : " (need a > 0)"));
  }
}

}  // namespace

double yukawa(double r, double strength, double a) {
  check_radius(r);
  check_strength(strength);
  check_screening(a, true);
  return require_finite(-strength * std::exp(-a * r) / r, "Yukawa potential");
}

double approx_yukawa(double r, double strength, double a) {
  check_radius(r);
  check_strength(strength);
  check_screening(a, false);
  const double x = -2.0 * a * r;
  return require_finite(-2.0 * a * strength * std::exp(x) / -std::expm1(x), "approximated Yukawa potential");
}

double centrifugal_approx(double r, double a) {
  check_radius(r);
  check_screening(a, false);
  const double x = -2.0 * a * r;
  const double q = -std::expm1(x);
  return require_finite(4.0 * a * a * std::exp(x) / (q * q), "approximated 1/r^2");
}

double inverse_r_approx(double r, double a) {
  check_radius(r);
  check_screening(a, false);
  return require_finite(2.0 * a * std::exp(-a * r) / -std::expm1(-2.0 * a * r), "approximated 1/r");
}

PotentialProfile profile(double strength, double a, double r_min, double r_max, int points) {
  if (!(r_min > 0.0) || !(r_max > r_min)) {
    throw DomainError("profile requires 0 < r_min < r_max");
  }
  if (points < 2) throw InvalidArgument("profile requires at least 2 points");
  PotentialProfile out;
  out.rows.reserve(points);
  const double step = (r_max - r_min) / (points - 1);
  for (int i = 0; i < points; ++i) {
    ProfileRow row;
    row.r = (i == points - 1) ? r_max : r_min + i * step;
    row.exact = yukawa(row.r, strength, a);
    row.approx = approx_yukawa(row.r, strength, a);
    row.abs_err = std::abs(row.approx - row.exact);
    if (std::abs(row.exact) > 1e-300) {
      row.rel_err = row.abs_err / std::abs(row.exact);
    } else {
      row.rel_err = 0.0;
      row.has_rel_err = false;
    }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace kgy
