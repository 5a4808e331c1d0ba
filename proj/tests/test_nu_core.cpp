#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "kgyukawa/errors.hpp"
#include "kgyukawa/kg_yukawa.hpp"
#include "kgyukawa/nu_core.hpp"
#include "kgyukawa/polynomials.hpp"

using kgy::NuCoefficients;
using kgy::NuProblem;

namespace {

// Quantization condition rebuilt term by term from (c1..p2) alone.
double reference_residual(const NuProblem& p, int n) {
  const double c4 = (1.0 - p.c1) / 2.0;
  const double c5 = (p.c2 - 2.0 * p.c3) / 2.0;
  const double c6 = c5 * c5 + p.p2;
  const double c7 = 2.0 * c4 * c5 - p.p1;
  const double c8 = c4 * c4 + p.p0;
  const double c9 = p.c3 * (c7 + p.c3 * c8) + c6;
  const double t1 = p.c2 * n;
  const double t2 = -(2.0 * n + 1.0) * c5;
  const double t3 = (2.0 * n + 1.0) * (std::sqrt(c9) - p.c3 * std::sqrt(c8));
  const double t4 = n * (n - 1.0) * p.c3;
  const double t5 = c7;
  const double t6 = 2.0 * p.c3 * c8;
  const double t7 = -2.0 * std::sqrt(c8 * c9);
  return t1 + t2 + t3 + t4 + t5 + t6 + t7;
}

double laguerre_series(int n, double a, double x) {
  double sum = 0.0, fact = 1.0;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) fact *= i;
    double binom = 1.0;
    for (int j = 1; j <= n - i; ++j) binom *= (n + a - (n - i) + j) / j;
    sum += ((i % 2) ? -1.0 : 1.0) * binom * std::pow(x, i) / fact;
  }
  return sum;
}

}  // namespace

TEST_CASE("coefficients of the trivial problem") {
  const auto c = kgy::derive_coefficients({1, 1, 1, 0, 0, 0});
  CHECK(c.c4 == 0.0);
  CHECK(c.c5 == -0.5);
  CHECK(c.c6 == 0.25);
  CHECK(c.c7 == 0.0);
  CHECK(c.c8 == 0.0);
  CHECK(c.c9 == 0.25);
  REQUIRE(c.c11.has_value());
  REQUIRE(c.c13.has_value());
}

TEST_CASE("coefficients of the mapped Yukawa problem") {
  const kgy::PotentialParams pp{0.2, 0.1, 0.05};
  const double e = -0.98885705;
  const auto problem = kgy::map_to_nu(pp, {1.0}, {1, 0, 3}, e);
  const auto c = kgy::derive_coefficients(problem);
  const double eps2 = 1.0 - e * e;
  CHECK(c.c4 == 0.0);
  CHECK(c.c5 == -0.5);
  CHECK(c.c8 == doctest::Approx(eps2 / (4 * 0.05 * 0.05)).epsilon(1e-15));
  // c9 is E-independent: Lambda^2 / 4 with Lambda^2 = 1 + 4(S0^2 - V0^2).
  CHECK(c.c9 == doctest::Approx((1.0 + 4 * (0.01 - 0.04)) / 4).epsilon(1e-12));
}

TEST_CASE("c12 guard on a problem with p0 = 1") {
  const auto c = kgy::derive_coefficients({1, 1, 1, 1, 0, 0});
  CHECK(c.c8 == 1.0);
  CHECK(c.c12 == -1.0);
  CHECK_THROWS_AS(kgy::wavefunction_exponents(c), kgy::ConstraintViolation);
}

TEST_CASE("negative discriminants are typed errors") {
  CHECK_THROWS_AS(kgy::derive_coefficients({1, 1, 1, -1, 0, 0}), kgy::NegativeDiscriminant);
  CHECK_THROWS_AS(kgy::derive_coefficients({1, 1, 1, 0, 0, -5}), kgy::NegativeDiscriminant);
  NuCoefficients bad;
  bad.c8 = -0.1;
  CHECK_THROWS_AS(kgy::energy_relation_residual({1, 1, 1, 0, 0, 0}, bad, 0), kgy::NegativeDiscriminant);
  CHECK_THROWS_AS(kgy::derive_coefficients({1, NAN, 1, 0, 0, 0}), kgy::NonFinite);
}

TEST_CASE("c3 = 0 omits c11 and c13") {
  const auto c = kgy::derive_coefficients({1, 1, 0, 0.5, 0.2, 0.3});
  CHECK_FALSE(c.c11.has_value());
  CHECK_FALSE(c.c13.has_value());
  CHECK_THROWS_AS(kgy::wavefunction_exponents(c), kgy::InvalidArgument);
}

TEST_CASE("defining identities hold exactly for random problems") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    NuProblem p{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    NuCoefficients c;
    try {
      c = kgy::derive_coefficients(p);
    } catch (const kgy::NegativeDiscriminant&) {
      continue;
    }
    ++checked;
    CHECK(c.c4 == (1.0 - p.c1) / 2.0);
    CHECK(c.c5 == (p.c2 - 2.0 * p.c3) / 2.0);
    CHECK(c.c6 == c.c5 * c.c5 + p.p2);
    CHECK(c.c7 == 2.0 * c.c4 * c.c5 - p.p1);
    CHECK(c.c8 == c.c4 * c.c4 + p.p0);
    CHECK(c.c9 == p.c3 * (c.c7 + p.c3 * c.c8) + c.c6);
  }
  CHECK(checked > 200);
}

TEST_CASE("energy relation residual") {
  const NuProblem trivial{1, 1, 1, 0, 0, 0};
  CHECK(kgy::energy_relation_residual(trivial, kgy::derive_coefficients(trivial), 0) == 1.0);

  const NuProblem p{0.7, 1.3, 0.9, 2.1, 0.4, 1.6};
  const auto c = kgy::derive_coefficients(p);
  for (int n = 0; n <= 5; ++n) {
    const double ref = reference_residual(p, n);
    CHECK(kgy::energy_relation_residual(p, c, n) == doctest::Approx(ref).epsilon(1e-14).scale(1.0));
  }
  CHECK_THROWS_AS(kgy::energy_relation_residual(p, c, -1), kgy::DomainError);
}

TEST_CASE("residual vanishes at a tabulated energy") {
  const kgy::PotentialParams pp{0.2, 0.2, 0.05};
  const kgy::QuantumNumbers qn{1, 0, 3};
  const auto problem = kgy::map_to_nu(pp, {1.0}, qn, -0.99503719);
  const double r = kgy::energy_relation_residual(problem, kgy::derive_coefficients(problem), qn.n);
  CHECK(std::abs(r) < 1e-6);
}

TEST_CASE("wavefunction exponents") {
  SUBCASE("constraint on c10") {
    NuCoefficients c;
    c.c10 = -1.5;
    c.c11 = 0.5;
    c.c12 = 1.0;
    c.c13 = 1.0;
    try {
      kgy::wavefunction_exponents(c);
      FAIL("expected ConstraintViolation");
    } catch (const kgy::ConstraintViolation& e) {
      CHECK(e.coefficient() == "c10");
      CHECK(e.value() == -1.5);
    }
  }
  SUBCASE("spin-symmetric Yukawa mapping on the decaying branch") {
    const kgy::PotentialParams pp{0.2, 0.2, 0.05};
    for (int d = 3; d <= 6; ++d) {
      const kgy::QuantumNumbers qn{2, 1, d};
      const double e = -0.97;
      const double eps = std::sqrt(1.0 - e * e);
      const auto c = kgy::derive_coefficients(kgy::map_to_nu(pp, {1.0}, qn, e));
      // As derived, both sqrt(c8) terms carry the growing sign.
      CHECK(c.c10 == doctest::Approx(-eps / 0.05));
      CHECK(c.c12 == doctest::Approx(-eps / 0.1));
      CHECK_THROWS_AS(kgy::wavefunction_exponents(c), kgy::ConstraintViolation);

      const auto w = kgy::wavefunction_exponents(c, kgy::ExponentBranch::Decaying);
      CHECK(w.jacobi_alpha == doctest::Approx(eps / 0.05));
      CHECK(w.jacobi_beta == doctest::Approx(d + 2 * qn.l - 2));
      CHECK(w.phi_s == doctest::Approx(eps / 0.1));
      CHECK(w.phi_t == doctest::Approx((1.0 + (d + 2 * qn.l - 2)) / 2.0));
    }
  }
}

TEST_CASE("Laguerre limit of the Jacobi factor") {
  SUBCASE("degree zero") {
    for (double s : {0.0, 0.3, 2.0}) {
      const auto lim = kgy::laguerre_limit_check(0.7, 1.3, 0, s);
      for (const auto& step : lim.sequence) {
        CHECK(step.jacobi_value == 1.0);
        CHECK(step.laguerre_value == 1.0);
      }
    }
  }
  SUBCASE("exponential factor") {
    const double k = 0.8, s = 1.7;
    const auto lim = kgy::laguerre_limit_check(0.0, 1.0, 0, s, k);
    const auto& last = lim.sequence.back();
    CHECK(last.c3 == doctest::Approx(1e-6));
    CHECK(std::abs(last.power_value - std::exp(k * s)) <= 1e-4 * std::exp(k * s));
  }
  SUBCASE("degree two against the explicit Laguerre sum") {
    const double alpha = 1.5, scale = 2.0, s = 0.9;
    const auto lim = kgy::laguerre_limit_check(alpha, scale, 2, s);
    const double ref = laguerre_series(2, alpha, scale * s);
    bool seen = false;
    for (const auto& step : lim.sequence) {
      if (std::abs(step.c3 - 1e-5) < 1e-12) {
        seen = true;
        CHECK(std::abs(step.jacobi_value - ref) <= 1e-3 * std::abs(ref));
      }
    }
    CHECK(seen);
    CHECK(lim.laguerre_value == doctest::Approx(ref).epsilon(1e-12));
    // Error shrinks monotonically as c3 -> 0.
    for (std::size_t i = 1; i < lim.sequence.size(); ++i) {
      CHECK(std::abs(lim.sequence[i].jacobi_value - ref) <=
            std::abs(lim.sequence[i - 1].jacobi_value - ref));
    }
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(kgy::laguerre_limit_check(0.0, 1.0, 7, 0.5), kgy::DomainError);
    CHECK_THROWS_AS(kgy::laguerre_limit_check(0.0, 1.0, 2, 1e7), kgy::DomainError);
  }
}

TEST_CASE("no NaN escapes from the NU path") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 3000; ++trial) {
    NuProblem p{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    try {
      const auto c = kgy::derive_coefficients(p);
      const double r = kgy::energy_relation_residual(p, c, trial % 6);
      CHECK(std::isfinite(r));
      const auto w = kgy::wavefunction_exponents(c, trial % 2 ? kgy::ExponentBranch::Decaying
                                                              : kgy::ExponentBranch::AsDerived);
      CHECK(std::isfinite(w.jacobi_alpha));
      CHECK(w.jacobi_alpha > -1.0);
      CHECK(w.jacobi_beta > -1.0);
      CHECK(w.phi_s > 0.0);
      CHECK(w.phi_t > 0.0);
    } catch (const kgy::Error&) {
      // typed rejection is the only allowed failure
    }
  }
}
