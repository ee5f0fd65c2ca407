#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "mexneedlet/error.hpp"
#include "mexneedlet/spectral_core.hpp"

using namespace mexneedlet;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int binomial(int n, int k) {
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// P_l(x) = 2^-l sum_k (-1)^k C(l,k) C(2l-2k,l) x^{l-2k}, evaluated in exact rationals.
double legendre_exact(int l, const cpp_rational& x) {
  cpp_rational sum = 0;
  for (int k = 0; 2 * k <= l; ++k) {
    cpp_rational term = cpp_rational(binomial(l, k) * binomial(2 * l - 2 * k, l));
    for (int p = 0; p < l - 2 * k; ++p) term *= x;
    sum += (k % 2 == 0) ? term : cpp_rational(-term);
  }
  sum /= cpp_rational(cpp_int(1) << l);
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("filter_eval closed forms", "[spectral_core][filter]") {
  const auto m1 = SpectralFilter::mexican(1);
  const auto bump = SpectralFilter::cutoff_bump();
  CHECK(filter_eval(m1, 0.0) == 0.0);
  CHECK_THAT(filter_eval(m1, 1.0), WithinRel(std::exp(-1.0), 1e-15));
  CHECK_THAT(filter_eval(m1, 1.0), WithinAbs(0.367879, 1e-6));
  CHECK(filter_eval(bump, 0.5) == 0.0);
  CHECK(filter_eval(bump, 2.0) == 0.0);
  CHECK(filter_eval(bump, 0.1) == 0.0);
  CHECK(filter_eval(bump, 3.0) == 0.0);
  CHECK_THAT(filter_eval(bump, 1.25), WithinRel(std::exp(-16.0 / 9.0), 1e-14));
  CHECK_THROWS_AS(filter_eval(m1, -1.0), ParameterError);

  SECTION("mexican(r) is s^r e^-s") {
    for (int r : {1, 2, 3, 5}) {
      const auto f = SpectralFilter::mexican(r);
      for (double s : {0.01, 0.5, 1.0, 3.7, 20.0}) {
        CHECK_THAT(f(s), WithinRel(std::pow(s, r) * std::exp(-s), 1e-13));
      }
    }
  }
  SECTION("cutoff kinds vanish outside [1/2, 2]") {
    const auto g = SpectralFilter::normalized_cutoff();
    for (double s : {0.0, 0.2, 0.4999, 2.0001, 5.0, 100.0}) {
      CHECK(bump(s) == 0.0);
      CHECK(g(s) == 0.0);
    }
  }
  SECTION("rapid decay: s^J f(s) stays bounded on a grid") {
    const auto f = SpectralFilter::mexican(1);
    for (int J = 1; J <= 4; ++J) {
      const double bound = std::pow(J + 1.0, J + 1.0) * std::exp(-(J + 1.0));
      for (double s = 0.01; s < 200.0; s *= 1.1) CHECK(std::pow(s, J) * f(s) <= bound * (1 + 1e-12));
    }
  }
}

TEST_CASE("filter parsing and metadata", "[spectral_core][filter]") {
  CHECK(SpectralFilter::parse("mexican:r=1") == SpectralFilter::mexican(1));
  CHECK(SpectralFilter::parse("mexican:r=3").mexican_order() == 3);
  CHECK(SpectralFilter::parse("cutoff") == SpectralFilter::cutoff_bump());
  CHECK(SpectralFilter::parse("normalized_cutoff") == SpectralFilter::normalized_cutoff());
  CHECK(SpectralFilter::mexican(2).name() == "mexican:r=2");
  CHECK(SpectralFilter::mexican(2).vanishing_order() == 2);
  CHECK_THROWS_AS(SpectralFilter::parse("gabor"), ParameterError);
  CHECK_THROWS_AS(SpectralFilter::parse("mexican:r=x"), ParameterError);
}

TEST_CASE("calderon_constant", "[spectral_core][calderon]") {
  CHECK_THAT(calderon_constant(SpectralFilter::mexican(1)), WithinAbs(0.25, 1e-12));
  CHECK_THAT(calderon_constant(SpectralFilter::mexican(2)), WithinRel(0.375, 1e-10));
  for (int r : {1, 2, 3}) {
    const double closed = boost::math::tgamma(2.0 * r) / std::pow(2.0, 2 * r);
    CHECK_THAT(calderon_constant(SpectralFilter::mexican(r)), WithinRel(closed, 1e-10));
  }
  const double c_bump = calderon_constant(SpectralFilter::cutoff_bump());
  CHECK(c_bump > 0.0);
  CHECK(std::isfinite(c_bump));
  CHECK_THROWS_AS(calderon_constant(SpectralFilter::mexican(0)), DivergenceError);
}

TEST_CASE("daubechies_sum", "[spectral_core][daubechies]") {
  const auto m1 = SpectralFilter::mexican(1);
  // Direct summation oracle, j in [-60, 10] at 40 digits.
  CHECK_THAT(daubechies_sum(m1, 2.0, 1.0), WithinRel(0.18231088965813350, 1e-13));

  SECTION("periodicity g(a^2 lambda) = g(lambda)") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(std::log(1e-4), std::log(1e4));
    for (double a : {std::cbrt(2.0), 2.0, 1.7}) {
      for (int i = 0; i < 100; ++i) {
        const double lam = std::exp(u(rng));
        CHECK_THAT(daubechies_sum(m1, a, a * a * lam), WithinRel(daubechies_sum(m1, a, lam), 1e-12));
      }
    }
  }
  SECTION("near the Calderon level for a = 2^(1/3)") {
    const double a = std::cbrt(2.0);
    const double ref = 0.25 / (2.0 * std::log(a));
    for (double lam : {0.01, 0.3, 1.0, 7.0, 1e3}) {
      CHECK_THAT(daubechies_sum(m1, a, lam), WithinRel(ref, 1e-4));
    }
  }
}

TEST_CASE("truncated_daubechies_sum", "[spectral_core][daubechies]") {
  const auto m1 = SpectralFilter::mexican(1);
  CHECK_THAT(truncated_daubechies_sum(m1, 2.0, 1.7, 0, 0), WithinRel(std::pow(m1(1.7), 2), 1e-15));
  const double full = daubechies_sum(m1, 2.0, 1.0);
  // The lower tail sum_{j <= -6} |f(4^j)|^2 = 6.354872909653e-8 is not below 1e-10.
  CHECK_THAT(full - truncated_daubechies_sum(m1, 2.0, 1.0, 5, 5), WithinRel(6.354872909653e-8, 1e-6));
  CHECK_THAT(truncated_daubechies_sum(m1, 2.0, 1.0, 9, 5), WithinAbs(full, 1e-10));
  CHECK_THAT(truncated_daubechies_sum(m1, 2.0, 1.0, 60, 60), WithinRel(full, 1e-14));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    const double lam = std::exp(u(rng));
    const int M = static_cast<int>(rng() % 20);
    const int N = static_cast<int>(rng() % 20);
    CHECK(truncated_daubechies_sum(m1, 1.3, lam, M, N) <= daubechies_sum(m1, 1.3, lam) * (1 + 1e-14));
  }
  CHECK_THROWS_AS(truncated_daubechies_sum(m1, 2.0, 1.0, -1, 0), ParameterError);
}

TEST_CASE("daubechies_bounds", "[spectral_core][daubechies]") {
  const auto m1 = SpectralFilter::mexican(1);
  const DaubechiesBounds b3 = daubechies_bounds(m1, std::cbrt(2.0));
  CHECK(std::abs(b3.ratio - 1.0) < 5e-5);
  CHECK(b3.lower <= b3.reference_level);
  CHECK(b3.reference_level <= b3.upper);
  CHECK(b3.ratio >= 1.0);

  const DaubechiesBounds b6 = daubechies_bounds(m1, std::pow(2.0, 1.0 / 6.0));
  const DaubechiesBounds b1 = daubechies_bounds(m1, 2.0);
  CHECK(b6.ratio < b3.ratio);
  CHECK(b3.ratio < b1.ratio);
  CHECK_THAT(b1.ratio, WithinRel(1.0835, 1e-3));

  SECTION("normalized cutoff is an exact partition of unity") {
    const DaubechiesBounds n = daubechies_bounds(SpectralFilter::normalized_cutoff(), 2.0);
    CHECK_THAT(n.lower, WithinAbs(1.0, 1e-10));
    CHECK_THAT(n.upper, WithinAbs(1.0, 1e-10));
    CHECK_THAT(n.reference_level, WithinAbs(1.0, 1e-10));
  }
  SECTION("A <= g <= B on random lambda") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(std::log(1e-3), std::log(1e3));
    for (const DaubechiesBounds& db : {b3, b6}) {
      for (int i = 0; i < 1000; ++i) {
        const double g = daubechies_sum(m1, db.a, std::exp(u(rng)));
        CHECK(g >= db.lower * (1 - 1e-12));
        CHECK(g <= db.upper * (1 + 1e-12));
      }
    }
  }
  CHECK_THROWS_AS(daubechies_bounds(m1, 1.0), ParameterError);
  CHECK_THROWS_AS(daubechies_bounds(m1, 2.0, 32), ParameterError);
}

TEST_CASE("sphere eigendata", "[spectral_core][sphere]") {
  STATIC_REQUIRE(sphere_eigenvalue(0) == 0.0);
  STATIC_REQUIRE(sphere_multiplicity(0) == 1);
  STATIC_REQUIRE(sphere_eigenvalue(1) == 2.0);
  STATIC_REQUIRE(sphere_multiplicity(1) == 3);
  STATIC_REQUIRE(sphere_eigenvalue(10) == 110.0);
  STATIC_REQUIRE(sphere_multiplicity(10) == 21);
}

TEST_CASE("legendre_eval", "[spectral_core][legendre]") {
  for (double x : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
    CHECK(legendre_eval(0, x) == 1.0);
    CHECK(legendre_eval(1, x) == x);
  }
  for (int l = 0; l <= 200; ++l) CHECK_THAT(legendre_eval(l, 1.0), WithinAbs(1.0, 1e-14));
  CHECK_THAT(legendre_eval(2, 0.5), WithinAbs(-0.125, 1e-16));
  CHECK_THAT(legendre_eval(20, 0.3), WithinAbs(legendre_exact(20, cpp_rational(3, 10)), 1e-12));

  SECTION("recurrence against exact coefficients for l <= 20") {
    for (int l = 0; l <= 20; ++l) {
      for (int num = -10; num <= 10; ++num) {
        const cpp_rational x(num, 10);
        CHECK_THAT(legendre_eval(l, num / 10.0), WithinAbs(legendre_exact(l, x), 1e-12));
      }
    }
  }
  SECTION("table agrees with single evaluations") {
    std::vector<double> p(41);
    legendre_table(40, 0.42, p);
    for (int l = 0; l <= 40; ++l) CHECK(p[static_cast<std::size_t>(l)] == legendre_eval(l, 0.42));
  }
  CHECK_THROWS_AS(legendre_eval(3, 1.5), ParameterError);
}
