#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <vector>

#include "gdec/quadrature.hpp"

using namespace gdec;

namespace {

// Antiderivative of y^5 cos y at x (vanishes at 0 up to the -120 constant).
double quintic_cos_integral(double x) {
  const double x2 = x * x, x4 = x2 * x2;
  return (5.0 * x4 - 60.0 * x2 + 120.0) * std::cos(x) +
         x * (x4 - 20.0 * x2 + 120.0) * std::sin(x) - 120.0;
}

}  // namespace

TEST_CASE("1d quadrature reproduces the oscillatory reference integral") {
  const auto f = [](double y) { return std::pow(y, 5) * std::cos(y); };
  const QuadratureResult q = integrate_1d(f, 0.0, std::numbers::pi, 1e-12, 1.0);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(-134.86919110465067).epsilon(1e-10));
  CHECK(q.value == doctest::Approx(quintic_cos_integral(std::numbers::pi))
                       .epsilon(1e-10));
}

TEST_CASE("1d quadrature basics") {
  const auto poly = [](double y) { return std::pow(y, 5); };
  CHECK(integrate_1d(poly, 0.0, 1.0, 1e-12).value ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-14));

  // reversed limits negate
  const QuadratureResult fwd = integrate_1d(poly, 0.0, 1.0, 1e-12);
  const QuadratureResult rev = integrate_1d(poly, 1.0, 0.0, 1e-12);
  CHECK(fwd.value == -rev.value);

  CHECK(integrate_1d(poly, 2.0, 2.0, 1e-12).value == 0.0);
  CHECK_THROWS_AS(integrate_1d(poly, 0.0, 1.0, 1e-14), std::domain_error);
}

TEST_CASE("2d quadrature basics") {
  const auto one = [](double, double) { return 1.0; };
  CHECK(integrate_2d(one, {0, 1, 0, 1}, 1e-10).value ==
        doctest::Approx(1.0).epsilon(1e-13));

  const auto sep = [](double t, double tp) { return t * tp; };
  CHECK(integrate_2d(sep, {0, 1, 0, 1}, 1e-10).value ==
        doctest::Approx(0.25).epsilon(1e-13));

  // piecewise sum over a split domain equals the whole
  const std::vector<Rect> parts{{0, 0.5, 0, 1}, {0.5, 1, 0, 1}};
  const QuadratureResult split = integrate_2d_piecewise(sep, parts, 1e-10);
  CHECK(split.value == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS_AS(integrate_2d(one, {1, 0, 0, 1}, 1e-10), std::domain_error);
}

TEST_CASE("bracketed bisection") {
  CHECK(find_root_bracketed([](double x) { return x - 2.0; }, 0.0, 10.0,
                            1e-12) == doctest::Approx(2.0).epsilon(1e-11));
  CHECK(find_root_bracketed([](double x) { return std::sin(x); }, 3.0, 4.0,
                            1e-13) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK_THROWS_AS(find_root_bracketed([](double x) { return x * x + 1.0; },
                                      -1.0, 1.0, 1e-12),
                  std::invalid_argument);
}

TEST_CASE("error estimates are conservative on a known-form suite") {
  struct Case {
    std::function<double(double)> f;
    double a, b, exact;
    double max_freq;
  };
  const std::vector<Case> suite = {
      {[](double y) { return std::sin(y); }, 0.0, std::numbers::pi, 2.0, 1.0},
      {[](double y) { return std::cos(3.0 * y); }, 0.0, 2.0,
       std::sin(6.0) / 3.0, 3.0},
      {[](double y) { return std::exp(-y); }, 0.0, 10.0, 1.0 - std::exp(-10.0),
       0.0},
      {[](double y) { return y * y * y; }, -1.0, 2.0, 15.0 / 4.0, 0.0},
      {[](double y) { return 1.0 / (1.0 + y * y); }, -4.0, 4.0,
       2.0 * std::atan(4.0), 0.0},
      {[](double y) { return std::sqrt(std::abs(y)) * y; }, 0.0, 1.0, 0.4,
       0.0},
      {[](double y) { return std::pow(y, 5) * std::cos(y); }, 0.0, 7.0,
       quintic_cos_integral(7.0), 1.0},
      {[](double y) { return std::exp(-y * y / 2.0); }, -8.0, 8.0,
       std::sqrt(2.0 * std::numbers::pi), 0.0},
      {[](double y) { return std::log(1.0 + y); }, 0.0, 3.0,
       4.0 * std::log(4.0) - 3.0, 0.0},
      {[](double y) { return std::sin(y) / (1.0 + 0.5 * std::cos(y)); }, 0.0,
       std::numbers::pi, 2.0 * std::log(3.0), 1.0},
  };

  for (double tol : {1e-6, 1e-8, 1e-10}) {
    for (const Case& c : suite) {
      const QuadratureResult q = integrate_1d(c.f, c.a, c.b, tol, c.max_freq);
      const double true_err = std::abs(q.value - c.exact);
      CHECK(q.converged);
      // conservative: true error within 10x of the reported estimate
      CHECK(true_err <= 10.0 * q.abs_error_estimate + 1e-15);
    }
  }
}

TEST_CASE("tightening the tolerance never worsens the known-form suite") {
  struct Case {
    std::function<double(double)> f;
    double a, b, exact, max_freq;
  };
  const std::vector<Case> suite = {
      {[](double y) { return std::pow(y, 5) * std::cos(y); }, 0.0, 9.0,
       quintic_cos_integral(9.0), 1.0},
      {[](double y) { return std::sin(y); }, 0.0, std::numbers::pi, 2.0, 1.0},
      {[](double y) { return std::exp(-y); }, 0.0, 10.0, 1.0 - std::exp(-10.0),
       0.0},
      {[](double y) { return 1.0 / (1.0 + y * y); }, -4.0, 4.0,
       2.0 * std::atan(4.0), 0.0},
      {[](double y) { return std::exp(-y * y / 2.0); }, -8.0, 8.0,
       std::sqrt(2.0 * std::numbers::pi), 0.0},
  };
  for (const Case& c : suite) {
    double prev_err = 1e300;
    for (double tol : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10}) {
      const QuadratureResult q = integrate_1d(c.f, c.a, c.b, tol, c.max_freq);
      const double err = std::abs(q.value - c.exact);
      // refining by 10x never increases the true error (up to roundoff)
      CHECK(err <= prev_err + 1e-13);
      prev_err = err;
    }
  }
}

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
  for (int n : {1, 2, 3, 5, 8, 16}) {
    const std::vector<GaussNode> nodes = gauss_legendre(n);
    REQUIRE(static_cast<int>(nodes.size()) == n);
    double wsum = 0.0;
    for (const GaussNode& g : nodes) wsum += g.w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    // exactness for degree 2n-1
    const int deg = 2 * n - 1;
    double val = 0.0;
    for (const GaussNode& g : nodes) val += g.w * std::pow(g.x, deg);
    CHECK(std::abs(val) <= 1e-13);  // odd power integrates to zero
    if (n >= 2) {
      double val2 = 0.0;
      for (const GaussNode& g : nodes) val2 += g.w * g.x * g.x;
      CHECK(val2 == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::domain_error);
}
