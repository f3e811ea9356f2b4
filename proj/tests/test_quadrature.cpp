#include <doctest.h>

#include <cmath>

#include "xxz/errors.hpp"
#include "xxz/quadrature.hpp"

using namespace xxz;

TEST_SUITE("quadrature") {
  TEST_CASE("gauss-legendre is exact to degree 2n-1") {
    std::vector<double> x, w;
    gauss_legendre(6, x, w);
    for (int d = 0; d <= 11; ++d) {
      double s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], d);
      CHECK(s == doctest::Approx(d % 2 ? 0.0 : 2.0 / (d + 1)).epsilon(1e-14));
    }
  }

  TEST_CASE("adaptive rectangle") {
    const auto g = [](double x, double y) { return cplx(std::exp(x) * std::cos(y), x * y); };
    const auto r = integrate_rectangle(g, 0, 1, 0, 2, 1e-12);
    CHECK(std::abs(r.value - cplx((std::exp(1.0) - 1) * std::sin(2.0), 1.0)) < 1e-11);
    // a peaked integrand forces refinement
    const auto peak = [](double x, double y) { return cplx(1.0 / (1e-3 + x * x + y * y), 0); };
    const auto p = integrate_rectangle(peak, 0, 1, 0, 1, 1e-8);
    CHECK(p.cells > 16);
    CHECK_THROWS_AS(integrate_rectangle(peak, 0, 1, 0, 1, 1e-14, 4, 2), AccuracyError);
  }

  TEST_CASE("both backends integrate over the strip with Lebesgue measure") {
    for (int m : {2, 3, 5}) {
      const Anisotropy a(1, m);
      // width pi/m times int exp(-v^2) dv
      const auto g = [](cplx phi) { return cplx(std::exp(-phi.imag() * phi.imag()), 0); };
      const double exact = kPi / m * std::sqrt(kPi);
      for (auto b : {QuadratureBackend::Lens, QuadratureBackend::Strip}) {
        QuadratureOptions o;
        o.tol = 1e-9;
        o.backend = b;
        const auto r = integrate_over_domain(a, g, o);
        CAPTURE(backend_name(b));
        CHECK(std::abs(r.value - exact) < 1e-8);
      }
    }
  }

  TEST_CASE("lens geometry") {
    for (int m : {3, 4, 7}) {
      const auto w = [m](double, double y) { return cplx(2.0 * lens_half_width(m, y), 0); };
      const auto r = integrate_rectangle(w, 0, 1, -1, 1, 1e-10);
      CHECK(r.value.real() == doctest::Approx(lens_area(m)).epsilon(1e-8));
      CHECK(lens_half_width(m, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    }
    const cplx z(0.3, -0.2);
    CHECK(std::abs(1.0 / std::tan(lens_to_phi(z)) - z) < 1e-14);
  }

  TEST_CASE("domain rule reproduces the adaptive result") {
    const Anisotropy a(1, 3);
    const auto g = [](cplx phi) { return 1.0 / std::pow(std::abs(std::sin(phi)), 4); };
    QuadratureOptions o;
    o.tol = 1e-9;
    const auto r = integrate_over_domain(a, g, o);
    const auto rule = domain_rule(a, g, o);
    cplx s = 0;
    for (std::size_t i = 0; i < rule.phi.size(); ++i) s += rule.weight[i] * g(rule.phi[i]);
    CHECK(std::abs(s - r.value) < 1e-8);
  }

  TEST_CASE("backend names") {
    CHECK(parse_backend("strip") == QuadratureBackend::Strip);
    CHECK_THROWS_AS(parse_backend("simpson"), InvalidArgument);
  }
}
