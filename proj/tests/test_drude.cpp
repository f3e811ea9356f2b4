#include <doctest.h>

#include "xxz/drude.hpp"
#include "xxz/errors.hpp"
#include "xxz/quasilocal.hpp"
#include "xxz/time_average.hpp"
#include "xxz/transfer.hpp"

using namespace xxz;

TEST_SUITE("drude") {
  TEST_CASE("closed-form D_K") {
    CHECK(drude_bound_DK(Anisotropy(1, 2)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(drude_bound_DK(Anisotropy(1, 3)) == doctest::Approx(1 - 3 * std::sqrt(3.0) / (4 * kPi)).epsilon(1e-14));
    CHECK(drude_bound_DK(Anisotropy(1, 4)) == doctest::Approx(1 - 2 / kPi).epsilon(1e-14));
    double prev = 2;
    for (int m = 2; m <= 12; ++m) {
      const double d = drude_bound_DK(Anisotropy(1, m));
      CHECK(d < prev);
      prev = d;
    }
  }

  TEST_CASE("current weight is confined to the strip") {
    const Anisotropy a(1, 3);
    CHECK_NOTHROW(current_weight_f(a, kPi / 2));
    CHECK_THROWS_AS(current_weight_f(a, kPi / 2 + 0.6), InvalidArgument);
  }

  TEST_CASE("monomial integrals: closed form equals quadrature") {
    for (int m : {3, 5}) {
      const Anisotropy a(1, m);
      for (auto b : {QuadratureBackend::Lens, QuadratureBackend::Strip}) {
        QuadratureOptions o;
        o.backend = b;
        for (int k = 0; k <= 3; ++k) {
          CAPTURE(k);
          CHECK(std::abs(monomial_integral_quadrature(a, k, o).value - monomial_integral_closed(a, k)) < 1e-6);
        }
      }
      // the printed normalization differs by a fixed factor
      const double factor = -std::pow(std::sin(kPi / m), 2) / (2 * a.s(1) * a.s(1));
      for (int k = 0; k <= 3; ++k)
        CHECK(std::abs(monomial_integral_closed(a, k) * factor -
                       monomial_integral_closed(a, k, IkNormalization::Printed)) < 1e-13);
    }
    CHECK(std::abs(monomial_integral_closed(Anisotropy(1, 2), 0) - cplx(0, -2)) < 1e-13);
  }

  TEST_CASE("fredholm equation for the current weight") {
    const Anisotropy a(1, 3);
    const auto f = [&](cplx p) { return current_weight_f(a, p); };
    QuadratureOptions o;
    o.tol = 1e-6;
    const auto rep = fredholm_residual(a, f, current_coefficient(), {cplx(kPi / 2, 0), cplx(1.7, 0.4)}, o);
    CHECK(rep.max_residual < 1e-5);
  }

  TEST_CASE("mazur functional saturates at the current weight") {
    const Anisotropy a(1, 2);
    const auto f = [&](cplx p) { return current_weight_f(a, p); };
    QuadratureOptions o;
    o.tol = 1e-5;
    const auto mf = mazur_bound_functional(a, f, current_coefficient(), o);
    CHECK(std::abs(mf.value - drude_bound_DK(a) / 4) < 1e-5);
    // the maximum along t f sits at t = 1
    CHECK(mf.scaled(0.9) < mf.value);
    CHECK(mf.scaled(1.1) < mf.value);
    CHECK(mf.linear == doctest::Approx(2 * mf.value).epsilon(1e-6));
  }

  TEST_CASE("finite-n projection") {
    const Anisotropy a(1, 3);
    const int n = 6;
    const auto grid = mazur_grid(a, 1);
    CHECK(grid.size() == 9);
    // nested levels
    const auto fine = mazur_grid(a, 2);
    for (cplx p : grid) CHECK(std::find(fine.begin(), fine.end(), p) != fine.end());
    // an element of the span projects onto itself
    const Operator y = parity_split(build_Y(a, grid[4], n)).minus;
    const auto self = finite_n_mazur(a, n, grid, y);
    CHECK(self.odd_family);
    CHECK(self.bound == doctest::Approx(std::pow(hs_norm(y), 2) / (2 * n)).epsilon(1e-9));
    // even observables are orthogonal to the odd family
    const Operator h = build_hamiltonian(a, n, BoundarySpec::periodic());
    CHECK(finite_n_mazur(a, n, grid, h, -1).bound < 1e-20);
    // Suzuki: projection never exceeds the time average
    const auto j = finite_n_mazur(a, n, grid, spin_current(n));
    CHECK(j.bound <= time_average(h, spin_current(n)).susceptibility + 1e-9);
    CHECK(j.bound > 0.05);
  }

  TEST_CASE("finite-size current coefficient") {
    const Anisotropy a(1, 3);
    double prev = 1;
    for (int n : {6, 8, 10}) {
      const cplx c = finite_current_coefficient(a, kPi / 2, n);
      CHECK(std::abs(c.real()) < 1e-12);
      const double d = std::abs(c - cplx(0, 0.25));
      CHECK(d < prev);
      prev = d;
    }
  }
}
