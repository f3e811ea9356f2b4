#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "xxz/densities.hpp"
#include "xxz/errors.hpp"
#include "xxz/quasilocal.hpp"
#include "xxz/transfer.hpp"

using namespace xxz;

namespace {

// 2^-r tr(q_r(phi)^T q_r(phi'))
cplx kappa_dense(const Anisotropy& a, cplx phi, cplx phi2, int r) {
  const oracle::M q1 = oracle::q(a.eta(), a.m(), phi, r), q2 = oracle::q(a.eta(), a.m(), phi2, r);
  return (q1.transpose() * q2).trace() / std::pow(2.0, r);
}

}  // namespace

TEST_SUITE("quasilocality") {
  TEST_CASE("kappa_r from the reduced transfer matrix") {
    for (auto [l, m] : {std::pair{1, 3}, {2, 5}, {1, 4}}) {
      const Anisotropy a(l, m);
      const cplx phi(1.45, 0.3), phi2(1.62, -0.2);
      for (int r = 2; r <= 8; ++r) {
        CAPTURE(r);
        const cplx d = kappa_dense(a, phi, phi2, r);
        CHECK(std::abs(kappa_r(a, phi, phi2, r) - d) <= 1e-10 * std::abs(d));
      }
    }
    const Anisotropy a(1, 3);
    CHECK(std::abs(kappa_r(a, kPi / 2, kPi / 2, 2) - 0.25) < 1e-15);
    CHECK(std::abs(kappa_r(a, kPi / 2, kPi / 2, 3) - 1.0 / 16) < 1e-14);
    CHECK(std::abs(kappa_r(a, kPi / 2, kPi / 2, 4) - 13.0 / 256) < 1e-14);
  }

  TEST_CASE("norms against dense traces") {
    const Anisotropy a(1, 3);
    const cplx phi(1.5, 0.35);
    for (int r = 2; r <= 7; ++r) {
      const double d = std::pow(oracle::hs(oracle::q(a.eta(), 3, phi, r)), 2);
      CHECK(q_norm_sq(a, phi, r) == doctest::Approx(d).epsilon(1e-10));
    }
    for (int n : {2, 3, 5, 7}) {
      CAPTURE(n);
      const double d = std::pow(oracle::hs(oracle::p(a.eta(), 3, phi, n)), 2);
      CHECK(p_norm_sq(a, phi, n) == doctest::Approx(d).epsilon(1e-10));
      const double dt = std::pow(hs_norm(remainder_p(a, phi, n, 0.9).op), 2);
      CHECK(p_norm_sq(a, phi, n, 0.9) == doctest::Approx(dt).epsilon(1e-10));
    }
  }

  TEST_CASE("flux does not change density norms") {
    const Anisotropy a(2, 5);
    const cplx phi(1.5, 0.2);
    for (int r = 2; r <= 6; ++r)
      CHECK(std::abs(hs_norm(density_q(a, phi, r, 1.3, 7).op) - hs_norm(density_q(a, phi, r).op)) < 1e-12);
  }

  TEST_CASE("contraction certificate") {
    const Anisotropy a(1, 3);
    const auto c = contraction_certificate(a, kPi / 2);
    CHECK(c.tau1 == doctest::Approx(0.625).epsilon(1e-13));
    CHECK(c.xi == doctest::Approx(-0.5 * std::log(0.625)).epsilon(1e-12));
    CHECK(c.in_domain);
    CHECK(c.dad_residual < 1e-13);
    CHECK(c.e_max_eig == doctest::Approx(std::cos(kPi / 3)));
    CHECK(c.a_min_eig > 0.0);
    REQUIRE(c.gamma.has_value());
    // certificate constants bound the actual norms
    for (int r = 2; r <= 12; ++r)
      CHECK(std::sqrt(q_norm_sq(a, kPi / 2, r)) <= *c.gamma * std::exp(-c.xi * r) * (1 + 1e-12));
    // outside the strip tau1 exceeds one
    CHECK(contraction_certificate(a, cplx(kPi / 2 + 0.6, 0)).tau1 > 1.0);
  }

  TEST_CASE("domain boundary") {
    for (int m : {3, 4, 5}) {
      const Anisotropy a(1, m);
      CHECK(domain_boundary(a, 0.0) == doctest::Approx(kPi / (2 * m)).epsilon(1e-9));
      CHECK(domain_boundary(a, 0.7) == doctest::Approx(kPi / (2 * m)).epsilon(1e-9));
    }
  }

  TEST_CASE("kernel anchors and alternative forms") {
    CHECK(std::abs(kernel_K(Anisotropy(1, 2), kPi / 2, kPi / 2) - 0.25) < 1e-12);
    CHECK(std::abs(kernel_K(Anisotropy(1, 3), kPi / 2, kPi / 2) - 4.0 / 9) < 1e-12);
    std::mt19937 rng(11);
    for (int m : {3, 4, 5}) {
      const Anisotropy a(1, m);
      std::uniform_real_distribution<double> u(-0.35 * kPi / m, 0.35 * kPi / m), v(-0.5, 0.5);
      for (int i = 0; i < 10; ++i) {
        const cplx p(kPi / 2 + u(rng), v(rng)), q(kPi / 2 + u(rng), v(rng));
        const cplx k = kernel_K(a, p, q);
        CHECK(std::abs(kernel_K_closed(a, p, q) - k) < 1e-10);
        CHECK(std::abs(kernel_K_series(a, p, q, 400) - k) < 1e-10);
        CHECK((psi_solve(a, p, q) - psi_explicit(a, p, q)).norm() < 1e-10);
      }
    }
  }

  TEST_CASE("kernel is the limit of the dense inner products") {
    const Anisotropy a(1, 3);
    const auto rep = inner_product_asymptotics(a, cplx(1.5, 0.1), cplx(1.6, -0.1), {4, 6, 8});
    double prev = 1e9;
    for (const auto& row : rep.rows) {
      const double d = std::abs(row.yy - rep.K);
      CHECK(d < prev);
      prev = d;
      CHECK(std::abs(row.zt) < 1e-10);
    }
  }

  TEST_CASE("pseudolocality bound") {
    const Anisotropy a(1, 3);
    const auto c = contraction_certificate(a, cplx(1.5, 0.2));
    for (int n : {4, 6, 8}) {
      const double y2 = std::pow(hs_norm(build_Y(a, cplx(1.5, 0.2), n)), 2);
      CHECK(y2 <= pseudolocality_bound(c, n));
    }
  }

  TEST_CASE("singular points") {
    CHECK_THROWS_AS(build_T_V(Anisotropy(1, 3), 0.0, 1.0), SingularPoint);
  }
}
