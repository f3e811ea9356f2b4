#include <doctest.h>

#include "oracle.hpp"
#include "xxz/charges.hpp"
#include "xxz/densities.hpp"
#include "xxz/errors.hpp"
#include "xxz/transfer.hpp"

using namespace xxz;

TEST_SUITE("densities") {
  TEST_CASE("q_r against the walk oracle") {
    for (auto [l, m] : {std::pair{1, 3}, {2, 5}}) {
      const Anisotropy a(l, m);
      const cplx phi(1.4, -0.25);
      for (int r = 2; r <= 6; ++r) {
        CAPTURE(r);
        CHECK((density_q(a, phi, r).op.matrix() - oracle::q(a.eta(), m, phi, r)).norm() < 1e-12);
      }
    }
    CHECK_THROWS_AS(density_q(Anisotropy(1, 3), 1.5, 1), InvalidArgument);
    CHECK_THROWS_AS(density_q(Anisotropy(1, 3), 1.5, kMaxDensitySupport + 1), SizeError);
  }

  TEST_CASE("twisted q_2 carries the phase") {
    const Anisotropy a(1, 3);
    const LocalDensity q = density_q(a, 1.5, 2, 0.8, 4);
    const oracle::M expect = std::exp(cplx(0, 0.2)) * oracle::kron(oracle::sm(), oracle::sp());
    CHECK((q.op.matrix() - expect).norm() < 1e-15);
  }

  TEST_CASE("remainder against the oracle") {
    const Anisotropy a(1, 4);
    const cplx phi(1.5, 0.3);
    for (int n : {3, 4, 5}) CHECK((remainder_p(a, phi, n).op.matrix() - oracle::p(a.eta(), 4, phi, n)).norm() < 1e-12);
  }

  TEST_CASE("periodic reconstruction") {
    for (auto [l, m] : {std::pair{1, 2}, {1, 3}, {2, 5}}) {
      const Anisotropy a(l, m);
      for (int n : {3, 4, 5, 6}) {
        const cplx phi(1.5, 0.2);
        CAPTURE(n);
        const double scale = hs_norm(build_Y(a, phi, n));
        CHECK(density_sum_residual(a, phi, n) < 1e-10 * scale);
        CHECK(density_sum_residual(a, phi, n, 0.7) < 1e-10 * scale);
      }
    }
    // by hand, from the oracle pieces
    const Anisotropy a(1, 3);
    const cplx phi(1.3, 0.1);
    const int n = 5;
    oracle::M sum = oracle::M::Zero(32, 32);
    for (int r = 2; r <= n; ++r) {
      oracle::M local = oracle::q(a.eta(), 3, phi, r);
      if (r < n) local = oracle::kron(local, oracle::identity(n - r));
      sum += oracle::translate_sum(local, n);
    }
    sum += density_prefactor(a, phi) * oracle::translate_sum(oracle::p(a.eta(), 3, phi, n), n);
    CHECK((sum - oracle::Y(a.eta(), 3, phi, n)).norm() < 1e-10);
  }

  TEST_CASE("the unscaled remainder does not reconstruct Y") {
    const Anisotropy a(1, 3);
    CHECK(density_sum_literal_residual(a, cplx(1.3, 0.1), 5) > 1e-3);
  }

  TEST_CASE("open reconstruction") {
    const Anisotropy a(1, 3);
    for (int n : {2, 3, 4, 6}) CHECK(open_density_residual(a, cplx(1.4, 0.2), n) < 1e-10);
  }
}

TEST_SUITE("charges") {
  TEST_CASE("first charge is the hamiltonian, second is conserved") {
    for (auto [l, m] : {std::pair{1, 3}, {2, 5}}) {
      const Anisotropy a(l, m);
      const int n = 6;
      const ChargeSet c = fundamental_charges(a, n);
      REQUIRE(c.Q.size() == 2);
      CHECK(hamiltonian_span_residual(a, c.Q[0]) < 1e-10);
      const Operator h = build_hamiltonian(a, n, BoundarySpec::periodic());
      CHECK(hs_norm(commutator(h, c.Q[1])) < 1e-9 * hs_norm(c.Q[1]));
      CHECK(hamiltonian_span_residual(a, c.Q[1]) > 1e-3);
      CHECK(c.warning.empty());
    }
  }
}
