#include <doctest.h>

#include "oracle.hpp"
#include "xxz/chain.hpp"
#include "xxz/errors.hpp"
#include "xxz/mpo.hpp"

using namespace xxz;

TEST_SUITE("chain") {
  TEST_CASE("pauli matrices") {
    for (int a = 0; a < 4; ++a) CHECK((pauli(kPauliBasis[a]) - oracle::sigma(a)).norm() == 0.0);
    CHECK(pauli_symbol(Pauli::Plus) == '+');
  }

  TEST_CASE("anisotropy validation") {
    CHECK_THROWS_AS(Anisotropy(2, 4), InvalidArgument);
    CHECK_THROWS_AS(Anisotropy(1, 1), InvalidArgument);
    const Anisotropy a(2, 5);
    CHECK(a.eta() == doctest::Approx(2 * kPi / 5));
    CHECK(a.delta() == doctest::Approx(std::cos(2 * kPi / 5)));
    CHECK(a.s(1) == doctest::Approx(std::sin(2 * kPi / 5)));
  }

  TEST_CASE("hamiltonians against kronecker oracle") {
    const Anisotropy a(1, 3);
    for (int n : {2, 3, 5}) {
      CAPTURE(n);
      CHECK((build_hamiltonian(a, n, BoundarySpec::open()).matrix() - oracle::xxz(a.delta(), n, false)).norm() < 1e-13);
      CHECK((build_hamiltonian(a, n, BoundarySpec::periodic()).matrix() - oracle::xxz(a.delta(), n, true)).norm() <
            1e-13);
      CHECK((build_hamiltonian(a, n, BoundarySpec::twisted(0.7)).matrix() - oracle::xxz(a.delta(), n, true, 0.7))
                .norm() < 1e-13);
    }
  }

  TEST_CASE("twisted hamiltonian is gauge equivalent to the homogeneous form") {
    const Anisotropy a(1, 3);
    const int n = 5;
    const double flux = 0.9;
    const Operator c = canonical_gauge(n, flux);
    const Operator ht = build_hamiltonian(a, n, BoundarySpec::twisted(flux));
    const Operator hh = homogeneous_twisted_hamiltonian(a, n, flux);
    CHECK(hs_norm(c * ht * c.adjoint() - hh) < 1e-12);
    CHECK(hs_norm(shift(hh) - hh) < 1e-12);
  }

  TEST_CASE("observables") {
    const int n = 4;
    CHECK((spin_current(n).matrix() - oracle::current(n)).norm() < 1e-14);
    CHECK((magnetization(n).matrix() - oracle::mz(n)).norm() < 1e-14);
    CHECK((parity_operator(n).matrix() - oracle::spin_flip(n)).norm() < 1e-14);
    // the current is conserved at the free-fermion point
    const Anisotropy xx(1, 2);
    CHECK(hs_norm(commutator(build_hamiltonian(xx, 6, BoundarySpec::periodic()), spin_current(6))) < 1e-12);
    CHECK(hs_norm(commutator(build_hamiltonian(Anisotropy(1, 3), 6, BoundarySpec::periodic()), spin_current(6))) >
          0.1);
  }

  TEST_CASE("shift and embedding") {
    const Operator z0 = site_pauli(4, 0, Pauli::Z);
    CHECK(hs_norm(shift(z0) - site_pauli(4, 3, Pauli::Z)) < 1e-15);
    CHECK(hs_norm(shift_power(z0, 4) - z0) < 1e-15);
    CHECK(hs_norm(shift_power(shift(z0), -1) - z0) < 1e-15);
    CHECK(hs_norm(shift_sum(z0) - magnetization(4)) < 1e-15);
    CHECK_THROWS_AS(embed(Operator(2), 3, 2), InvalidArgument);
    CHECK_THROWS_AS(Operator(kMaxSites + 1), SizeError);
  }

  TEST_CASE("hilbert-schmidt conventions") {
    const Operator id = Operator::identity(3);
    CHECK(hs_norm(id) == doctest::Approx(1.0));
    CHECK(hs_norm(site_pauli(3, 1, Pauli::Plus)) == doctest::Approx(std::sqrt(0.5)));
    const Operator a = site_pauli(3, 0, Pauli::Plus), b = site_pauli(3, 0, Pauli::Minus);
    CHECK(std::abs(hs_inner(a, b)) < 1e-15);
    CHECK(std::abs(hs_inner(a, a) - 0.5) < 1e-15);
  }
}

TEST_SUITE("mpo") {
  TEST_CASE("contraction matches an explicit product of Pauli strings") {
    // random 3x3 components, n = 4, with a trace and a boundary pair
    std::srand(7);
    PauliComponents c;
    for (auto& x : c) x = Matrix::Random(3, 3);
    const MpoSite site = mpo_site(c);
    const int n = 4;
    std::vector<oracle::Comp> sites(n, {c[0], c[1], c[2], c[3]});
    const oracle::M prod = oracle::chain_product(sites);
    const Matrix id = Matrix::Identity(3, 3);
    CHECK((contract_uniform(site, n, id, id).matrix() - oracle::aux_trace(prod, 3)).norm() < 1e-12);
    Matrix l = Matrix::Zero(1, 3), r = Matrix::Zero(3, 1);
    l(0, 1) = 1.0;
    r(2, 0) = 1.0;
    CHECK((contract_uniform(site, n, l, r).matrix() - oracle::aux_element(prod, 3, 1, 2)).norm() < 1e-12);
  }

  TEST_CASE("shape errors") {
    PauliComponents c;
    for (auto& x : c) x = Matrix::Identity(2, 2);
    CHECK_THROWS_AS(contract_uniform(mpo_site(c), 3, Matrix::Identity(3, 3), Matrix::Identity(3, 3)),
                    InvalidArgument);
  }
}
