#include <doctest.h>

#include "oracle.hpp"
#include "xxz/errors.hpp"
#include "xxz/lindblad.hpp"

using namespace xxz;

TEST_SUITE("lindblad") {
  TEST_CASE("superoperator agrees with the direct action") {
    const LindbladSetup st{Anisotropy(1, 3), 3, 0.7};
    std::srand(3);
    const Matrix x = Matrix::Random(8, 8);
    const Operator rho(3, x);
    const Matrix l = lindblad_superoperator(st);
    const Vector v = l * x.reshaped();
    CHECK((v.reshaped(8, 8) - lindblad_apply(st, rho).matrix()).norm() < 1e-12);
    // trace preserving: the identity is a left null vector
    const Vector id = Matrix::Identity(8, 8).reshaped();
    CHECK((id.adjoint() * l).norm() < 1e-12);
  }

  TEST_CASE("closed-form steady states") {
    for (auto [l, m] : {std::pair{1, 3}, {2, 5}, {1, 2}}) {
      for (int n : {2, 3, 4}) {
        for (double eps : {0.5, 1.0}) {
          const LindbladSetup st{Anisotropy(l, m), n, eps};
          const auto ns = null_space_steady_state(st);
          CHECK(ns.kernel_dim == 1);
          for (auto c : {SteadyCase::Phi0, SteadyCase::PhiHalfPi}) {
            CAPTURE(case_name(c));
            const auto s = steady_state(st, c);
            CHECK(std::abs(epsilon_from_spin(st.params, c, s.s) - eps) < 1e-12);
            CHECK(s.defining_residual < 1e-9);
            CHECK(s.fixed_point_residual < 1e-9);
            CHECK(s.diagonal_deviation < 1e-12);
            CHECK(s.lower_part == 0.0);
            CHECK(fidelity(s.rho, ns.rho) > 1 - 1e-10);
            CHECK(std::abs(s.rho.matrix().trace() - 1.0) < 1e-13);
          }
        }
      }
    }
  }

  TEST_CASE("case (ii) needs imaginary spin") {
    const auto s = solve_spin_for_epsilon(Anisotropy(1, 3), SteadyCase::PhiHalfPi, 0.8);
    CHECK(std::abs(s.real()) < 1e-15);
    CHECK(s.imag() > 0);
  }

  TEST_CASE("degenerate matching condition") {
    // eps = 2 sin(eta) at eta = pi/2 asks for tan(eta s) = i
    CHECK_THROWS_AS(solve_spin_for_epsilon(Anisotropy(1, 2), SteadyCase::PhiHalfPi, 2.0), SingularPoint);
    CHECK_THROWS_AS(null_space_steady_state({Anisotropy(1, 3), 5, 1.0}), SizeError);
    CHECK_THROWS_AS(steady_state({Anisotropy(1, 3), 3, -1.0}, SteadyCase::Phi0), InvalidArgument);
  }

  TEST_CASE("fidelity") {
    const Operator a(1, oracle::mat2(0.7, 0, 0, 0.3));
    const Operator b(1, oracle::mat2(0.5, 0, 0, 0.5));
    CHECK(fidelity(a, a) == doctest::Approx(1.0));
    CHECK(fidelity(a, b) == doctest::Approx(std::pow(std::sqrt(0.35) + std::sqrt(0.15), 2)));
  }
}
