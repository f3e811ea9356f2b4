#include "xxz/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "xxz/errors.hpp"
#include "xxz/transfer.hpp"

namespace xxz {

namespace {

constexpr cplx kI{0.0, 1.0};

void validate(const LindbladSetup& s) {
  require_sites(s.n, 2);
  if (!(s.epsilon >= 0.0)) throw InvalidArgument("lindblad: epsilon must be non-negative");
}

std::array<Operator, 2> jumps(int n) {
  return {site_pauli(n, 0, Pauli::Plus), site_pauli(n, n - 1, Pauli::Minus)};
}

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

std::string_view case_name(SteadyCase c) { return c == SteadyCase::Phi0 ? "phi0" : "phiHalfPi"; }

Operator lindblad_apply(const LindbladSetup& setup, const Operator& rho) {
  validate(setup);
  if (rho.sites() != setup.n) throw InvalidArgument("lindblad_apply: rho does not match the chain length");
  const Operator h = build_hamiltonian(setup.params, setup.n, BoundarySpec::open());
  Operator out = -kI * commutator(h, rho);
  for (const Operator& a : jumps(setup.n)) {
    const Operator ad = a.adjoint();
    const Operator ada = ad * a;
    out += setup.epsilon * (2.0 * (a * rho * ad) - anticommutator(ada, rho));
  }
  return out;
}

Matrix lindblad_superoperator(const LindbladSetup& setup) {
  validate(setup);
  const Matrix h = build_hamiltonian(setup.params, setup.n, BoundarySpec::open()).matrix();
  const Eigen::Index d = h.rows();
  const Matrix id = Matrix::Identity(d, d);
  Matrix l = -kI * (Matrix(Eigen::kroneckerProduct(id, h)) - Matrix(Eigen::kroneckerProduct(h.transpose(), id)));
  for (const Operator& a : jumps(setup.n)) {
    const Matrix& am = a.matrix();
    const Matrix ada = am.adjoint() * am;
    l += setup.epsilon * (2.0 * Matrix(Eigen::kroneckerProduct(am.conjugate(), am)) -
                          Matrix(Eigen::kroneckerProduct(id, ada)) -
                          Matrix(Eigen::kroneckerProduct(ada.transpose(), id)));
  }
  return l;
}

cplx solve_spin_for_epsilon(const Anisotropy& a, SteadyCase c, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidArgument("solve_spin_for_epsilon: epsilon must be positive");
  const double se = std::sin(a.eta());
  const cplx t = c == SteadyCase::PhiHalfPi ? kI * epsilon / (2.0 * se) : 2.0 * kI * se / epsilon;
  if (std::abs(std::abs(t) - 1.0) < 1e-12) throw SingularPoint("solve_spin_for_epsilon: tan(eta s) = +-i has no solution");
  return std::atan(t) / a.eta();
}

cplx epsilon_from_spin(const Anisotropy& a, SteadyCase c, cplx s) {
  const double se = std::sin(a.eta());
  const cplx t = std::tan(a.eta() * s);
  // tan = i eps / (2 sin eta), or tan = 2 i sin eta / eps
  return c == SteadyCase::PhiHalfPi ? -kI * 2.0 * se * t : 2.0 * kI * se / t;
}

SteadyStateFactor steady_state(const LindbladSetup& setup, SteadyCase c) {
  validate(setup);
  if (setup.n > 8) throw SizeError("steady_state: n must be <= 8");
  const Anisotropy& a = setup.params;
  const int n = setup.n;
  const cplx s = solve_spin_for_epsilon(a, c, setup.epsilon);

  const auto factor = [&](int len) {
    if (c == SteadyCase::PhiHalfPi) {
      const cplx norm = std::pow(std::cos(a.eta() * s), len);
      if (std::abs(norm) < 1e-300) throw SingularPoint("steady_state: cos(eta s)^n vanishes");
      return build_W(a, kPi / 2, s, len).transpose() * (1.0 / norm);
    }
    const cplx norm = std::pow(std::sin(a.eta() * s), len);
    if (std::abs(norm) < 1e-300) throw SingularPoint("steady_state: sin(eta s)^n vanishes");
    return (build_W(a, 0.0, s, len).transpose() * uniform_product(len, pauli(Pauli::Z))) * (1.0 / norm);
  };

  SteadyStateFactor out{c, s, factor(n), Operator(n), 0.0, 0.0, 0.0, 0.0};
  const Operator ss = out.S * out.S.adjoint();
  out.rho = ss * (1.0 / ss.matrix().trace());

  const Operator h = build_hamiltonian(a, n, BoundarySpec::open());
  const Operator s1 = factor(n - 1);
  const Operator sz(1, pauli(Pauli::Z));
  const Operator rhs = tensor(sz, s1) - tensor(s1, sz);
  out.defining_residual = hs_norm(commutator(h, out.S) + kI * setup.epsilon * rhs);
  out.fixed_point_residual = hs_norm(lindblad_apply(setup, out.rho));

  const Matrix& sm = out.S.matrix();
  for (Eigen::Index j = 0; j < sm.rows(); ++j) {
    out.diagonal_deviation = std::max(out.diagonal_deviation, std::abs(sm(j, j) - 1.0));
    for (Eigen::Index k = 0; k < j; ++k) out.lower_part = std::max(out.lower_part, std::abs(sm(j, k)));
  }
  return out;
}

NullSpaceSolution null_space_steady_state(const LindbladSetup& setup, double rel_cutoff) {
  validate(setup);
  if (setup.n > 4) throw SizeError("null_space_steady_state: n must be <= 4");
  const Matrix l = lindblad_superoperator(setup);
  Eigen::JacobiSVD<Matrix> svd(l, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();  // descending
  const Eigen::Index k = sv.size();
  NullSpaceSolution out{Operator(setup.n), 0, {}};
  for (Eigen::Index i = k - 1; i >= std::max<Eigen::Index>(0, k - 4); --i) out.smallest_singular_values.push_back(sv(i));
  for (Eigen::Index i = 0; i < k; ++i)
    if (sv(i) <= rel_cutoff * sv(0)) ++out.kernel_dim;

  const Vector v = svd.matrixV().col(k - 1);
  const Eigen::Index d = Eigen::Index{1} << setup.n;
  Matrix rho = v.reshaped(d, d);
  rho = 0.5 * (rho + rho.adjoint().eval());
  const cplx tr = rho.trace();
  if (std::abs(tr) < 1e-300) throw SingularPoint("null_space_steady_state: kernel vector is traceless");
  out.rho = Operator(setup.n, rho / tr);
  return out;
}

double fidelity(const Operator& rho, const Operator& sigma) {
  require_same_sites(rho, sigma, "fidelity");
  const Matrix sr = psd_sqrt(rho.matrix());
  const Matrix inner = sr * sigma.matrix() * sr;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
  const double t = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return t * t;
}

}  // namespace xxz
