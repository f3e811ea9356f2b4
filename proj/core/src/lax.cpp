#include "xxz/lax.hpp"

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "xxz/errors.hpp"
#include "xxz/qgroup.hpp"
#include "xxz/transfer.hpp"

namespace xxz {

namespace {

// f(eta Sz) evaluated on the diagonal
template <class F>
Matrix diag_of(const VermaRep& rep, F f) {
  Matrix out = Matrix::Zero(rep.dim(), rep.dim());
  const double eta = rep.params.eta();
  for (int k = 0; k < rep.dim(); ++k) out(k, k) = f(eta * rep.Sz(k, k));
  return out;
}

PauliComponents zeros(int d) {
  PauliComponents c;
  for (auto& x : c) x = Matrix::Zero(d, d);
  return c;
}

void require_regular(cplx phi) {
  if (std::abs(std::sin(phi)) < 1e-14) {
    throw SingularPoint("spectral parameter on pi*Z: csc(phi) diverges");
  }
}

}  // namespace

Matrix assemble_block(const PauliComponents& c) {
  const Eigen::Index d = c[0].rows();
  Matrix out = Matrix::Zero(2 * d, 2 * d);
  for (Pauli alpha : kPauliBasis) {
    const Matrix p = pauli(alpha);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (p(i, j) != 0.0)
          for (Eigen::Index x = 0; x < d; ++x)
            for (Eigen::Index y = 0; y < d; ++y) out(2 * x + i, 2 * y + j) += p(i, j) * at(c, alpha)(x, y);
  }
  return out;
}

LaxFamily build_lax(const Anisotropy& a, cplx phi, cplx s) {
  const VermaRep rep = build_verma(a, s);
  const double se = std::sin(a.eta());
  LaxFamily lf{a, phi, s, {}};
  at(lf.L, Pauli::Id) = std::sin(phi) * diag_of(rep, [](cplx x) { return std::cos(x); });
  at(lf.L, Pauli::Z) = std::cos(phi) * diag_of(rep, [](cplx x) { return std::sin(x); });
  at(lf.L, Pauli::Plus) = se * rep.Sminus;
  at(lf.L, Pauli::Minus) = se * rep.Splus;
  return lf;
}

PauliComponents lax_dphi(const Anisotropy& a, cplx phi, cplx s) {
  const VermaRep rep = build_verma(a, s);
  PauliComponents c = zeros(a.m());
  at(c, Pauli::Id) = std::cos(phi) * diag_of(rep, [](cplx x) { return std::cos(x); });
  at(c, Pauli::Z) = -std::sin(phi) * diag_of(rep, [](cplx x) { return std::sin(x); });
  return c;
}

PauliComponents lax_dphi2(const Anisotropy& a, cplx phi, cplx s) {
  PauliComponents c = build_lax(a, phi, s).L;
  at(c, Pauli::Id) *= -1.0;
  at(c, Pauli::Z) *= -1.0;
  at(c, Pauli::Plus).setZero();
  at(c, Pauli::Minus).setZero();
  return c;
}

PauliComponents lax_ds(const Anisotropy& a, cplx phi, cplx s) {
  const VermaRep rep = build_verma(a, s);
  const double eta = a.eta();
  PauliComponents c = zeros(a.m());
  at(c, Pauli::Id) = -eta * std::sin(phi) * diag_of(rep, [](cplx x) { return std::sin(x); });
  at(c, Pauli::Z) = eta * std::cos(phi) * diag_of(rep, [](cplx x) { return std::cos(x); });
  // d/ds of sin(eta) S^-(k+1,k) = sin((2s-k) eta)
  for (int k = 0; k + 1 < a.m(); ++k) {
    at(c, Pauli::Plus)(k + 1, k) = 2.0 * eta * std::cos((2.0 * s - static_cast<double>(k)) * eta);
  }
  return c;
}

DerivativeLax derivative_lax(const Anisotropy& a, cplx phi) {
  require_regular(phi);
  const cplx csc = 1.0 / std::sin(phi);
  DerivativeLax d{a, phi, build_lax(a, phi, 0.0).L, lax_ds(a, phi, 0.0)};
  for (auto& x : d.L0) x *= csc;
  for (auto& x : d.L1) x *= csc;
  return d;
}

PauliComponents times_right(const PauliComponents& c, const Matrix& g) {
  PauliComponents out;
  for (int i = 0; i < 4; ++i) out[i] = c[i] * g;
  return out;
}

PauliComponents extended_lax(const DerivativeLax& d, const Matrix& right) {
  const int m = d.params.m();
  const PauliComponents l0 = right.size() ? times_right(d.L0, right) : d.L0;
  const PauliComponents l1 = right.size() ? times_right(d.L1, right) : d.L1;
  PauliComponents out = zeros(2 * m);
  for (int alpha = 0; alpha < 4; ++alpha) {
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        out[alpha](2 * x, 2 * y) = l0[alpha](x, y);
        out[alpha](2 * x + 1, 2 * y + 1) = l0[alpha](x, y);
        out[alpha](2 * x, 2 * y + 1) = l1[alpha](x, y);
      }
    }
  }
  return out;
}

bool TransitionReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string TransitionReport::failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.ok) continue;
    if (!out.empty()) out += ", ";
    out += c.name;
  }
  return out;
}

TransitionReport check_boundary_transitions(const DerivativeLax& d, double tol) {
  const int m = d.params.m();
  const PauliComponents lt = extended_lax(d);
  const auto comp = [&](Pauli a) -> const Matrix& { return at(lt, a); };
  Vector e00 = Vector::Zero(2 * m);
  Vector e01 = Vector::Zero(2 * m);
  e00(0) = 1.0;
  e01(1) = 1.0;
  const cplx eta_cot = d.params.eta() * std::cos(d.phi) / std::sin(d.phi);

  TransitionReport rep;
  const auto add = [&](const char* name, double r) { rep.checks.push_back({name, r, r <= tol}); };
  add("<00|L~0 = <00|", (e00.transpose() * comp(Pauli::Id) - e00.transpose()).norm());
  add("<00|L~+ = 0", (e00.transpose() * comp(Pauli::Plus)).norm());
  add("L~0|01> = |01>", (comp(Pauli::Id) * e01 - e01).norm());
  add("L~-|01> = 0", (comp(Pauli::Minus) * e01).norm());
  add("L~z|01> = eta cot(phi)|00>", (comp(Pauli::Z) * e01 - eta_cot * e00).norm());
  add("L~z,+,-|00> = 0", std::max({(comp(Pauli::Z) * e00).norm(), (comp(Pauli::Plus) * e00).norm(),
                                   (comp(Pauli::Minus) * e00).norm()}));
  return rep;
}

Matrix tau_matrix(const Anisotropy& a, cplx phi, cplx s) {
  const double se = std::sin(a.eta());
  const cplx c0 = 2.0 * se * std::cos(phi) * std::cos(a.eta() * s);
  const cplx cz = -2.0 * se * std::sin(phi) * std::sin(a.eta() * s);
  return c0 * pauli(Pauli::Id) + cz * pauli(Pauli::Z);
}

namespace {

// A (x)_p B over aux (x) p (x) p, auxiliary index outermost
Matrix partial_product(const PauliComponents& x, const PauliComponents& y) {
  const Eigen::Index m = x[0].rows();
  Matrix out = Matrix::Zero(4 * m, 4 * m);
  for (Pauli a : kPauliBasis) {
    for (Pauli b : kPauliBasis) {
      const Matrix aux = at(x, a) * at(y, b);
      if (aux.isZero(0.0)) continue;
      const Matrix phys = tensor(Operator(1, pauli(a)), Operator(1, pauli(b))).matrix();
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
          if (aux(i, j) != 0.0) out.block(4 * i, 4 * j, 4, 4) += aux(i, j) * phys;
    }
  }
  return out;
}

}  // namespace

double divergence_residual(const Anisotropy& a, cplx phi, cplx s) {
  const PauliComponents l = build_lax(a, phi, s).L;
  const PauliComponents lphi = lax_dphi(a, phi, s);
  const Matrix ll = partial_product(l, l);
  const Matrix h = Eigen::kroneckerProduct(Matrix::Identity(a.m(), a.m()), bond_hamiltonian(a).matrix()).eval();
  const Matrix lhs = h * ll - ll * h;
  const Matrix rhs = 2.0 * std::sin(a.eta()) * (partial_product(l, lphi) - partial_product(lphi, l));
  return (lhs - rhs).norm();
}

double hnto_relation_residual(const Anisotropy& a, cplx phi, cplx s, int n) {
  require_sites(n, 2);
  const Operator h = build_hamiltonian(a, n, BoundarySpec::open());
  const Operator w = build_W(a, phi, s, n);
  const Operator w1 = build_W(a, phi, s, n - 1);
  const Operator tau(1, tau_matrix(a, phi, s));
  const Operator rhs = tensor(w1, tau) - tensor(tau, w1);
  return frobenius(commutator(h, w) - rhs);
}

RestrictedB restricted_B(const Anisotropy& a) {
  const int m = a.m();
  RestrictedB b{a, zeros(m - 1)};
  for (int k = 1; k < m; ++k) {
    at(b.B, Pauli::Id)(k - 1, k - 1) = a.c(k);
    at(b.B, Pauli::Z)(k - 1, k - 1) = -a.s(k);
  }
  for (int k = 1; k + 1 < m; ++k) {
    at(b.B, Pauli::Plus)(k, k - 1) = -a.s(k);
    at(b.B, Pauli::Minus)(k - 1, k) = a.s(k + 1);
  }
  return b;
}

double restricted_B_residual(const RestrictedB& b, cplx phi) {
  const int m = b.params.m();
  const DerivativeLax d = derivative_lax(b.params, phi);
  const cplx cot = std::cos(phi) / std::sin(phi);
  const cplx csc = 1.0 / std::sin(phi);
  const cplx scale[4] = {1.0, cot, csc, csc};
  double worst = 0.0;
  for (int alpha = 0; alpha < 4; ++alpha) {
    const Matrix r = d.L0[alpha].bottomRightCorner(m - 1, m - 1) - scale[alpha] * b.B[alpha];
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst;
}

double u1_covariance_residual(const Anisotropy& a, cplx phi, cplx s, double theta) {
  const VermaRep rep = build_verma(a, s);
  const Matrix lb = build_lax(a, phi, s).block();
  Matrix g = Matrix::Zero(a.m(), a.m());
  Matrix gi = Matrix::Zero(a.m(), a.m());
  for (int k = 0; k < a.m(); ++k) {
    g(k, k) = std::exp(cplx(0.0, theta) * rep.Sz(k, k));
    gi(k, k) = 1.0 / g(k, k);
  }
  Matrix dp = Matrix::Zero(2, 2);
  dp(0, 0) = std::polar(1.0, -theta / 2);
  dp(1, 1) = std::polar(1.0, theta / 2);
  const Matrix i2 = Matrix::Identity(2, 2);
  const Matrix im = Matrix::Identity(a.m(), a.m());
  const Matrix lhs = Matrix(Eigen::kroneckerProduct(g, i2)) * lb * Matrix(Eigen::kroneckerProduct(gi, i2));
  const Matrix rhs = Matrix(Eigen::kroneckerProduct(im, dp)) * lb * Matrix(Eigen::kroneckerProduct(im, Matrix(dp.adjoint())));
  return (lhs - rhs).norm();
}

}  // namespace xxz
