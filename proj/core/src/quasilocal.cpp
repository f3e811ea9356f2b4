#include "xxz/quasilocal.hpp"

#include <cmath>
#include <limits>
#include <unsupported/Eigen/KroneckerProduct>

#include "xxz/errors.hpp"
#include "xxz/lax.hpp"
#include "xxz/qgroup.hpp"
#include "xxz/transfer.hpp"

namespace xxz {

namespace {

constexpr double kPauliWeight[4] = {1.0, 1.0, 0.5, 0.5};

void require_regular(cplx phi) {
  if (std::abs(std::sin(phi)) < 1e-14) throw SingularPoint("sin(phi) vanishes");
}

cplx cot(cplx z) { return std::cos(z) / std::sin(z); }

Matrix power(const Matrix& t, int k) {
  Matrix out = Matrix::Identity(t.rows(), t.cols());
  Matrix base = t;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

}  // namespace

ReducedTransferMatrix build_T_V(const Anisotropy& a, cplx phi, cplx phi_prime) {
  require_regular(phi);
  require_regular(phi_prime);
  const int d = a.m() - 1;
  const double eta = a.eta();
  const cplx cc = cot(phi) * cot(phi_prime);
  const cplx ss = std::sin(phi) * std::sin(phi_prime);
  ReducedTransferMatrix out{a, phi, phi_prime, Matrix::Zero(d, d), Matrix::Zero(d, d)};
  for (int k = 1; k <= d; ++k) {
    const double c = a.c(k);
    const double s = a.s(k);
    out.T(k - 1, k - 1) = c * c + cc * s * s;
    out.V(k - 1, k - 1) = eta * eta * (s * s + cc * c * c);
  }
  for (int k = 1; k < d; ++k) {
    const cplx off = std::abs(a.s(k) * a.s(k + 1)) / (2.0 * ss);
    out.T(k - 1, k) = off;
    out.T(k, k - 1) = off;
    out.V(k, k - 1) = 2.0 * eta * eta * a.c(k) * a.c(k) * std::abs(a.s(k + 1)) / (std::abs(a.s(k)) * ss);
  }
  return out;
}

Matrix doubled_transfer(const Anisotropy& a, cplx phi1, double th1, cplx phi2, double th2, bool vertex) {
  const DerivativeLax d1 = derivative_lax(a, phi1);
  const DerivativeLax d2 = derivative_lax(a, phi2);
  const PauliComponents x1 = times_right(vertex ? d1.L1 : d1.L0, gauge_matrix(a, th1));
  const PauliComponents x2 = times_right(vertex ? d2.L1 : d2.L0, gauge_matrix(a, th2));
  const int m = a.m();
  Matrix out = Matrix::Zero(m * m, m * m);
  for (int alpha = 0; alpha < 4; ++alpha) {
    out += kPauliWeight[alpha] * Matrix(Eigen::kroneckerProduct(x1[alpha], x2[alpha]));
  }
  return out;
}

Matrix excited_sector(const Matrix& doubled, int m) {
  const int d = m - 1;
  Matrix out(d * d, d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      for (int jp = 0; jp < d; ++jp)
        for (int kp = 0; kp < d; ++kp)
          out(j * d + k, jp * d + kp) = doubled((j + 1) * m + k + 1, (jp + 1) * m + kp + 1);
  return out;
}

cplx kappa_r(const Anisotropy& a, cplx phi, cplx phi_prime, int r) {
  if (r < 2) throw InvalidArgument("kappa_r: r must be >= 2");
  const Matrix t = build_T_V(a, phi, phi_prime).T;
  return 0.25 * power(t, r - 2)(0, 0);
}

double q_norm_sq(const Anisotropy& a, cplx phi, int r) {
  return kappa_r(a, std::conj(phi), phi, r).real();
}

double p_norm_sq(const Anisotropy& a, cplx phi, int n, double flux) {
  if (n < 2) throw InvalidArgument("p_norm_sq: n must be >= 2");
  const int m = a.m();
  const double th = flux / n;
  const Matrix tt = excited_sector(doubled_transfer(a, std::conj(phi), -th, phi, th, false), m);
  const Matrix vv = excited_sector(doubled_transfer(a, std::conj(phi), -th, phi, th, true), m);
  return (power(tt, n - 1) * vv).trace().real();
}

cplx p_norm_sq_diagonal(const Anisotropy& a, cplx phi, int n) {
  if (n < 2) throw InvalidArgument("p_norm_sq_diagonal: n must be >= 2");
  const ReducedTransferMatrix tv = build_T_V(a, std::conj(phi), phi);
  return (power(tv.T, n - 1) * tv.V).trace();
}

bool in_domain(const Anisotropy& a, cplx phi) {
  return std::abs(phi.real() - kPi / 2) < kPi / (2.0 * a.m()) - 1e-12;
}

namespace {

double leading_modulus(const Anisotropy& a, cplx phi) {
  const Matrix t = build_T_V(a, std::conj(phi), phi).T;
  // T(conj phi, phi) is real symmetric
  const Eigen::MatrixXd tr = t.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tr, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

QuasilocalityCertificate contraction_certificate(const Anisotropy& a, cplx phi, int fit_max) {
  require_regular(phi);
  QuasilocalityCertificate c{a, phi, 0.0, 0.0, std::nullopt, std::nullopt, in_domain(a, phi), 0.0, 0.0, 0.0};
  c.tau1 = leading_modulus(a, phi);
  c.xi = c.tau1 > 0.0 ? -0.5 * std::log(c.tau1) : std::numeric_limits<double>::infinity();

  const int d = a.m() - 1;
  const double u = phi.real() - kPi / 2;
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k + 1 < d; ++k) e(k, k + 1) = e(k + 1, k) = 0.5;
  const Eigen::MatrixXd amat = std::cos(2 * u) * Eigen::MatrixXd::Identity(d, d) - e;
  c.e_max_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(e, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
  c.a_min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(amat, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();

  Eigen::MatrixXd dmat = Eigen::MatrixXd::Zero(d, d);
  for (int k = 1; k <= d; ++k) dmat(k - 1, k - 1) = std::abs(a.s(k));
  const Matrix t = build_T_V(a, std::conj(phi), phi).T;
  const double s2 = std::norm(std::sin(phi));
  const Matrix lhs = (Matrix::Identity(d, d) - t) * s2;
  c.dad_residual = (lhs - (dmat * amat * dmat).cast<cplx>()).norm();

  if (std::isfinite(c.xi)) {
    double g = 0.0;
    double gp = 0.0;
    for (int r = 2; r <= fit_max; ++r) g = std::max(g, std::sqrt(q_norm_sq(a, phi, r)) * std::exp(c.xi * r));
    for (int n = 2; n <= fit_max; ++n) {
      gp = std::max(gp, std::sqrt(std::max(0.0, p_norm_sq(a, phi, n))) * std::exp(c.xi * n));
    }
    c.gamma = g;
    c.gamma_prime = gp;
  }
  return c;
}

double domain_boundary(const Anisotropy& a, double v, double tol) {
  // tau1 increases with |u|; bracket the crossing of 1 from inside the strip
  double lo = 0.0;
  double hi = kPi / 2 - 1e-9;
  const auto tau = [&](double u) { return leading_modulus(a, cplx(kPi / 2 + u, v)); };
  if (tau(lo) >= 1.0) return 0.0;
  if (tau(hi) < 1.0) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (tau(mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

cplx kernel_K(const Anisotropy& a, cplx phi, cplx phi_prime) {
  const Matrix t = build_T_V(a, phi, phi_prime).T;
  const int d = a.m() - 1;
  const Matrix one_minus = Matrix::Identity(d, d) - t;
  Eigen::FullPivLU<Matrix> lu(one_minus);
  lu.setThreshold(1e-13);
  if (!lu.isInvertible()) throw SingularPoint("kernel_K: 1 - T is singular");
  Vector e1 = Vector::Zero(d);
  e1(0) = 1.0;
  return 0.25 * lu.solve(e1)(0);
}

cplx kernel_K_closed(const Anisotropy& a, cplx phi, cplx phi_prime) {
  const int m = a.m();
  const double s1 = a.s(1);
  const cplx w = phi + phi_prime;
  const cplx pref = -std::sin(phi) * std::sin(phi_prime) / (2.0 * s1 * s1);
  const cplx num = std::sin(static_cast<double>(m - 1) * w);
  const cplx den = std::sin(static_cast<double>(m) * w);
  if (std::abs(den) < 1e-10) {
    if (std::abs(num) > 1e-8) throw SingularPoint("kernel_K_closed: pole of the closed form");
    return pref * static_cast<double>(m - 1) * std::cos(static_cast<double>(m - 1) * w) /
           (static_cast<double>(m) * std::cos(static_cast<double>(m) * w));
  }
  return pref * num / den;
}

cplx kernel_K_series(const Anisotropy& a, cplx phi, cplx phi_prime, int r_max) {
  const Matrix t = build_T_V(a, phi, phi_prime).T;
  Matrix cur = Matrix::Identity(t.rows(), t.cols());
  cplx sum = 0.0;
  for (int r = 2; r <= r_max; ++r) {
    sum += 0.25 * cur(0, 0);
    cur = cur * t;
  }
  return sum;
}

Vector psi_solve(const Anisotropy& a, cplx phi, cplx phi_prime) {
  const Matrix t = build_T_V(a, phi, phi_prime).T;
  const int d = a.m() - 1;
  Eigen::FullPivLU<Matrix> lu(Matrix::Identity(d, d) - t);
  lu.setThreshold(1e-13);
  if (!lu.isInvertible()) throw SingularPoint("psi_solve: 1 - T is singular");
  Vector e1 = Vector::Zero(d);
  e1(0) = 1.0;
  Vector x = lu.solve(e1);
  for (int j = 1; j <= d; ++j) x(j - 1) *= std::abs(a.s(j)) / std::abs(a.s(1));
  return x;
}

Vector psi_explicit(const Anisotropy& a, cplx phi, cplx phi_prime) {
  const int m = a.m();
  const double s1 = a.s(1);
  const cplx w = phi + phi_prime;
  const cplx pref = 2.0 * std::sin(phi) * std::sin(phi_prime) / (s1 * s1);
  const cplx den = std::sin(static_cast<double>(m) * w);
  if (std::abs(den) < 1e-10) throw SingularPoint("psi_explicit: sin(m w) vanishes");
  Vector out(m - 1);
  for (int j = 1; j < m; ++j) {
    const double sign = (j % 2) ? -1.0 : 1.0;
    out(j - 1) = sign * pref * std::sin(static_cast<double>(m - j) * w) / den;
  }
  return out;
}

InnerProductReport inner_product_asymptotics(const Anisotropy& a, cplx phi, cplx phi_prime,
                                             const std::vector<int>& ns) {
  InnerProductReport rep{a, phi, phi_prime, kernel_K(a, phi, phi_prime), {}};
  for (int n : ns) {
    if (n > 10) throw SizeError("inner_product_asymptotics: n must be <= 10");
    require_sites(n, 2);
    const Operator yb = build_Y(a, std::conj(phi), n);
    const Operator y = build_Y(a, phi_prime, n);
    const Operator zb = build_Z(a, std::conj(phi), n);
    const Operator z = build_Z(a, phi_prime, n);
    const double dn = static_cast<double>(n);
    rep.rows.push_back({n, hs_inner(yb, y) / dn, hs_inner(zb, z) / dn, hs_inner(zb.transpose(), z),
                        hs_inner(yb.transpose(), y)});
  }
  return rep;
}

double pseudolocality_bound(const QuasilocalityCertificate& cert, int n) {
  if (!cert.gamma || !cert.gamma_prime || !std::isfinite(cert.xi)) {
    throw InvalidArgument("pseudolocality_bound: certificate has no finite decay constants");
  }
  const double g = *cert.gamma;
  const double gp = *cert.gamma_prime;
  double tail = 0.0;
  for (int r = 2; r <= n; ++r) tail += std::exp(-2.0 * cert.xi * r);
  const double c = std::abs(density_prefactor(cert.params, cert.phi));
  const double root = std::sqrt(n * g * g * tail) + n * c * gp * std::exp(-cert.xi * n);
  return root * root;
}

}  // namespace xxz
