#include "xxz/qgroup.hpp"

#include <cmath>
#include <string>

#include "xxz/errors.hpp"

namespace xxz {

VermaRep build_verma(const Anisotropy& a, cplx s) {
  const int m = a.m();
  const double eta = a.eta();
  const double se = std::sin(eta);
  VermaRep rep{a, s, Matrix::Zero(m, m), Matrix::Zero(m, m), Matrix::Zero(m, m)};
  for (int k = 0; k < m; ++k) rep.Sz(k, k) = s - static_cast<double>(k);
  for (int k = 0; k + 1 < m; ++k) {
    rep.Splus(k, k + 1) = std::sin((k + 1) * eta) / se;
    rep.Sminus(k + 1, k) = std::sin((2.0 * s - static_cast<double>(k)) * eta) / se;
  }
  return rep;
}

VermaRep leading_block(const VermaRep& rep, int d) {
  if (d < 1 || d > rep.dim()) {
    throw InvalidArgument("leading_block: dimension " + std::to_string(d) + " outside 1.." +
                          std::to_string(rep.dim()));
  }
  return {rep.params, rep.s, rep.Sz.topLeftCorner(d, d), rep.Splus.topLeftCorner(d, d),
          rep.Sminus.topLeftCorner(d, d)};
}

double algebra_residual(const VermaRep& rep) {
  const double eta = rep.params.eta();
  Matrix sin2 = Matrix::Zero(rep.dim(), rep.dim());
  for (int k = 0; k < rep.dim(); ++k) sin2(k, k) = std::sin(2.0 * eta * rep.Sz(k, k)) / std::sin(eta);
  const Matrix c1 = rep.Splus * rep.Sminus - rep.Sminus * rep.Splus - sin2;
  const Matrix c2 = rep.Sz * rep.Splus - rep.Splus * rep.Sz - rep.Splus;
  const Matrix c3 = rep.Sz * rep.Sminus - rep.Sminus * rep.Sz + rep.Sminus;
  return std::max({c1.norm(), c2.norm(), c3.norm()});
}

Matrix spin_flip_U(const Anisotropy& a, double s) {
  const double two_s = 2.0 * s;
  const long d = std::lround(two_s) + 1;
  if (std::abs(two_s - std::round(two_s)) > 1e-12 || d < 2) {
    throw InvalidArgument("spin_flip_U: 2s must be a positive integer, got s=" + std::to_string(s));
  }
  if (d > a.m()) {
    throw InvalidArgument("spin_flip_U: 2s+1 = " + std::to_string(d) + " exceeds m = " +
                          std::to_string(a.m()));
  }
  // the q-number amplitudes are mirror symmetric on the irreducible block,
  // so the flip is the plain reversal of the weight basis
  Matrix u = Matrix::Zero(d, d);
  for (long k = 0; k < d; ++k) u(d - 1 - k, k) = 1.0;
  return u;
}

Matrix gauge_matrix(const Anisotropy& a, double flux) {
  Matrix g = Matrix::Zero(a.m(), a.m());
  for (int k = 0; k < a.m(); ++k) g(k, k) = std::polar(1.0, k * flux);
  return g;
}

Matrix twist_matrix(const VermaRep& rep, double flux) {
  Matrix g = Matrix::Zero(rep.dim(), rep.dim());
  for (int k = 0; k < rep.dim(); ++k) g(k, k) = std::exp(cplx(0.0, -flux) * rep.Sz(k, k));
  return g;
}

}  // namespace xxz
