#include "xxz/charges.hpp"

#include <cstdio>

#include "xxz/errors.hpp"
#include "xxz/lax.hpp"
#include "xxz/mpo.hpp"

namespace xxz {

namespace {

constexpr int kJet = 3;

PauliComponents leading(const PauliComponents& c) {
  PauliComponents out;
  for (int k = 0; k < 4; ++k) out[k] = c[k].topLeftCorner(2, 2);
  return out;
}

// L + eps L' + eps^2/2 L'' on aux (x) jet, index a*3 + j
PauliComponents jet_lax(const Anisotropy& a, double phi) {
  const PauliComponents l = leading(build_lax(a, phi, 0.5).L);
  const PauliComponents l1 = leading(lax_dphi(a, phi, 0.5));
  const PauliComponents l2 = leading(lax_dphi2(a, phi, 0.5));
  Matrix nil = Matrix::Zero(kJet, kJet);
  nil(0, 1) = 1.0;
  nil(1, 2) = 1.0;
  const Matrix id = Matrix::Identity(kJet, kJet);
  const Matrix nil2 = nil * nil;
  PauliComponents out;
  for (int k = 0; k < 4; ++k) {
    out[k] = Matrix::Zero(2 * kJet, 2 * kJet);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        out[k].block(kJet * x, kJet * y, kJet, kJet) =
            l[k](x, y) * id + l1[k](x, y) * nil + 0.5 * l2[k](x, y) * nil2;
  }
  return out;
}

// V^{(j)}/j! for j = 0, 1, 2
std::array<Operator, kJet> jet_transfer(const Anisotropy& a, double phi, int n) {
  const MpoSite site = mpo_site(jet_lax(a, phi));
  Matrix left = Matrix::Zero(2, 2 * kJet);
  for (int x = 0; x < 2; ++x) left(x, kJet * x) = 1.0;
  std::array<Operator, kJet> out;
  for (int j = 0; j < kJet; ++j) {
    Matrix right = Matrix::Zero(2 * kJet, 2);
    for (int x = 0; x < 2; ++x) right(kJet * x + j, x) = 1.0;
    out[j] = contract_uniform(site, n, left, right);
  }
  return out;
}

}  // namespace

ChargeSet fundamental_charges(const Anisotropy& a, int n, int j_max) {
  require_sites(n, 2);
  if (j_max < 1 || j_max > 2) throw InvalidArgument("fundamental_charges: j_max must be 1 or 2");

  ChargeSet out{a.eta() / 2, {}, {}};
  auto jets = jet_transfer(a, out.phi, n);
  Eigen::FullPivLU<Matrix> lu(jets[0].matrix());
  if (!lu.isInvertible()) {
    out.phi += 1e-6;
    char buf[128];
    std::snprintf(buf, sizeof buf, "transfer matrix singular at phi = eta/2; evaluated at %.15g", out.phi);
    out.warning = buf;
    std::fprintf(stderr, "warning: %s\n", buf);
    jets = jet_transfer(a, out.phi, n);
    lu.compute(jets[0].matrix());
  }
  const Matrix vinv = lu.inverse();
  const Matrix q1 = jets[1].matrix() * vinv;
  out.Q.emplace_back(n, q1);
  if (j_max >= 2) out.Q.emplace_back(n, Matrix(2.0 * jets[2].matrix() * vinv - q1 * q1));
  return out;
}

double hamiltonian_span_residual(const Anisotropy& a, const Operator& q) {
  const int n = q.sites();
  const Operator h = build_hamiltonian(a, n, BoundarySpec::periodic());
  const Eigen::Index d = q.dim() * q.dim();
  Matrix basis(d, 2);
  basis.col(0) = h.matrix().reshaped();
  basis.col(1) = Operator::identity(n).matrix().reshaped();
  const Vector target = q.matrix().reshaped();
  const Vector coef = basis.colPivHouseholderQr().solve(target);
  const double scale = target.norm();
  return (basis * coef - target).norm() / (scale > 0.0 ? scale : 1.0);
}

}  // namespace xxz
