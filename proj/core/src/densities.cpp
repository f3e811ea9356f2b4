#include "xxz/densities.hpp"

#include <string>
#include <vector>

#include "xxz/errors.hpp"
#include "xxz/lax.hpp"
#include "xxz/mpo.hpp"
#include "xxz/qgroup.hpp"
#include "xxz/transfer.hpp"

namespace xxz {

namespace {

constexpr cplx kI{0.0, 1.0};

Matrix site_gauge(const Anisotropy& a, double flux, int n) {
  return flux == 0.0 ? Matrix() : gauge_matrix(a, flux / n);
}

PauliComponents gauged(const PauliComponents& c, const Matrix& g) {
  return g.size() ? times_right(c, g) : c;
}

}  // namespace

LocalDensity density_q(const Anisotropy& a, cplx phi, int r, double flux, int n) {
  if (r < 2) throw InvalidArgument("density_q: support " + std::to_string(r) + " below 2");
  if (r > kMaxDensitySupport) {
    throw SizeError("density_q: support " + std::to_string(r) + " exceeds cap " +
                    std::to_string(kMaxDensitySupport));
  }
  if (flux != 0.0 && n < r) throw InvalidArgument("density_q: twisted density needs n >= r");
  const cplx edge = flux == 0.0 ? cplx(1.0) : std::exp(kI * flux / static_cast<double>(n));
  const int m = a.m();

  if (r == 2) {
    const Pauli ends[2] = {Pauli::Minus, Pauli::Plus};
    return {a, phi, flux, n, r, edge * pauli_string(ends)};
  }

  const PauliComponents l0 = gauged(derivative_lax(a, phi).L0, site_gauge(a, flux, n));
  const Matrix id = Matrix::Identity(m, m);
  std::vector<MpoSite> sites;
  sites.reserve(r);
  sites.push_back(mpo_single(Pauli::Minus, id));
  for (int k = 1; k + 1 < r; ++k) sites.push_back(mpo_site(l0));
  sites.push_back(mpo_single(Pauli::Plus, id));

  Matrix left = Matrix::Zero(1, m);
  Matrix right = Matrix::Zero(m, 1);
  left(0, 1) = 1.0;
  right(1, 0) = edge;
  return {a, phi, flux, n, r, contract_mpo(sites, left, right)};
}

Remainder remainder_p(const Anisotropy& a, cplx phi, int n, double flux) {
  require_sites(n, 2);
  const DerivativeLax d = derivative_lax(a, phi);
  const Matrix g = site_gauge(a, flux, n);
  std::vector<MpoSite> sites(n - 1, mpo_site(gauged(d.L0, g)));
  sites.push_back(mpo_site(gauged(d.L1, g)));

  const int m = a.m();
  Matrix excited = Matrix::Identity(m, m);
  excited(0, 0) = 0.0;
  return {a, phi, flux, n, contract_mpo(sites, excited, Matrix::Identity(m, m))};
}

Operator periodic_density_sum(const Anisotropy& a, cplx phi, int n, double flux, bool scale_remainder) {
  require_sites(n, 2);
  if (n > kMaxDensitySupport) {
    throw SizeError("periodic_density_sum: n exceeds density cap " + std::to_string(kMaxDensitySupport));
  }
  Operator local(n);
  for (int r = 2; r <= n; ++r) {
    local += tensor(Operator::identity(n - r), density_q(a, phi, r, flux, n).op);
  }
  const cplx c = scale_remainder ? density_prefactor(a, phi) : cplx(1.0);
  local += c * remainder_p(a, phi, n, flux).op;
  return shift_sum(local);
}

Operator open_density_sum(const Anisotropy& a, cplx phi, int n) {
  require_sites(n, 2);
  if (n > kMaxDensitySupport) {
    throw SizeError("open_density_sum: n exceeds density cap " + std::to_string(kMaxDensitySupport));
  }
  Operator out(n);
  for (int r = 2; r <= n; ++r) {
    const Operator q = density_q(a, phi, r).op;
    for (int x = 0; x + r <= n; ++x) out += embed(q, n, x);
  }
  return out;
}

namespace {

Operator periodic_reference(const Anisotropy& a, cplx phi, int n, double flux) {
  return flux == 0.0 ? build_Y(a, phi, n) : build_Y_gauged(a, phi, flux, n);
}

}  // namespace

double density_sum_residual(const Anisotropy& a, cplx phi, int n, double flux) {
  return hs_norm(periodic_reference(a, phi, n, flux) - periodic_density_sum(a, phi, n, flux, true));
}

double density_sum_literal_residual(const Anisotropy& a, cplx phi, int n, double flux) {
  return hs_norm(periodic_reference(a, phi, n, flux) - periodic_density_sum(a, phi, n, flux, false));
}

double open_density_residual(const Anisotropy& a, cplx phi, int n) {
  return hs_norm(build_Z(a, phi, n) - open_density_sum(a, phi, n));
}

}  // namespace xxz
