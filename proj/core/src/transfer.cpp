#include "xxz/transfer.hpp"

#include <array>
#include <cmath>
#include <string>

#include "xxz/errors.hpp"
#include "xxz/lax.hpp"
#include "xxz/mpo.hpp"
#include "xxz/qgroup.hpp"

namespace xxz {

namespace {

constexpr std::array<std::pair<TransferKind, std::string_view>, 6> kKindNames = {{
    {TransferKind::W, "W"},
    {TransferKind::V, "V"},
    {TransferKind::VTwisted, "V_twisted"},
    {TransferKind::Z, "Z"},
    {TransferKind::Y, "Y"},
    {TransferKind::YTwisted, "Y_twisted"},
}};

Matrix unit_row(Eigen::Index dim, Eigen::Index k) {
  Matrix r = Matrix::Zero(1, dim);
  r(0, k) = 1.0;
  return r;
}

Matrix unit_col(Eigen::Index dim, Eigen::Index k) {
  Matrix c = Matrix::Zero(dim, 1);
  c(k, 0) = 1.0;
  return c;
}

// tr_a <0_b| X |1_b> weighted by the diagonal of g: left picks (a,0), right (a,1)
std::pair<Matrix, Matrix> ancilla_trace_boundary(int m, const Matrix& g) {
  Matrix left = Matrix::Zero(m, 2 * m);
  Matrix right = Matrix::Zero(2 * m, m);
  for (int a = 0; a < m; ++a) {
    left(a, 2 * a) = 1.0;
    right(2 * a + 1, a) = g.size() ? g(a, a) : cplx(1.0);
  }
  return {left, right};
}

Operator finish_modified(const Anisotropy& a, cplx phi, Operator raw) {
  const int n = raw.sites();
  raw *= density_prefactor(a, phi);
  raw -= magnetization_coefficient(a, phi) * magnetization(n);
  return raw;
}

}  // namespace

std::string_view kind_name(TransferKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

TransferKind parse_kind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames)
    if (n == name) return kind;
  throw InvalidArgument("unknown transfer kind '" + std::string(name) + "'");
}

bool is_modified(TransferKind k) {
  return k == TransferKind::Z || k == TransferKind::Y || k == TransferKind::YTwisted;
}

cplx density_prefactor(const Anisotropy& a, cplx phi) {
  const cplx s = std::sin(phi);
  return s * s / (2.0 * a.eta() * std::sin(a.eta()));
}

cplx magnetization_coefficient(const Anisotropy& a, cplx phi) {
  return std::sin(phi) * std::cos(phi) / (2.0 * std::sin(a.eta()));
}

Operator build_W(const Anisotropy& a, cplx phi, cplx s, int n) {
  require_sites(n, 1);
  const MpoSite site = mpo_site(build_lax(a, phi, s).L);
  return contract_uniform(site, n, unit_row(a.m(), 0), unit_col(a.m(), 0));
}

Operator build_V(const Anisotropy& a, cplx phi, cplx s, int n) {
  require_sites(n, 1);
  const MpoSite site = mpo_site(build_lax(a, phi, s).L);
  const Matrix id = Matrix::Identity(a.m(), a.m());
  return contract_uniform(site, n, id, id);
}

Operator build_V_twisted(const Anisotropy& a, cplx phi, cplx s, double flux, int n) {
  require_sites(n, 1);
  const MpoSite site = mpo_site(build_lax(a, phi, s).L);
  const Matrix id = Matrix::Identity(a.m(), a.m());
  if (flux == 0.0) return contract_uniform(site, n, id, id);
  return contract_uniform(site, n, id, twist_matrix(build_verma(a, s), flux));
}

Operator build_Z(const Anisotropy& a, cplx phi, int n) {
  require_sites(n, 2);
  const MpoSite site = mpo_site(extended_lax(derivative_lax(a, phi)));
  const int d = 2 * a.m();
  return finish_modified(a, phi, contract_uniform(site, n, unit_row(d, 0), unit_col(d, 1)));
}

Operator build_Y(const Anisotropy& a, cplx phi, int n) {
  require_sites(n, 2);
  const MpoSite site = mpo_site(extended_lax(derivative_lax(a, phi)));
  const auto [left, right] = ancilla_trace_boundary(a.m(), Matrix());
  return finish_modified(a, phi, contract_uniform(site, n, left, right));
}

Operator build_Y_twisted(const Anisotropy& a, cplx phi, double flux, int n) {
  require_sites(n, 2);
  const MpoSite site = mpo_site(extended_lax(derivative_lax(a, phi)));
  const auto [left, right] = ancilla_trace_boundary(a.m(), gauge_matrix(a, flux));
  return finish_modified(a, phi, contract_uniform(site, n, left, right));
}

Operator build_Y_gauged(const Anisotropy& a, cplx phi, double flux, int n) {
  require_sites(n, 2);
  const Matrix g = gauge_matrix(a, flux / n);
  const MpoSite site = mpo_site(extended_lax(derivative_lax(a, phi), g));
  const auto [left, right] = ancilla_trace_boundary(a.m(), Matrix());
  return finish_modified(a, phi, contract_uniform(site, n, left, right));
}

TransferOperator build_transfer(TransferKind kind, const Anisotropy& a, cplx phi, cplx s, double flux,
                                int n) {
  require_sites(n, 2);
  switch (kind) {
    case TransferKind::W: return {kind, a, phi, s, 0.0, build_W(a, phi, s, n)};
    case TransferKind::V: return {kind, a, phi, s, 0.0, build_V(a, phi, s, n)};
    case TransferKind::VTwisted: return {kind, a, phi, s, flux, build_V_twisted(a, phi, s, flux, n)};
    case TransferKind::Z: return {kind, a, phi, 0.0, 0.0, build_Z(a, phi, n)};
    case TransferKind::Y: return {kind, a, phi, 0.0, 0.0, build_Y(a, phi, n)};
    case TransferKind::YTwisted: return {kind, a, phi, 0.0, flux, build_Y_twisted(a, phi, flux, n)};
  }
  throw InvalidArgument("build_transfer: unknown kind");
}

double normalized_commutator(const Operator& a, const Operator& b) {
  const double scale = frobenius(a) * frobenius(b);
  const double c = frobenius(commutator(a, b));
  return scale > 0.0 ? c / scale : c;
}

std::vector<ResidualEntry> commutation_suite(const Anisotropy& a, int n, const std::vector<cplx>& phis,
                                             const std::vector<cplx>& ss, double flux) {
  if (phis.empty() || ss.empty()) throw InvalidArgument("commutation_suite: empty parameter list");
  constexpr double kTol = 1e-9;
  std::vector<ResidualEntry> out;
  const auto label = [](const std::string& what, cplx p, cplx s) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.6g%+.6gi, %.6g%+.6gi)", p.real(), p.imag(), s.real(), s.imag());
    return what + buf;
  };
  const Operator hp = build_hamiltonian(a, n, BoundarySpec::periodic());
  const Operator ht = build_hamiltonian(a, n, BoundarySpec::twisted(flux));

  std::vector<std::pair<cplx, cplx>> pts;
  for (cplx p : phis)
    for (cplx s : ss) pts.emplace_back(p, s);

  std::vector<Operator> v, vt, w, y, yt;
  for (const auto& [p, s] : pts) {
    v.push_back(build_V(a, p, s, n));
    vt.push_back(build_V_twisted(a, p, s, flux, n));
    w.push_back(build_W(a, p, s, n));
  }
  for (cplx p : phis) {
    y.push_back(build_Y(a, p, n));
    yt.push_back(build_Y_twisted(a, p, flux, n));
  }
  const auto rel_h = [](const Operator& h, const Operator& x) {
    return frobenius(commutator(h, x)) / frobenius(x);
  };

  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [p, s] = pts[i];
    out.push_back({label("[H_pbc,V]", p, s), rel_h(hp, v[i]), kTol, false});
    out.push_back({label("[H_flux,V_flux]", p, s), rel_h(ht, vt[i]), kTol, false});
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const std::string pair = label("", pts[j].first, pts[j].second);
      out.push_back({label("[V,V']", p, s) + pair, normalized_commutator(v[i], v[j]), kTol, false});
      out.push_back({label("[V,V'^T]", p, s) + pair, normalized_commutator(v[i], v[j].transpose()), kTol,
                     false});
      out.push_back({label("[W,W']", p, s) + pair, normalized_commutator(w[i], w[j]), kTol, false});
      out.push_back({label("[V_flux,V_flux']", p, s) + pair, normalized_commutator(vt[i], vt[j]), kTol,
                     false});
      out.push_back({label("[W,W'^T] (control)", p, s) + pair,
                     normalized_commutator(w[i], w[j].transpose()), 1e-3, true});
    }
  }
  for (std::size_t i = 0; i < phis.size(); ++i) {
    out.push_back({label("[H_pbc,Y]", phis[i], 0.0), rel_h(hp, y[i]), kTol, false});
    out.push_back({label("[H_flux,Y_flux]", phis[i], 0.0), rel_h(ht, yt[i]), kTol, false});
    for (std::size_t j = i + 1; j < phis.size(); ++j) {
      const std::string pair = label("", phis[j], 0.0);
      out.push_back({label("[Y,Y']", phis[i], 0.0) + pair, normalized_commutator(y[i], y[j]), kTol, false});
      out.push_back({label("[Y,Y'^T]", phis[i], 0.0) + pair, normalized_commutator(y[i], y[j].transpose()),
                     kTol, false});
      out.push_back({label("[Y_flux,Y_flux']", phis[i], 0.0) + pair, normalized_commutator(yt[i], yt[j]),
                     kTol, false});
    }
  }
  return out;
}

double spin_inversion_residual(const Anisotropy& a, cplx phi, cplx s, int n) {
  const Operator prod = build_W(a, phi, s, n) * build_W(a, phi, -s, n);
  const cplx c = std::pow(std::sin(phi + a.eta() * s) * std::sin(phi - a.eta() * s), n);
  const double scale = std::abs(c) > 0.0 ? std::abs(c) : 1.0;
  return hs_norm(prod - c * Operator::identity(n)) / scale;
}

double symmetry_relation_residual(const Anisotropy& a, cplx s, int n, int sign) {
  const Operator lhs = build_W(a, kPi / 2, s, n);
  const Operator zz = uniform_product(n, static_cast<double>(sign) * pauli(Pauli::Z));
  const Operator rhs = zz * build_W(a, 0.0, s + kPi / (2.0 * a.eta()), n);
  return hs_norm(lhs - rhs);
}

ParitySplit parity_split(const Operator& y) {
  const Operator p = parity_operator(y.sites());
  const Operator pyp = p * y * p;
  return {0.5 * (y + pyp), 0.5 * (y - pyp)};
}

double pt_residual(TransferKind kind, const Anisotropy& a, cplx phi, int n) {
  if (kind != TransferKind::Y && kind != TransferKind::Z) {
    throw InvalidArgument("pt_residual: kind must be Y or Z");
  }
  const auto build = [&](cplx p) { return kind == TransferKind::Y ? build_Y(a, p, n) : build_Z(a, p, n); };
  const Operator p = parity_operator(n);
  return hs_norm(p * build(phi) * p - build(kPi - phi).transpose());
}

double open_leakage_residual(const Anisotropy& a, cplx phi, int n) {
  require_sites(n, 3);
  const Operator h = build_hamiltonian(a, n, BoundarySpec::open());
  const Operator z = build_Z(a, phi, n);
  const Operator z1 = build_Z(a, phi, n - 1);
  const Operator sz(1, pauli(Pauli::Z));
  const Operator id1 = Operator::identity(1);
  const cplx coef = 2.0 * std::sin(a.eta()) * std::cos(phi) / std::sin(phi);
  const Operator rhs = tensor(sz, Operator::identity(n - 1)) - tensor(Operator::identity(n - 1), sz) -
                       coef * (tensor(id1, z1) - tensor(z1, id1));
  return hs_norm(commutator(h, z) - rhs);
}

}  // namespace xxz
