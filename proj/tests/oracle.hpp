#pragma once

// Reference constructions written directly from the definitions with plain
// Kronecker products. Slow and memory hungry, used only to check the library.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using c = std::complex<double>;
using M = Eigen::MatrixXcd;

inline constexpr double pi = 3.14159265358979323846;
inline const c I{0.0, 1.0};

inline M mat2(c a, c b, c d, c e) {
  M m(2, 2);
  m << a, b, d, e;
  return m;
}
inline M id2() { return mat2(1, 0, 0, 1); }
inline M sx() { return mat2(0, 1, 1, 0); }
inline M sy() { return mat2(0, -I, I, 0); }
inline M sz() { return mat2(1, 0, 0, -1); }
inline M sp() { return mat2(0, 1, 0, 0); }
inline M sm() { return mat2(0, 0, 1, 0); }
// order {1, z, +, -}
inline M sigma(int a) {
  switch (a) {
    case 0: return id2();
    case 1: return sz();
    case 2: return sp();
    default: return sm();
  }
}

inline M kron(const M& a, const M& b) {
  M out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline M identity(int n) { return M::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n); }

inline M on_site(int n, int x, const M& op) {
  M out = M::Identity(1, 1);
  for (int k = 0; k < n; ++k) out = kron(out, k == x ? op : id2());
  return out;
}

inline M two_site(int n, int x, const M& a, int y, const M& b) { return on_site(n, x, a) * on_site(n, y, b); }

inline M xxz(double delta, int n, bool periodic, double flux = 0.0) {
  M h = M::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int x = 0; x + 1 < n; ++x)
    h += two_site(n, x, sx(), x + 1, sx()) + two_site(n, x, sy(), x + 1, sy()) + delta * two_site(n, x, sz(), x + 1, sz());
  if (periodic) {
    h += 2.0 * std::exp(I * flux) * two_site(n, 0, sp(), n - 1, sm()) +
         2.0 * std::exp(-I * flux) * two_site(n, 0, sm(), n - 1, sp()) + delta * two_site(n, 0, sz(), n - 1, sz());
  }
  return h;
}

inline M current(int n) {
  M j = M::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int x = 0; x < n; ++x) {
    const int y = (x + 1) % n;
    j += I * (two_site(n, x, sp(), y, sm()) - two_site(n, x, sm(), y, sp()));
  }
  return j;
}

inline M mz(int n) {
  M z = M::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int x = 0; x < n; ++x) z += on_site(n, x, sz());
  return z;
}

inline M spin_flip(int n) {
  M p = M::Identity(1, 1);
  for (int k = 0; k < n; ++k) p = kron(p, sx());
  return p;
}

inline double hs(const M& a) { return std::sqrt(std::abs((a.adjoint() * a).trace()) / a.rows()); }
inline c hs_dot(const M& a, const M& b) { return (a.adjoint() * b).trace() / static_cast<double>(a.rows()); }

struct Verma {
  M Sz, Sp, Sm;
};

// Sz = diag(s - k), S+(k, k+1) = [k+1]_q, S-(k+1, k) = [2s - k]_q, [x]_q = sin(eta x)/sin(eta)
inline Verma verma(double eta, int m, c s) {
  Verma v{M::Zero(m, m), M::Zero(m, m), M::Zero(m, m)};
  for (int k = 0; k < m; ++k) v.Sz(k, k) = s - static_cast<double>(k);
  for (int k = 0; k + 1 < m; ++k) {
    v.Sp(k, k + 1) = std::sin((k + 1) * eta) / std::sin(eta);
    v.Sm(k + 1, k) = std::sin((2.0 * s - static_cast<double>(k)) * eta) / std::sin(eta);
  }
  return v;
}

inline M diag_fn(const M& d, const std::function<c(c)>& f) {
  M out = M::Zero(d.rows(), d.cols());
  for (Eigen::Index k = 0; k < d.rows(); ++k) out(k, k) = f(d(k, k));
  return out;
}

using Comp = std::array<M, 4>;

inline Comp lax(double eta, int m, c phi, c s) {
  const Verma v = verma(eta, m, s);
  return {std::sin(phi) * diag_fn(v.Sz, [&](c z) { return std::cos(eta * z); }),
          std::cos(phi) * diag_fn(v.Sz, [&](c z) { return std::sin(eta * z); }), std::sin(eta) * v.Sm,
          std::sin(eta) * v.Sp};
}

inline Comp lax_ds(double eta, int m, c phi, c s) {
  Comp d{M::Zero(m, m), M::Zero(m, m), M::Zero(m, m), M::Zero(m, m)};
  for (int k = 0; k < m; ++k) {
    const c z = s - static_cast<double>(k);
    d[0](k, k) = -eta * std::sin(phi) * std::sin(eta * z);
    d[1](k, k) = eta * std::cos(phi) * std::cos(eta * z);
  }
  for (int k = 0; k + 1 < m; ++k) d[2](k + 1, k) = 2.0 * eta * std::cos((2.0 * s - static_cast<double>(k)) * eta);
  return d;
}

// Product of per-site Lax operators on aux (x) chain, aux outermost.
inline M chain_product(const std::vector<Comp>& sites) {
  const int n = static_cast<int>(sites.size());
  const Eigen::Index m = sites[0][0].rows();
  M p = M::Identity(m << n, m << n);
  for (int x = 0; x < n; ++x) {
    M lx = M::Zero(m << n, m << n);
    for (int a = 0; a < 4; ++a) lx += kron(sites[x][a], on_site(n, x, sigma(a)));
    p = p * lx;
  }
  return p;
}

inline M aux_element(const M& p, Eigen::Index m, Eigen::Index a, Eigen::Index b) {
  const Eigen::Index d = p.rows() / m;
  return p.block(a * d, b * d, d, d);
}

inline M aux_trace(const M& p, Eigen::Index m, const M& right = M()) {
  const Eigen::Index d = p.rows() / m;
  M out = M::Zero(d, d);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      const c w = right.size() ? right(b, a) : (a == b ? c(1.0) : c(0.0));
      if (w != 0.0) out += w * p.block(a * d, b * d, d, d);
    }
  return out;
}

inline M W(double eta, int m, c phi, c s, int n) {
  return aux_element(chain_product(std::vector<Comp>(n, lax(eta, m, phi, s))), m, 0, 0);
}

inline M V(double eta, int m, c phi, c s, int n, double flux = 0.0) {
  const Verma v = verma(eta, m, s);
  const M twist = diag_fn(v.Sz, [&](c z) { return std::exp(-I * flux * z); });
  return aux_trace(chain_product(std::vector<Comp>(n, lax(eta, m, phi, s))), m, twist);
}

// d/ds tr[L^{(x)n} G] at s = 0 with the twist G = exp(-i flux Sz) frozen at s = 0.
inline M dV(double eta, int m, c phi, int n, double flux = 0.0) {
  const Comp l = lax(eta, m, phi, 0.0);
  const Comp dl = lax_ds(eta, m, phi, 0.0);
  const M twist = diag_fn(verma(eta, m, 0.0).Sz, [&](c z) { return std::exp(-I * flux * z); });
  M out = M::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int k = 0; k < n; ++k) {
    std::vector<Comp> sites(n, l);
    sites[k] = dl;
    out += aux_trace(chain_product(sites), m, twist);
  }
  return out;
}

// Y_n = sin^2 phi / (2 eta sin eta) csc^n(phi) dV/ds - sin phi cos phi / (2 sin eta) M^z
inline M Y(double eta, int m, c phi, int n, double flux = 0.0) {
  const c pref = std::sin(phi) * std::sin(phi) / (2.0 * eta * std::sin(eta));
  return pref * std::pow(1.0 / std::sin(phi), n) * dV(eta, m, phi, n, flux) -
         std::sin(phi) * std::cos(phi) / (2.0 * std::sin(eta)) * mz(n);
}

// q_r: sigma^- (x) [<1| prod csc(phi) L(phi,0) |1> interior] (x) sigma^+
inline M q(double eta, int m, c phi, int r) {
  Comp l = lax(eta, m, phi, 0.0);
  for (auto& x : l) x /= std::sin(phi);
  if (r == 2) return kron(sm(), sp());
  const M inner = aux_element(chain_product(std::vector<Comp>(r - 2, l)), m, 1, 1);
  return kron(kron(sm(), inner), sp());
}

// p_n = sum_{k>=1} <k| (L0)^{(x) n-1} (x) L1 |k>
inline M p(double eta, int m, c phi, int n) {
  Comp l0 = lax(eta, m, phi, 0.0), l1 = lax_ds(eta, m, phi, 0.0);
  for (auto& x : l0) x /= std::sin(phi);
  for (auto& x : l1) x /= std::sin(phi);
  std::vector<Comp> sites(n, l0);
  sites[n - 1] = l1;
  const M prod = chain_product(sites);
  M out = M::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int k = 1; k < m; ++k) out += aux_element(prod, m, k, k);
  return out;
}

// Sum over cyclic translates of a local operator on sites 0..r-1.
inline M translate_sum(const M& local, int n) {
  const int r = static_cast<int>(std::log2(static_cast<double>(local.rows())) + 0.5);
  const Eigen::Index dim = Eigen::Index{1} << n;
  M out = M::Zero(dim, dim);
  for (int x = 0; x < n; ++x) {
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) {
        // split bits: sites x..x+r-1 (mod n) vs the rest; site 0 is the MSB
        bool rest_equal = true;
        Eigen::Index li = 0, lj = 0;
        for (int k = 0; k < n; ++k) {
          const int bit = n - 1 - k;
          const int bi = static_cast<int>((i >> bit) & 1), bj = static_cast<int>((j >> bit) & 1);
          const int off = ((k - x) % n + n) % n;
          if (off < r) {
            li |= Eigen::Index(bi) << (r - 1 - off);
            lj |= Eigen::Index(bj) << (r - 1 - off);
          } else if (bi != bj) {
            rest_equal = false;
            break;
          }
        }
        if (rest_equal) out(i, j) += local(li, lj);
      }
  }
  return out;
}

}  // namespace oracle
