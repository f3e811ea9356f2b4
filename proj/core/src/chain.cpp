#include "xxz/chain.hpp"

#include <cmath>
#include <string>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

constexpr cplx kI{0.0, 1.0};

inline bool spin_down(std::uint32_t state, int n, int x) {
  return (state >> (n - 1 - x)) & 1u;
}

inline std::uint32_t flip(std::uint32_t state, int n, int x) {
  return state ^ (1u << (n - 1 - x));
}

// Adds 2 p s+_x s-_y + 2 conj(p) s-_x s+_y + delta sz_x sz_y.
void add_bond(Matrix& h, int n, int x, int y, cplx phase, double delta) {
  const std::uint32_t dim = 1u << n;
  for (std::uint32_t in = 0; in < dim; ++in) {
    const bool dx = spin_down(in, n, x);
    const bool dy = spin_down(in, n, y);
    h(in, in) += delta * ((dx == dy) ? 1.0 : -1.0);
    if (dx && !dy) {
      h(flip(flip(in, n, x), n, y), in) += 2.0 * phase;
    } else if (!dx && dy) {
      h(flip(flip(in, n, x), n, y), in) += 2.0 * std::conj(phase);
    }
  }
}

inline std::uint32_t shift_source(std::uint32_t index, int n) {
  return (index >> 1) | ((index & 1u) << (n - 1));
}

}  // namespace

Matrix pauli(Pauli alpha) {
  Matrix p = Matrix::Zero(2, 2);
  switch (alpha) {
    case Pauli::Id: p(0, 0) = 1.0; p(1, 1) = 1.0; break;
    case Pauli::Z: p(0, 0) = 1.0; p(1, 1) = -1.0; break;
    case Pauli::Plus: p(0, 1) = 1.0; break;
    case Pauli::Minus: p(1, 0) = 1.0; break;
  }
  return p;
}

char pauli_symbol(Pauli alpha) {
  switch (alpha) {
    case Pauli::Id: return '0';
    case Pauli::Z: return 'z';
    case Pauli::Plus: return '+';
    case Pauli::Minus: return '-';
  }
  return '?';
}

void require_sites(int n, int min_sites) {
  if (n < min_sites) {
    throw InvalidArgument("site count " + std::to_string(n) + " below minimum " +
                          std::to_string(min_sites));
  }
  if (n > kMaxSites) {
    throw SizeError("site count " + std::to_string(n) + " exceeds dense cap " +
                    std::to_string(kMaxSites));
  }
}

void require_same_sites(const Operator& a, const Operator& b, const char* where) {
  if (a.sites() != b.sites()) {
    throw InvalidArgument(std::string(where) + ": site counts differ (" +
                          std::to_string(a.sites()) + " vs " + std::to_string(b.sites()) + ")");
  }
}

Operator::Operator(int n) : n_(n) {
  require_sites(n, 0);
  m_ = Matrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
}

Operator::Operator(int n, Matrix entries) : n_(n), m_(std::move(entries)) {
  require_sites(n, 0);
  const Eigen::Index d = Eigen::Index{1} << n;
  if (m_.rows() != d || m_.cols() != d) {
    throw InvalidArgument("operator on " + std::to_string(n) + " sites needs a " +
                          std::to_string(d) + "x" + std::to_string(d) + " matrix");
  }
}

Operator Operator::identity(int n) {
  require_sites(n, 0);
  const Eigen::Index d = Eigen::Index{1} << n;
  return Operator(n, Matrix::Identity(d, d));
}

Operator Operator::adjoint() const { return Operator(n_, m_.adjoint()); }
Operator Operator::transpose() const { return Operator(n_, m_.transpose()); }
Operator Operator::conjugate() const { return Operator(n_, m_.conjugate()); }

Operator& Operator::operator+=(const Operator& o) {
  require_same_sites(*this, o, "operator+");
  m_ += o.m_;
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  require_same_sites(*this, o, "operator-");
  m_ -= o.m_;
  return *this;
}

Operator& Operator::operator*=(cplx z) {
  m_ *= z;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_sites(a, b, "operator*");
  return Operator(a.n_, a.m_ * b.m_);
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator anticommutator(const Operator& a, const Operator& b) { return a * b + b * a; }

double frobenius(const Operator& a) { return a.matrix().norm(); }

double max_abs(const Operator& a) {
  return a.dim() == 0 ? 0.0 : a.matrix().cwiseAbs().maxCoeff();
}

cplx hs_inner(const Operator& a, const Operator& b) {
  require_same_sites(a, b, "hs_inner");
  // tr(a^dagger b) = sum_ij conj(a_ij) b_ij
  const cplx tr = (a.matrix().conjugate().cwiseProduct(b.matrix())).sum();
  return tr / static_cast<double>(a.dim());
}

double hs_norm(const Operator& a) {
  return std::sqrt(a.matrix().squaredNorm() / static_cast<double>(a.dim()));
}

Operator tensor(const Operator& a, const Operator& b) {
  const int n = a.sites() + b.sites();
  require_sites(n, 0);
  const Eigen::Index db = b.dim();
  Matrix out(a.dim() * db, a.dim() * db);
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    for (Eigen::Index j = 0; j < a.dim(); ++j) {
      out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
    }
  }
  return Operator(n, std::move(out));
}

Operator embed(const Operator& local, int n, int x) {
  const int r = local.sites();
  if (x < 0 || x + r > n) {
    throw InvalidArgument("embed: support [" + std::to_string(x) + "," + std::to_string(x + r) +
                          ") outside chain of " + std::to_string(n));
  }
  return tensor(tensor(Operator::identity(x), local), Operator::identity(n - x - r));
}

Operator site_pauli(int n, int x, Pauli alpha) { return embed(Operator(1, pauli(alpha)), n, x); }

Operator uniform_product(int n, const Matrix& one_site) {
  require_sites(n, 0);
  Operator out = Operator::identity(0);
  const Operator site(1, one_site);
  for (int k = 0; k < n; ++k) out = tensor(out, site);
  return out;
}

Operator pauli_string(std::span<const Pauli> alphas) {
  Operator out = Operator::identity(0);
  for (Pauli a : alphas) out = tensor(out, Operator(1, pauli(a)));
  return out;
}

Operator bond_hamiltonian(const Anisotropy& a) {
  Matrix h = Matrix::Zero(4, 4);
  add_bond(h, 2, 0, 1, 1.0, a.delta());
  return Operator(2, std::move(h));
}

Operator build_hamiltonian(const Anisotropy& a, int n, const BoundarySpec& bc) {
  require_sites(n, 2);
  Operator h(n);
  for (int x = 0; x + 1 < n; ++x) add_bond(h.matrix(), n, x, x + 1, 1.0, a.delta());
  if (bc.kind != BoundarySpec::Kind::Open) {
    const double flux = bc.kind == BoundarySpec::Kind::Twisted ? bc.flux : 0.0;
    add_bond(h.matrix(), n, 0, n - 1, std::exp(kI * flux), a.delta());
  }
  return h;
}

Operator homogeneous_twisted_hamiltonian(const Anisotropy& a, int n, double flux) {
  require_sites(n, 2);
  Operator h(n);
  const cplx phase = std::exp(-kI * flux / static_cast<double>(n));
  for (int x = 0; x < n; ++x) add_bond(h.matrix(), n, x, (x + 1) % n, phase, a.delta());
  return h;
}

Operator canonical_gauge(int n, double flux) {
  require_sites(n, 2);
  Operator c(n);
  const std::uint32_t dim = 1u << n;
  for (std::uint32_t s = 0; s < dim; ++s) {
    double weight = 0.0;
    for (int x = 0; x < n; ++x) weight += x * (spin_down(s, n, x) ? -0.5 : 0.5);
    c.matrix()(s, s) = std::exp(kI * flux * weight / static_cast<double>(n));
  }
  return c;
}

Operator shift(const Operator& op) {
  const int n = op.sites();
  if (n <= 1) return op;
  const std::uint32_t dim = 1u << n;
  Operator out(n);
  for (std::uint32_t j = 0; j < dim; ++j) {
    const std::uint32_t sj = shift_source(j, n);
    for (std::uint32_t i = 0; i < dim; ++i) {
      out.matrix()(i, j) = op(shift_source(i, n), sj);
    }
  }
  return out;
}

Operator shift_power(const Operator& op, int k) {
  const int n = op.sites();
  if (n <= 1) return op;
  k %= n;
  if (k < 0) k += n;
  Operator out = op;
  for (int i = 0; i < k; ++i) out = shift(out);
  return out;
}

Operator shift_sum(const Operator& op) {
  const int n = op.sites();
  Operator acc = op;
  Operator cur = op;
  for (int x = 1; x < n; ++x) {
    cur = shift(cur);
    acc += cur;
  }
  return acc;
}

Operator parity_operator(int n) {
  require_sites(n, 1);
  Operator p(n);
  const std::uint32_t dim = 1u << n;
  const std::uint32_t mask = dim - 1;
  for (std::uint32_t s = 0; s < dim; ++s) p.matrix()(s ^ mask, s) = 1.0;
  return p;
}

Operator spin_current(int n) {
  require_sites(n, 2);
  Operator j(n);
  const std::uint32_t dim = 1u << n;
  for (int x = 0; x < n; ++x) {
    const int y = (x + 1) % n;
    for (std::uint32_t in = 0; in < dim; ++in) {
      const bool dx = spin_down(in, n, x);
      const bool dy = spin_down(in, n, y);
      if (dx == dy) continue;
      // s+_x s-_y acts when x is down and y is up
      j.matrix()(flip(flip(in, n, x), n, y), in) += dx ? kI : -kI;
    }
  }
  return j;
}

Operator magnetization(int n) {
  require_sites(n, 1);
  Operator mz(n);
  const std::uint32_t dim = 1u << n;
  for (std::uint32_t s = 0; s < dim; ++s) {
    int total = 0;
    for (int x = 0; x < n; ++x) total += spin_down(s, n, x) ? -1 : 1;
    mz.matrix()(s, s) = static_cast<double>(total);
  }
  return mz;
}

StandardObservables standard_observables(int n) {
  require_sites(n, 2);
  return {parity_operator(n), spin_current(n), magnetization(n)};
}

}  // namespace xxz
