#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <span>

#include "xxz/anisotropy.hpp"

namespace xxz {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense storage cap: 2^12 x 2^12 complex doubles.
inline constexpr int kMaxSites = 12;

inline constexpr double kDefaultTol = 1e-10;

/// Pauli basis index set {0, z, +, -} in the order used for every MPO.
enum class Pauli : int { Id = 0, Z = 1, Plus = 2, Minus = 3 };

inline constexpr std::array<Pauli, 4> kPauliBasis = {Pauli::Id, Pauli::Z, Pauli::Plus,
                                                     Pauli::Minus};

/// sigma^alpha as a 2x2 matrix; basis |0> = up (sigma^z = +1).
Matrix pauli(Pauli alpha);
char pauli_symbol(Pauli alpha);

/// Operator on an n-site spin-1/2 chain, stored as a full 2^n x 2^n matrix.
/// Site 0 is the leftmost tensor factor (most significant bit of an index).
class Operator {
 public:
  Operator() = default;
  /// Zero operator on n sites.
  explicit Operator(int n);
  Operator(int n, Matrix entries);

  static Operator identity(int n);

  int sites() const noexcept { return n_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  Matrix& matrix() noexcept { return m_; }
  cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  Operator adjoint() const;
  Operator transpose() const;
  Operator conjugate() const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(cplx z);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, cplx z) { return a *= z; }
  friend Operator operator*(cplx z, Operator a) { return a *= z; }
  friend Operator operator*(const Operator& a, const Operator& b);

 private:
  int n_ = 0;
  Matrix m_;
};

void require_sites(int n, int min_sites = 1);
void require_same_sites(const Operator& a, const Operator& b, const char* where);

Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

/// Frobenius norm of the stored matrix (unnormalized).
double frobenius(const Operator& a);
/// Largest absolute entry.
double max_abs(const Operator& a);

/// Normalized Hilbert-Schmidt product (a, b) = 2^-n tr(a^dagger b).
cplx hs_inner(const Operator& a, const Operator& b);
/// ||a||_HS = sqrt((a, a)).
double hs_norm(const Operator& a);

/// a (x) b on n_a + n_b sites.
Operator tensor(const Operator& a, const Operator& b);
/// Places a local r-site operator on sites x .. x+r-1 of an n-site chain.
Operator embed(const Operator& local, int n, int x);
/// sigma^alpha on site x of an n-site chain.
Operator site_pauli(int n, int x, Pauli alpha);
/// Product of sigma^alpha_k over all sites, e.g. (sigma^z)^{(x) n}.
Operator uniform_product(int n, const Matrix& one_site);
/// Tensor product of a Pauli string, site 0 first.
Operator pauli_string(std::span<const Pauli> alphas);

struct BoundarySpec {
  enum class Kind { Open, Periodic, Twisted };
  Kind kind = Kind::Periodic;
  double flux = 0.0;

  static BoundarySpec open() { return {Kind::Open, 0.0}; }
  static BoundarySpec periodic() { return {Kind::Periodic, 0.0}; }
  static BoundarySpec twisted(double flux) { return {Kind::Twisted, flux}; }
};

/// Two-site interaction 2 s+ s- + 2 s- s+ + Delta sz sz.
Operator bond_hamiltonian(const Anisotropy& a);

/// XXZ Hamiltonian. Twisted boundaries add
/// 2 e^{i flux} s+_0 s-_{n-1} + 2 e^{-i flux} s-_0 s+_{n-1} + Delta sz_0 sz_{n-1}.
Operator build_hamiltonian(const Anisotropy& a, int n, const BoundarySpec& bc);

/// Translation-invariant form of the twisted Hamiltonian with per-bond
/// phases e^{-i flux/n} on s+_x s-_{x+1}.
Operator homogeneous_twisted_hamiltonian(const Anisotropy& a, int n, double flux);

/// Diagonal unitary exp(i flux/n sum_x x sz_x / 2).
Operator canonical_gauge(int n, double flux);

/// Periodic left shift: s^{a0} (x) s^{a1} ... (x) s^{a_{n-1}} -> s^{a1} (x) ... (x) s^{a0}.
Operator shift(const Operator& op);
/// shift applied k times (k may be negative).
Operator shift_power(const Operator& op, int k);
/// Sum over x of shift^x(op).
Operator shift_sum(const Operator& op);

struct StandardObservables {
  Operator parity;         // P = (sigma^x)^{(x) n}
  Operator current;        // J_n, periodic
  Operator magnetization;  // M^z_n
};

StandardObservables standard_observables(int n);
Operator parity_operator(int n);
Operator spin_current(int n);
Operator magnetization(int n);

}  // namespace xxz
