#pragma once

#include <array>
#include <string>
#include <vector>

#include "xxz/anisotropy.hpp"
#include "xxz/chain.hpp"

namespace xxz {

/// Auxiliary-space matrices indexed by Pauli::{Id, Z, Plus, Minus}.
using PauliComponents = std::array<Matrix, 4>;

inline Matrix& at(PauliComponents& c, Pauli a) { return c[static_cast<int>(a)]; }
inline const Matrix& at(const PauliComponents& c, Pauli a) { return c[static_cast<int>(a)]; }

/// Sum_alpha c^alpha (x) sigma^alpha as a (2D x 2D) matrix, auxiliary index outermost.
Matrix assemble_block(const PauliComponents& c);

/// L(phi, s) = sum_alpha L^alpha (x) sigma^alpha with
///   L^0 = sin(phi) cos(eta Sz), L^z = cos(phi) sin(eta Sz), L^+- = sin(eta) S^-+.
struct LaxFamily {
  Anisotropy params;
  cplx phi;
  cplx s;
  PauliComponents L;

  Matrix block() const { return assemble_block(L); }
};

LaxFamily build_lax(const Anisotropy& a, cplx phi, cplx s);
/// Analytic d/dphi and d^2/dphi^2 of the components.
PauliComponents lax_dphi(const Anisotropy& a, cplx phi, cplx s);
PauliComponents lax_dphi2(const Anisotropy& a, cplx phi, cplx s);
/// Analytic d/ds of the components.
PauliComponents lax_ds(const Anisotropy& a, cplx phi, cplx s);

/// L0 = csc(phi) L(phi, 0), L1 = csc(phi) dL/ds at s = 0.
struct DerivativeLax {
  Anisotropy params;
  cplx phi;
  PauliComponents L0;
  PauliComponents L1;
};

/// Throws SingularPoint when sin(phi) vanishes.
DerivativeLax derivative_lax(const Anisotropy& a, cplx phi);

/// Extended Lax components on aux (x) ancilla, index a*2 + b:
///   L~^alpha = (L0^alpha G) (x) 1_b + (L1^alpha G) (x) sigma^+_b.
/// An empty `right` means G = 1.
PauliComponents extended_lax(const DerivativeLax& d, const Matrix& right = Matrix());

/// Same components right-multiplied by a diagonal auxiliary matrix.
PauliComponents times_right(const PauliComponents& c, const Matrix& g);

struct TransitionCheck {
  std::string name;
  double residual;
  bool ok;
};

struct TransitionReport {
  std::vector<TransitionCheck> checks;
  bool ok() const;
  /// Names of the violated identities, comma separated.
  std::string failures() const;
};

TransitionReport check_boundary_transitions(const DerivativeLax& d, double tol = 1e-12);

/// tau = 2 sin(eta) [cos(phi) cos(eta s) sigma^0 - sin(phi) sin(eta s) sigma^z]
Matrix tau_matrix(const Anisotropy& a, cplx phi, cplx s);

/// ||[h, L (x)_p L] - 2 sin(eta) (L (x)_p L_phi - L_phi (x)_p L)|| on the full 4m^2 space.
double divergence_residual(const Anisotropy& a, cplx phi, cplx s);

/// ||[H_obc, W_n] + tau (x) W_{n-1} - W_{n-1} (x) tau||.
double hnto_relation_residual(const Anisotropy& a, cplx phi, cplx s, int n);

/// Parameter-free restrictions of L0 to |1>..|m-1>:
/// L0^0 = B^0, L0^z = B^z cot(phi), L0^+- = B^+- csc(phi).
struct RestrictedB {
  Anisotropy params;
  PauliComponents B;
};

RestrictedB restricted_B(const Anisotropy& a);

/// Largest deviation of L0 restricted to the reduced space from the B
/// decomposition at the given phi.
double restricted_B_residual(const RestrictedB& b, cplx phi);

/// ||exp(i th Sz) L exp(-i th Sz) - D L D^-1||, D = diag(e^{-i th/2}, e^{i th/2}) on the physical leg.
double u1_covariance_residual(const Anisotropy& a, cplx phi, cplx s, double theta);

}  // namespace xxz
