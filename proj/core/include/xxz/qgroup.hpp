#pragma once

#include "xxz/anisotropy.hpp"
#include "xxz/chain.hpp"

namespace xxz {

/// Truncated highest-weight representation of U_q(sl2) at complex spin s.
///
/// Basis |k>, k = 0..m-1, with Sz|k> = (s-k)|k>. The raising amplitude
/// sin(m eta)/sin(eta) vanishes, so the m-dimensional truncation is exact.
struct VermaRep {
  Anisotropy params;
  cplx s;
  Matrix Sz;
  Matrix Splus;
  Matrix Sminus;

  int dim() const noexcept { return static_cast<int>(Sz.rows()); }
};

VermaRep build_verma(const Anisotropy& a, cplx s);

/// Leading (d x d) block of a representation. Invariant when d = 2s+1.
VermaRep leading_block(const VermaRep& rep, int d);

/// max of ||[S+,S-] - sin(2 eta Sz)/sin eta|| and ||[Sz,S+-] -+ S+-||.
double algebra_residual(const VermaRep& rep);

/// Spin flip on the (2s+1)-dimensional irreducible block:
/// U S+- U^-1 = S-+, U Sz U^-1 = -Sz. Requires 2s to be a positive integer
/// with 2s+1 <= m.
Matrix spin_flip_U(const Anisotropy& a, double s);

/// G_flux = diag(1, e^{i flux}, ..., e^{i (m-1) flux}) = exp(-i flux Sz) at s = 0.
Matrix gauge_matrix(const Anisotropy& a, double flux);

/// exp(-i flux Sz_s), the twist inserted under the trace at general s.
Matrix twist_matrix(const VermaRep& rep, double flux);

}  // namespace xxz
