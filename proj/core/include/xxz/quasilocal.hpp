#pragma once

#include <optional>
#include <vector>

#include "xxz/anisotropy.hpp"
#include "xxz/chain.hpp"

namespace xxz {

/// T and V on the reduced auxiliary space |1>..|m-1>, symmetrized by |k> -> |s_k| |k>.
struct ReducedTransferMatrix {
  Anisotropy params;
  cplx phi;
  cplx phi_prime;
  Matrix T;
  Matrix V;
};

/// Throws SingularPoint when sin(phi) or sin(phi') vanishes.
ReducedTransferMatrix build_T_V(const Anisotropy& a, cplx phi, cplx phi_prime);

/// sum_alpha w_alpha (X^alpha(phi1) G_th1) (x) (X^alpha(phi2) G_th2), w = {1, 1, 1/2, 1/2},
/// X = L0 (or L1 for the vertex), on the full m^2-dimensional doubled space.
Matrix doubled_transfer(const Anisotropy& a, cplx phi1, double th1, cplx phi2, double th2,
                        bool vertex = false);

/// Restriction of a doubled matrix to the excited sector, indices (j, k) with j, k >= 1.
Matrix excited_sector(const Matrix& doubled, int m);

/// kappa_r = (1/4) <1| T(phi, phi')^{r-2} |1>
cplx kappa_r(const Anisotropy& a, cplx phi, cplx phi_prime, int r);

/// ||q_r(phi)||^2_HS = kappa_r(conj(phi), phi).
double q_norm_sq(const Anisotropy& a, cplx phi, int r);

/// ||p_n(phi; flux)||^2_HS: trace of TT^{n-1} VV over the full excited doubled sector.
double p_norm_sq(const Anisotropy& a, cplx phi, int n, double flux = 0.0);

/// tr{T^{n-1} V} on the diagonal sector only. Misses the k != k' terms of the
/// doubled trace, so it differs from p_norm_sq in general.
cplx p_norm_sq_diagonal(const Anisotropy& a, cplx phi, int n);

/// |Re phi - pi/2| < pi/(2m) - 1e-12
bool in_domain(const Anisotropy& a, cplx phi);

struct QuasilocalityCertificate {
  Anisotropy params;
  cplx phi;
  double tau1;
  double xi;  // +inf when tau1 == 0
  std::optional<double> gamma;        // undefined when tau1 == 0
  std::optional<double> gamma_prime;
  bool in_domain;
  double a_min_eig;   // smallest eigenvalue of A = cos(2u) - E
  double e_max_eig;   // largest eigenvalue of E, expected cos(pi/m)
  double dad_residual;  // ||(1 - T)|sin phi|^2 - D A D||
};

QuasilocalityCertificate contraction_certificate(const Anisotropy& a, cplx phi, int fit_max = 8);

/// Real part u* of phi = pi/2 + u + i v where tau1 reaches 1, found by
/// bisection on u in (0, pi/2). Expected pi/(2m).
double domain_boundary(const Anisotropy& a, double v, double tol = 1e-13);

/// K(phi, phi') = (1/4) <1|(1 - T)^{-1}|1> by linear solve; SingularPoint if 1 - T is singular.
cplx kernel_K(const Anisotropy& a, cplx phi, cplx phi_prime);
/// Closed trigonometric form; removable 0/0 points use the analytic limit.
cplx kernel_K_closed(const Anisotropy& a, cplx phi, cplx phi_prime);
/// sum_{r=2}^{r_max} kappa_r
cplx kernel_K_series(const Anisotropy& a, cplx phi, cplx phi_prime, int r_max);

/// psi_j = x_j |s_j| / |s_1|, j = 1..m-1, with (1 - T) x = e_1.
Vector psi_solve(const Anisotropy& a, cplx phi, cplx phi_prime);
/// 2 (-1)^j (sin phi sin phi' / s_1^2) sin((m-j) w) / sin(m w), w = phi + phi'.
Vector psi_explicit(const Anisotropy& a, cplx phi, cplx phi_prime);

struct InnerProductRow {
  int n;
  cplx yy;    // (Y_n(conj phi), Y_n(phi')) / n
  cplx zz;    // (Z_n(conj phi), Z_n(phi')) / n
  cplx zt;    // (Z_n^T(conj phi), Z_n(phi'))
  cplx yt;    // (Y_n^T(conj phi), Y_n(phi'))
};

struct InnerProductReport {
  Anisotropy params;
  cplx phi;
  cplx phi_prime;
  cplx K;
  std::vector<InnerProductRow> rows;
};

/// Dense inner products for each n (n <= 10) against the kernel.
InnerProductReport inner_product_asymptotics(const Anisotropy& a, cplx phi, cplx phi_prime,
                                             const std::vector<int>& ns);

/// (sqrt(n gamma^2 sum_{r=2}^n e^{-2 xi r}) + n |c| gamma' e^{-xi n})^2, c the density prefactor.
/// Throws InvalidArgument if the certificate has no finite constants.
double pseudolocality_bound(const QuasilocalityCertificate& cert, int n);

}  // namespace xxz
