#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xxz/anisotropy.hpp"
#include "xxz/chain.hpp"

namespace xxz {

enum class TransferKind { W, V, VTwisted, Z, Y, YTwisted };

std::string_view kind_name(TransferKind k);
/// Inverse of kind_name; throws InvalidArgument on unknown names.
TransferKind parse_kind(std::string_view name);
bool is_modified(TransferKind k);

struct TransferOperator {
  TransferKind kind;
  Anisotropy params;
  cplx phi;
  cplx s;       // unused (0) for Z, Y, YTwisted
  double flux;  // twisted kinds only
  Operator op;
};

/// Dense transfer operator of the requested family. Modified kinds use the
/// analytic derivative ancilla and subtract the magnetization term.
TransferOperator build_transfer(TransferKind kind, const Anisotropy& a, cplx phi, cplx s, double flux,
                                int n);

/// W_n = <0| L^{(x)n} |0>
Operator build_W(const Anisotropy& a, cplx phi, cplx s, int n);
/// V_n = tr_a L^{(x)n}
Operator build_V(const Anisotropy& a, cplx phi, cplx s, int n);
/// V_n(phi, s; flux) = tr_a L^{(x)n} exp(-i flux Sz_s)
Operator build_V_twisted(const Anisotropy& a, cplx phi, cplx s, double flux, int n);
/// Z_n, open boundaries.
Operator build_Z(const Anisotropy& a, cplx phi, int n);
/// Y_n, periodic.
Operator build_Y(const Anisotropy& a, cplx phi, int n);
/// Y_n(phi; flux), commuting with the twisted Hamiltonian.
Operator build_Y_twisted(const Anisotropy& a, cplx phi, double flux, int n);
/// Y'_n: the twist distributed as G_{flux/n} after every extended Lax factor.
/// Equals C Y_n(phi; flux) C^dagger and is shift invariant.
Operator build_Y_gauged(const Anisotropy& a, cplx phi, double flux, int n);

/// sin^2(phi) / (2 eta sin eta), the density normalization.
cplx density_prefactor(const Anisotropy& a, cplx phi);
/// sin(phi) cos(phi) / (2 sin eta), the magnetization subtraction.
cplx magnetization_coefficient(const Anisotropy& a, cplx phi);

struct ResidualEntry {
  std::string label;
  double value;
  double threshold;
  bool negative_control;  // pass means value > threshold
  bool pass() const { return negative_control ? value > threshold : value < threshold; }
};

/// ||[A,B]|| / (||A|| ||B||) in Frobenius norm.
double normalized_commutator(const Operator& a, const Operator& b);

/// Commutator residuals over all pairs drawn from phis x ss. Includes the
/// negative control [W(phi,s), W^T(phi',s')] which must stay above 1e-3.
std::vector<ResidualEntry> commutation_suite(const Anisotropy& a, int n, const std::vector<cplx>& phis,
                                             const std::vector<cplx>& ss, double flux);

/// ||W(phi,s) W(phi,-s) - c^n 1||_HS / |c|^n, c = sin(phi + eta s) sin(phi - eta s).
double spin_inversion_residual(const Anisotropy& a, cplx phi, cplx s, int n);

/// ||W(pi/2, s) - sign^n (sigma^z)^{(x)n} W(0, s + pi/(2 eta))||_HS with sign = +1,
/// or -1 for the (-sigma^z) form.
double symmetry_relation_residual(const Anisotropy& a, cplx s, int n, int sign = 1);

struct ParitySplit {
  Operator plus;
  Operator minus;
};

/// Y+- = (Y +- P Y P) / 2.
ParitySplit parity_split(const Operator& y);

/// ||P X(phi) P - X^T(pi - phi)||_HS for X = Y or Z.
double pt_residual(TransferKind kind, const Anisotropy& a, cplx phi, int n);

/// ||[H_obc, Z_n] - (sz (x) 1 - 1 (x) sz - 2 sin(eta) cot(phi) (1 (x) Z_{n-1} - Z_{n-1} (x) 1))||_HS
double open_leakage_residual(const Anisotropy& a, cplx phi, int n);

}  // namespace xxz
