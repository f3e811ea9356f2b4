#pragma once

#include <string_view>
#include <vector>

#include "xxz/anisotropy.hpp"
#include "xxz/chain.hpp"

namespace xxz {

/// Maximal boundary driving: sigma^+ on the first site, sigma^- on the last, rate epsilon.
struct LindbladSetup {
  Anisotropy params;
  int n;
  double epsilon;
};

/// Case (i) factors through W(0, s), case (ii) through W(pi/2, s).
enum class SteadyCase { Phi0, PhiHalfPi };

std::string_view case_name(SteadyCase c);

/// -i[H_obc, rho] + eps sum_k (2 A_k rho A_k^dagger - {A_k^dagger A_k, rho})
Operator lindblad_apply(const LindbladSetup& setup, const Operator& rho);

/// Generator on column-major vec(rho), 4^n x 4^n.
Matrix lindblad_superoperator(const LindbladSetup& setup);

/// Principal branch of the matching condition:
/// case (i) cot(eta s) = -i eps / (2 sin eta), case (ii) tan(eta s) = i eps / (2 sin eta).
cplx solve_spin_for_epsilon(const Anisotropy& a, SteadyCase c, double epsilon);
/// Inverse map, used for back-substitution.
cplx epsilon_from_spin(const Anisotropy& a, SteadyCase c, cplx s);

struct SteadyStateFactor {
  SteadyCase kind;
  cplx s;
  Operator S;    // upper triangular, unit diagonal
  Operator rho;  // S S^dagger / tr(S S^dagger)
  double defining_residual;     // ||[H, S_n] + i eps (sz (x) S_{n-1} - S_{n-1} (x) sz)||_HS
  double fixed_point_residual;  // ||Lambda(rho)||_HS
  double diagonal_deviation;    // max |S_kk - 1|
  double lower_part;            // max |S_jk|, j > k
};

/// Throws SingularPoint if the normalization sin(eta s) or cos(eta s) degenerates.
SteadyStateFactor steady_state(const LindbladSetup& setup, SteadyCase c);

struct NullSpaceSolution {
  Operator rho;
  int kernel_dim;
  std::vector<double> smallest_singular_values;  // ascending, up to 4
};

/// Kernel of the superoperator by SVD; n <= 4.
NullSpaceSolution null_space_steady_state(const LindbladSetup& setup, double rel_cutoff = 1e-10);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const Operator& rho, const Operator& sigma);

}  // namespace xxz
