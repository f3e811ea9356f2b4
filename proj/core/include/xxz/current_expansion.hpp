#pragma once

#include <string>
#include <vector>

#include "xxz/anisotropy.hpp"
#include "xxz/chain.hpp"
#include "xxz/drude.hpp"

namespace xxz {

/// One interior string alpha_2 .. alpha_{r-1} of the time-averaged current density.
struct ExpansionTerm {
  int r;
  std::vector<Pauli> interior;
  cplx amplitude;    // <1| B^{alpha_2} ... B^{alpha_{r-1}} |1>
  cplx coefficient;  // amplitude * sum_j C(#+, j) I_{j + #z/2}, zero for odd #z
  int n_plus;
  int n_z;
  std::string label() const;  // e.g. "-0z+"
};

struct CurrentExpansion {
  Anisotropy params;
  int r_max;
  IkNormalization normalization;
  std::vector<cplx> Ik;
  std::vector<ExpansionTerm> terms;  // every string with nonzero walk amplitude

  /// a_2, the coefficient of sigma^- (x) sigma^+.
  cplx a2() const;
  /// Largest |coefficient| among strings of support r.
  double max_coefficient(int r) const;
  /// Dense r-site density sum over strings of support r.
  Operator density(int r) const;
};

/// Enumerates the walks |1> -> |1> of the reduced B matrices up to support r_max <= 10.
CurrentExpansion current_expansion(const Anisotropy& a, int r_max,
                                   IkNormalization norm = IkNormalization::Lens);

/// (1/2)(A' + nu P A' P) with A' = sum_{r <= min(n, r_max)} sum_x S^x(1 (x) density(r)).
/// nu = -1 for the spin current.
Operator reassemble(const CurrentExpansion& e, int n, int nu = -1);

}  // namespace xxz
