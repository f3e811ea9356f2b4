#pragma once

#include <string>
#include <vector>

#include "xxz/anisotropy.hpp"
#include "xxz/chain.hpp"

namespace xxz {

struct ChargeSet {
  double phi;               // evaluation point actually used
  std::vector<Operator> Q;  // Q[j-1] = d^j/dphi^j log V_n(phi, 1/2)
  std::string warning;      // non-empty when the point had to be shifted
};

/// Local charges from the spin-1/2 transfer matrix at phi = eta/2, j_max in {1, 2}.
/// Derivatives come from a nilpotent jet ancilla, not differencing.
ChargeSet fundamental_charges(const Anisotropy& a, int n, int j_max = 2);

/// Relative residual of the least-squares fit of q onto span{H_pbc, 1}.
double hamiltonian_span_residual(const Anisotropy& a, const Operator& q);

}  // namespace xxz
