#pragma once

#include <vector>

#include "xxz/chain.hpp"

namespace xxz {

struct EnergyCluster {
  double energy;     // mean of the clustered eigenvalues
  int multiplicity;
};

struct TimeAverageResult {
  int n;
  std::vector<EnergyCluster> clusters;
  Operator Abar;
  double susceptibility;     // (Abar, Abar) / (2n)
  double commutator_residual;  // ||[H, Abar]||_HS
};

/// Infinite-time average of A under H: the block-diagonal part of A in the
/// eigenbasis of H, eigenvalues within cluster_tol * ||H|| counted as degenerate.
TimeAverageResult time_average(const Operator& H, const Operator& A, double cluster_tol = 1e-8);

}  // namespace xxz
