#pragma once

#include <array>
#include <span>
#include <vector>

#include "xxz/chain.hpp"
#include "xxz/lax.hpp"

namespace xxz {

/// One MPO site: physical blocks B(i,j) = sum_alpha c^alpha sigma^alpha(i,j),
/// stored at index 2i+j, each D x D on the auxiliary space.
struct MpoSite {
  std::array<Matrix, 4> block;
  int bond() const { return static_cast<int>(block[0].rows()); }
};

MpoSite mpo_site(const PauliComponents& c);

/// Site that carries only one Pauli component with the given auxiliary matrix.
MpoSite mpo_single(Pauli alpha, const Matrix& aux);

/// Dense operator with entries tr(left * B_0(i0,j0) ... B_{n-1}(i,j) * right),
/// left K x D and right D x K. Boundary vectors, traces and twisted traces
/// are all special cases of the pair (left, right).
///
/// Depth-first over sites with zero-subtree pruning; memory O(n K D).
Operator contract_mpo(std::span<const MpoSite> sites, const Matrix& left, const Matrix& right);

/// Convenience: the same site repeated n times.
Operator contract_uniform(const MpoSite& site, int n, const Matrix& left, const Matrix& right);

}  // namespace xxz
