#include "xxz/mpo.hpp"

#include <string>

#include "xxz/errors.hpp"
#include "xxz/parallel.hpp"

namespace xxz {

MpoSite mpo_site(const PauliComponents& c) {
  MpoSite s;
  s.block[0] = at(c, Pauli::Id) + at(c, Pauli::Z);
  s.block[1] = at(c, Pauli::Plus);
  s.block[2] = at(c, Pauli::Minus);
  s.block[3] = at(c, Pauli::Id) - at(c, Pauli::Z);
  return s;
}

MpoSite mpo_single(Pauli alpha, const Matrix& aux) {
  PauliComponents c;
  for (auto& x : c) x = Matrix::Zero(aux.rows(), aux.cols());
  at(c, alpha) = aux;
  return mpo_site(c);
}

namespace {

struct Walker {
  std::span<const MpoSite> sites;
  const Matrix& right;
  Matrix& out;
  int n;
  std::vector<Matrix> stack;

  void descend(int depth, std::uint32_t row, std::uint32_t col) {
    const Matrix& cur = stack[depth];
    if (depth == n) {
      out(row, col) = (cur * right).trace();
      return;
    }
    for (int ij = 0; ij < 4; ++ij) {
      const Matrix& b = sites[depth].block[ij];
      Matrix& next = stack[depth + 1];
      next.noalias() = cur * b;
      if (next.isZero(0.0)) continue;
      descend(depth + 1, (row << 1) | (ij >> 1), (col << 1) | (ij & 1));
    }
  }
};

}  // namespace

Operator contract_mpo(std::span<const MpoSite> sites, const Matrix& left, const Matrix& right) {
  const int n = static_cast<int>(sites.size());
  require_sites(n, 1);
  const Eigen::Index d = sites[0].bond();
  for (const auto& s : sites) {
    if (s.bond() != d) throw InvalidArgument("contract_mpo: inconsistent bond dimensions");
  }
  if (left.cols() != d || right.rows() != d || left.rows() != right.cols()) {
    throw InvalidArgument("contract_mpo: boundary shapes do not match bond dimension " +
                          std::to_string(d));
  }
  Operator result(n);
  Matrix& out = result.matrix();

  // split the first site's four physical blocks (and the second's, when present)
  // across workers; each branch writes a disjoint block of the output
  const int split = n >= 2 ? 2 : 1;
  const std::size_t branches = std::size_t{1} << (2 * split);
  parallel_for(branches, [&](std::size_t branch) {
    Walker w{sites, right, out, n, std::vector<Matrix>(n + 1)};
    w.stack[0] = left;
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    for (int k = 0; k < split; ++k) {
      const int ij = static_cast<int>((branch >> (2 * (split - 1 - k))) & 3u);
      w.stack[k + 1] = w.stack[k] * sites[k].block[ij];
      if (w.stack[k + 1].isZero(0.0)) return;
      row = (row << 1) | (ij >> 1);
      col = (col << 1) | (ij & 1);
    }
    w.descend(split, row, col);
  });
  return result;
}

Operator contract_uniform(const MpoSite& site, int n, const Matrix& left, const Matrix& right) {
  require_sites(n, 1);
  std::vector<MpoSite> sites(n, site);
  return contract_mpo(sites, left, right);
}

}  // namespace xxz
