#include "xxz/time_average.hpp"

#include <algorithm>
#include <cmath>

#include "xxz/errors.hpp"

namespace xxz {

TimeAverageResult time_average(const Operator& H, const Operator& A, double cluster_tol) {
  require_same_sites(H, A, "time_average");
  if (!(cluster_tol > 0.0)) throw InvalidArgument("time_average: cluster tolerance must be positive");
  const Matrix& h = H.matrix();
  if ((h - h.adjoint()).norm() > 1e-10 * std::max(1.0, h.norm())) {
    throw InvalidArgument("time_average: Hamiltonian is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const Matrix& u = es.eigenvectors();
  const Eigen::Index d = ev.size();
  const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);

  // eigenvalues are sorted ascending; split wherever the gap exceeds the band
  std::vector<int> label(d, 0);
  TimeAverageResult out{H.sites(), {}, Operator(H.sites()), 0.0, 0.0};
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= d; ++i) {
    if (i == d || ev(i) - ev(i - 1) > cluster_tol * scale) {
      const int c = static_cast<int>(out.clusters.size());
      for (Eigen::Index k = start; k < i; ++k) label[k] = c;
      out.clusters.push_back({ev.segment(start, i - start).mean(), static_cast<int>(i - start)});
      start = i;
    }
  }

  Matrix a = u.adjoint() * A.matrix() * u;
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i)
      if (label[i] != label[j]) a(i, j) = 0.0;
  out.Abar = Operator(H.sites(), u * a * u.adjoint());
  out.susceptibility = hs_inner(out.Abar, out.Abar).real() / (2.0 * H.sites());
  out.commutator_residual = hs_norm(commutator(H, out.Abar));
  return out;
}

}  // namespace xxz
