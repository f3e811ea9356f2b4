#include "xxz/current_expansion.hpp"

#include <algorithm>
#include <string>

#include "xxz/densities.hpp"
#include "xxz/errors.hpp"
#include "xxz/lax.hpp"

namespace xxz {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct Enumerator {
  const RestrictedB& b;
  const std::vector<cplx>& ik;
  int r;
  std::vector<Pauli> path;
  std::vector<ExpansionTerm>& out;

  void walk(const Eigen::RowVectorXcd& state, int n_plus, int n_minus, int n_z) {
    if (static_cast<int>(path.size()) == r - 2) {
      const cplx amp = state(0);
      if (amp == 0.0) return;
      ExpansionTerm t{r, path, amp, 0.0, n_plus, n_z};
      if (n_z % 2 == 0 && n_plus == n_minus) {
        cplx s = 0.0;
        for (int j = 0; j <= n_plus; ++j) s += binomial(n_plus, j) * ik[j + n_z / 2];
        t.coefficient = amp * s;
      }
      out.push_back(std::move(t));
      return;
    }
    for (Pauli alpha : kPauliBasis) {
      const Eigen::RowVectorXcd next = state * at(b.B, alpha);
      if (next.isZero(0.0)) continue;
      path.push_back(alpha);
      walk(next, n_plus + (alpha == Pauli::Plus), n_minus + (alpha == Pauli::Minus), n_z + (alpha == Pauli::Z));
      path.pop_back();
    }
  }
};

}  // namespace

std::string ExpansionTerm::label() const {
  std::string s = "-";
  for (Pauli a : interior) s += pauli_symbol(a);
  return s + "+";
}

cplx CurrentExpansion::a2() const {
  for (const auto& t : terms)
    if (t.r == 2) return t.coefficient;
  return 0.0;
}

double CurrentExpansion::max_coefficient(int r) const {
  double best = 0.0;
  for (const auto& t : terms)
    if (t.r == r) best = std::max(best, std::abs(t.coefficient));
  return best;
}

Operator CurrentExpansion::density(int r) const {
  Operator out(r);
  std::vector<Pauli> string(r);
  for (const auto& t : terms) {
    if (t.r != r || t.coefficient == 0.0) continue;
    string.front() = Pauli::Minus;
    std::copy(t.interior.begin(), t.interior.end(), string.begin() + 1);
    string.back() = Pauli::Plus;
    out += t.coefficient * pauli_string(string);
  }
  return out;
}

CurrentExpansion current_expansion(const Anisotropy& a, int r_max, IkNormalization norm) {
  if (r_max < 2) throw InvalidArgument("current_expansion: r_max must be >= 2");
  if (r_max > kMaxDensitySupport) {
    throw SizeError("current_expansion: r_max exceeds " + std::to_string(kMaxDensitySupport));
  }
  CurrentExpansion e{a, r_max, norm, monomial_integrals_Ik(a, (r_max - 2) / 2, norm), {}};
  const RestrictedB b = restricted_B(a);
  Eigen::RowVectorXcd start = Eigen::RowVectorXcd::Zero(a.m() - 1);
  start(0) = 1.0;
  for (int r = 2; r <= r_max; ++r) {
    Enumerator en{b, e.Ik, r, {}, e.terms};
    en.walk(start, 0, 0, 0);
  }
  return e;
}

Operator reassemble(const CurrentExpansion& e, int n, int nu) {
  require_sites(n, 2);
  if (nu != 1 && nu != -1) throw InvalidArgument("reassemble: nu must be +1 or -1");
  Operator local(n);
  for (int r = 2; r <= std::min(n, e.r_max); ++r) local += tensor(Operator::identity(n - r), e.density(r));
  const Operator prime = shift_sum(local);
  const Operator p = parity_operator(n);
  return 0.5 * (prime + static_cast<double>(nu) * (p * prime * p));
}

}  // namespace xxz
