#include "xxz/drude.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "xxz/errors.hpp"
#include "xxz/quasilocal.hpp"
#include "xxz/transfer.hpp"

namespace xxz {

namespace {

constexpr cplx kI{0.0, 1.0};

double current_scale(const Anisotropy& a) {
  const double s1 = a.s(1);
  return a.m() * s1 * s1 / kPi;
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

cplx current_weight_f(const Anisotropy& a, cplx phi) {
  if (!in_domain(a, phi)) throw InvalidArgument("current_weight_f: phi outside the strip D_m");
  const double s4 = std::pow(std::norm(std::sin(phi)), 2);
  return -kI * current_scale(a) / s4;
}

CoefficientFunction current_coefficient() {
  return [](cplx) { return cplx(0.0, 0.25); };
}

FredholmReport fredholm_residual(const Anisotropy& a, const DomainIntegrand& f, const CoefficientFunction& coef,
                                 const std::vector<cplx>& phis, const QuadratureOptions& opts) {
  FredholmReport rep;
  for (cplx phi : phis) {
    const QuadratureResult q =
        integrate_over_domain(a, [&](cplx p) { return kernel_K_closed(a, phi, p) * f(p); }, opts);
    const cplx value = 0.5 * q.value;
    const double res = std::abs(value - std::conj(coef(std::conj(phi))));
    rep.phis.push_back(phi);
    rep.values.push_back(value);
    rep.residuals.push_back(res);
    rep.max_residual = std::max(rep.max_residual, res);
    rep.quadrature_error = std::max(rep.quadrature_error, 0.5 * q.error);
  }
  return rep;
}

double drude_bound_DK(const Anisotropy& a) {
  const int m = a.m();
  const double s1 = a.s(1);
  const double sm = std::sin(kPi / m);
  return s1 * s1 / (sm * sm) * (1.0 - m / (2.0 * kPi) * std::sin(2.0 * kPi / m));
}

MazurFunctional mazur_bound_functional(const Anisotropy& a, const DomainIntegrand& f,
                                       const CoefficientFunction& coef, const QuadratureOptions& opts) {
  const QuadratureResult lin =
      integrate_over_domain(a, [&](cplx p) { return cplx((coef(p) * f(p)).real(), 0.0); }, opts);
  // nested: the inner row integral resolves the kernel near the strip edges, the
  // outer integrand conj(f) * row is smooth, so a single low-order root suffices
  QuadratureOptions outer = opts;
  outer.root_cells = 1;
  outer.order = std::min(opts.order, 6);
  double inner_error = 0.0;
  std::mutex error_mutex;
  const QuadratureResult quad = integrate_over_domain(
      a,
      [&](cplx p) {
        const cplx fp = f(p);
        if (fp == 0.0) return cplx(0.0);
        const QuadratureResult row =
            integrate_over_domain(a, [&](cplx q) { return kernel_K_closed(a, std::conj(p), q) * f(q); }, opts);
        {
          std::lock_guard<std::mutex> lock(error_mutex);
          inner_error = std::max(inner_error, row.error);
        }
        return std::conj(fp) * row.value;
      },
      outer);
  // row errors propagate through the outer weight: bounded by max error * int |f|
  const QuadratureResult mass = integrate_over_domain(a, [&](cplx p) { return cplx(std::abs(f(p))); }, outer);
  MazurFunctional out{lin.value.real(), quad.value, 0.0,
                      lin.error + quad.error + inner_error * mass.value.real()};
  out.value = out.linear - out.quadratic.real() / 4;
  return out;
}

cplx monomial_integral_closed(const Anisotropy& a, int k, IkNormalization norm) {
  if (k < 0) throw InvalidArgument("monomial_integral_closed: k must be >= 0");
  const int m = a.m();
  const double c = std::cos(kPi / m);
  const double sm = std::sin(kPi / m);
  double sum = 0.0;
  for (int j = 0; j <= 2 * k + 1; ++j) {
    const double sign = (j % 2) ? -1.0 : 1.0;
    sum += sign * binomial(2 * k + 1, j) * (sinc(kPi * (j + 1) / m) - sinc(kPi * (j - 1) / m)) *
           std::pow(c, 2 * k + 1 - j);
  }
  const cplx printed = kI * std::pow(sm, -2.0 * k) / (2.0 * k + 1.0) * sum;
  if (norm == IkNormalization::Printed) return printed;
  const double s1 = a.s(1);
  return -2.0 * s1 * s1 / (sm * sm) * printed;
}

std::vector<cplx> monomial_integrals_Ik(const Anisotropy& a, int k_max, IkNormalization norm) {
  if (k_max < 0) throw InvalidArgument("monomial_integrals_Ik: k_max must be >= 0");
  std::vector<cplx> out;
  for (int k = 0; k <= k_max; ++k) out.push_back(monomial_integral_closed(a, k, norm));
  return out;
}

QuadratureResult monomial_integral_quadrature(const Anisotropy& a, int k, const QuadratureOptions& opts) {
  if (k < 0) throw InvalidArgument("monomial_integral_quadrature: k must be >= 0");
  const double scale = current_scale(a);
  return integrate_over_domain(
      a,
      [&](cplx p) {
        const cplx s2 = std::sin(p) * std::sin(p);
        const cplx cot = std::cos(p) / std::sin(p);
        return -kI * scale / std::norm(s2) * std::pow(cot, 2 * k);
      },
      opts);
}

FiniteMazurReport finite_n_mazur(const Anisotropy& a, int n, const std::vector<cplx>& grid, const Operator& A,
                                 int family, double cutoff) {
  require_sites(n, 2);
  if (grid.empty()) throw InvalidArgument("finite_n_mazur: empty grid");
  if (A.sites() != n) throw InvalidArgument("finite_n_mazur: observable size does not match n");
  for (cplx p : grid)
    if (!in_domain(a, p)) throw InvalidArgument("finite_n_mazur: grid point outside D_m");

  const Operator par = parity_operator(n);
  if (family == 0) {
    const Operator pap = par * A * par;
    const double scale = std::max(frobenius(A), 1e-300);
    if (frobenius(pap + A) < 1e-12 * scale) {
      family = -1;
    } else if (frobenius(pap - A) < 1e-12 * scale) {
      family = 1;
    } else {
      throw InvalidArgument("finite_n_mazur: observable has no definite parity");
    }
  }
  if (family != 1 && family != -1) throw InvalidArgument("finite_n_mazur: family must be -1, 0 or +1");

  std::vector<Operator> ys;
  for (cplx p : grid) {
    const ParitySplit split = parity_split(build_Y(a, p, n));
    ys.push_back(family < 0 ? split.minus : split.plus);
  }
  const Eigen::Index k = static_cast<Eigen::Index>(ys.size());
  Matrix gram(k, k);
  Vector c(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    c(i) = hs_inner(ys[i], A);
    for (Eigen::Index j = 0; j < k; ++j) gram(i, j) = hs_inner(ys[i], ys[j]);
  }
  Eigen::JacobiSVD<Matrix> svd(gram, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  FiniteMazurReport rep{n, grid, {}, 0, 0.0, family < 0};
  Vector proj = svd.matrixU().adjoint() * c;
  cplx acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    rep.gram_singular_values.push_back(sv(i));
    if (sv(i) > cutoff * smax && sv(i) > 0.0) {
      ++rep.effective_rank;
      // Gram is Hermitian positive semidefinite, so U = V on the retained range
      acc += std::norm(proj(i)) / sv(i);
    }
  }
  rep.bound = acc.real() / (2.0 * n);
  return rep;
}

cplx finite_current_coefficient(const Anisotropy& a, cplx phi, int n) {
  const Operator ym = parity_split(build_Y(a, phi, n)).minus;
  return hs_inner(spin_current(n), ym) / static_cast<double>(n);
}

std::vector<cplx> mazur_grid(const Anisotropy& a, int level) {
  if (level < 0 || level > 5) throw InvalidArgument("mazur_grid: level must be in [0, 5]");
  const int k = (1 << level) + 1;
  const double ur = 0.8 * kPi / (2.0 * a.m());
  const double vr = 0.6;
  std::vector<cplx> g;
  g.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      g.emplace_back(kPi / 2 + ur * (2.0 * i / (k - 1) - 1.0), vr * (2.0 * j / (k - 1) - 1.0));
  return g;
}

}  // namespace xxz
