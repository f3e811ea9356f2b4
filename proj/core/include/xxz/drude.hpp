#pragma once

#include <functional>
#include <vector>

#include "xxz/anisotropy.hpp"
#include "xxz/chain.hpp"
#include "xxz/quadrature.hpp"

namespace xxz {

/// f(phi) = -i (m s_1^2 / pi) / |sin phi|^4. Throws InvalidArgument outside D_m.
cplx current_weight_f(const Anisotropy& a, cplx phi);

/// Coefficient function a(phi); the spin current has a = i/4.
using CoefficientFunction = std::function<cplx(cplx)>;
CoefficientFunction current_coefficient();

struct FredholmReport {
  std::vector<cplx> phis;
  std::vector<cplx> values;      // (1/2) int K(phi, phi') f(phi') d^2 phi'
  std::vector<double> residuals; // |value - conj(a(conj phi))|
  double max_residual = 0.0;
  double quadrature_error = 0.0;
};

FredholmReport fredholm_residual(const Anisotropy& a, const DomainIntegrand& f, const CoefficientFunction& coef,
                                 const std::vector<cplx>& phis, const QuadratureOptions& opts = {});

/// D_K = (s_1^2 / sin^2(pi/m)) (1 - (m / 2 pi) sin(2 pi / m))
double drude_bound_DK(const Anisotropy& a);

struct MazurFunctional {
  double linear;     // int Re(a f)
  cplx quadratic;    // int int K(conj phi, phi') conj(f(phi)) f(phi')
  double value;      // linear - Re(quadratic) / 4
  double quadrature_error;
  /// F[t f] = t linear - t^2 Re(quadratic) / 4
  double scaled(double t) const { return t * linear - t * t * quadratic.real() / 4; }
};

MazurFunctional mazur_bound_functional(const Anisotropy& a, const DomainIntegrand& f,
                                       const CoefficientFunction& coef, const QuadratureOptions& opts = {});

/// The two normalizations of the monomial integrals I_k = int f cot^{2k}(phi) d^2 phi.
/// Printed is the closed j-sum as usually quoted; it equals the integral only up
/// to the factor -sin^2(pi/m) / (2 s_1^2). Lens is the value of the integral.
enum class IkNormalization { Printed, Lens };

cplx monomial_integral_closed(const Anisotropy& a, int k, IkNormalization norm = IkNormalization::Lens);
std::vector<cplx> monomial_integrals_Ik(const Anisotropy& a, int k_max,
                                        IkNormalization norm = IkNormalization::Lens);
/// Direct quadrature of int f cot^{2k}(phi) d^2 phi.
QuadratureResult monomial_integral_quadrature(const Anisotropy& a, int k, const QuadratureOptions& opts = {});

struct FiniteMazurReport {
  int n;
  std::vector<cplx> grid;
  std::vector<double> gram_singular_values;
  int effective_rank;
  double bound;  // (1/2n) c^dagger G^+ c
  bool odd_family;
};

/// Projection of A onto span{Y^-(phi_i)} (or Y^+ for even A). Parity of A picks
/// the family unless `family` is given as -1 or +1.
FiniteMazurReport finite_n_mazur(const Anisotropy& a, int n, const std::vector<cplx>& grid, const Operator& A,
                                 int family = 0, double cutoff = 1e-10);

/// Nested product grid inside the strip with (2^level + 1)^2 points: Re phi - pi/2
/// on a dyadic subdivision of [-0.8, 0.8] pi/(2m), Im phi of [-0.6, 0.6].
/// Each level contains the previous one.
std::vector<cplx> mazur_grid(const Anisotropy& a, int level);

/// (J_n, Y^-_n(phi)) / n, the finite-size current coefficient.
cplx finite_current_coefficient(const Anisotropy& a, cplx phi, int n);

}  // namespace xxz
