#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "xxz/anisotropy.hpp"

namespace xxz {

enum class QuadratureBackend { Lens, Strip };

std::string_view backend_name(QuadratureBackend b);
QuadratureBackend parse_backend(std::string_view name);

struct QuadratureOptions {
  double tol = 1e-7;
  int order = 10;       // Gauss-Legendre points per axis
  int max_depth = 14;
  int root_cells = 4;   // root grid is root_cells x root_cells
  double im_cutoff = 0.0;  // strip only; <= 0 means 8 m
  QuadratureBackend backend = QuadratureBackend::Lens;
};

struct QuadratureResult {
  cplx value;
  double error;       // accumulated |fine - coarse| over accepted cells
  double tail;        // strip only: estimate of the truncated |Im phi| > cutoff part
  std::size_t cells;
};

/// Integrand over the spectral plane, sampled at phi.
using DomainIntegrand = std::function<cplx(cplx)>;
/// Integrand over a rectangle in (x, y).
using PlaneIntegrand = std::function<cplx(double, double)>;

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// Adaptive quadtree over [x0,x1] x [y0,y1]. Each cell compares the tensor rule
/// with the sum over its four children and is accepted once the difference is
/// below tol times its area fraction. Summation order is fixed.
/// Throws AccuracyError when max_depth is exhausted above tol.
QuadratureResult integrate_rectangle(const PlaneIntegrand& g, double x0, double x1, double y0, double y1,
                                     double tol, int order = 10, int max_depth = 14);

/// Integral of g over the strip |Re phi - pi/2| < pi/(2m) with Lebesgue measure
/// d Re(phi) d Im(phi). The lens backend substitutes z = cot(phi).
QuadratureResult integrate_over_domain(const Anisotropy& a, const DomainIntegrand& g,
                                       const QuadratureOptions& opts = {});

/// Fixed node set phi_i with weights w_i (Jacobian included) such that
/// sum_i w_i g(phi_i) approximates the domain integral. Built from the cells an
/// adaptive pass accepted for `probe`; each cell is further split 2^split x 2^split.
struct DomainRule {
  std::vector<cplx> phi;
  std::vector<double> weight;
};

DomainRule domain_rule(const Anisotropy& a, const DomainIntegrand& probe, const QuadratureOptions& opts = {},
                       int split = 0);

/// phi = pi/2 - atan(z), the inverse of z = cot(phi) on the strip.
cplx lens_to_phi(cplx z);
/// Half-width of the lens at height y: sqrt(csc^2(pi/m) - y^2) - cot(pi/m).
double lens_half_width(int m, double y);
/// Area of the lens 2 csc^2(pi/m) (pi/m - sin(pi/m) cos(pi/m)).
double lens_area(int m);

}  // namespace xxz
