#include "xxz/quadrature.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <string>
#include <vector>

#include "xxz/errors.hpp"
#include "xxz/parallel.hpp"

namespace xxz {

std::string_view backend_name(QuadratureBackend b) {
  return b == QuadratureBackend::Lens ? "lens" : "strip";
}

QuadratureBackend parse_backend(std::string_view name) {
  if (name == "lens") return QuadratureBackend::Lens;
  if (name == "strip") return QuadratureBackend::Strip;
  throw InvalidArgument("unknown quadrature backend '" + std::string(name) + "'");
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw InvalidArgument("gauss_legendre: order must be positive");
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    weights[i] = weights[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

struct Kahan {
  cplx sum = 0.0;
  cplx comp = 0.0;
  void add(cplx v) {
    const cplx y = v - comp;
    const cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

struct Quadtree {
  const PlaneIntegrand& g;
  std::vector<double> x;
  std::vector<double> w;
  double tol_density;  // tolerance per unit area
  int max_depth;
  Kahan value;
  double error = 0.0;
  std::size_t cells = 0;
  bool exhausted = false;
  std::vector<std::array<double, 4>>* accepted = nullptr;

  cplx rule(double x0, double x1, double y0, double y1) const {
    const double hx = 0.5 * (x1 - x0);
    const double hy = 0.5 * (y1 - y0);
    const double cx = 0.5 * (x0 + x1);
    const double cy = 0.5 * (y0 + y1);
    cplx s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      cplx row = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) row += w[j] * g(cx + hx * x[i], cy + hy * x[j]);
      s += w[i] * row;
    }
    return s * hx * hy;
  }

  void refine(double x0, double x1, double y0, double y1, cplx coarse, int depth) {
    const double xm = 0.5 * (x0 + x1);
    const double ym = 0.5 * (y0 + y1);
    const std::array<std::array<double, 4>, 4> kids = {{
        {x0, xm, y0, ym}, {xm, x1, y0, ym}, {x0, xm, ym, y1}, {xm, x1, ym, y1}}};
    std::array<cplx, 4> part;
    cplx fine = 0.0;
    for (int k = 0; k < 4; ++k) {
      part[k] = rule(kids[k][0], kids[k][1], kids[k][2], kids[k][3]);
      fine += part[k];
    }
    const double diff = std::abs(fine - coarse);
    const double allowed = tol_density * (x1 - x0) * (y1 - y0);
    if (diff <= allowed || depth >= max_depth) {
      if (diff > allowed) exhausted = true;
      value.add(fine);
      error += diff;
      ++cells;
      if (accepted) accepted->push_back({x0, x1, y0, y1});
      return;
    }
    for (int k = 0; k < 4; ++k) refine(kids[k][0], kids[k][1], kids[k][2], kids[k][3], part[k], depth + 1);
  }
};

}  // namespace

namespace {

QuadratureResult adaptive(const PlaneIntegrand& g, double x0, double x1, double y0, double y1, double tol,
                          int order, int max_depth, int root, std::vector<std::array<double, 4>>* cells_out) {
  if (!(tol > 0.0)) throw InvalidArgument("integrate_rectangle: tol must be positive");
  if (!(x1 > x0) || !(y1 > y0)) throw InvalidArgument("integrate_rectangle: empty rectangle");
  std::vector<double> nodes;
  std::vector<double> weights;
  gauss_legendre(order, nodes, weights);

  // root cells evaluated independently, reduced in fixed order
  if (root < 1) throw InvalidArgument("adaptive quadrature: root grid must be at least 1x1");
  const int kRoot = root;
  const double area = (x1 - x0) * (y1 - y0);
  std::vector<Quadtree> trees;
  trees.reserve(kRoot * kRoot);
  std::vector<std::vector<std::array<double, 4>>> accepted(kRoot * kRoot);
  for (int k = 0; k < kRoot * kRoot; ++k) {
    trees.push_back({g, nodes, weights, tol / area, max_depth, {}});
    if (cells_out) trees.back().accepted = &accepted[k];
  }
  const double dx = (x1 - x0) / kRoot;
  const double dy = (y1 - y0) / kRoot;
  parallel_for(trees.size(), [&](std::size_t k) {
    const double a0 = x0 + dx * static_cast<double>(k % kRoot);
    const double b0 = y0 + dy * static_cast<double>(k / kRoot);
    Quadtree& t = trees[k];
    t.refine(a0, a0 + dx, b0, b0 + dy, t.rule(a0, a0 + dx, b0, b0 + dy), 0);
  });

  QuadratureResult out{0.0, 0.0, 0.0, 0};
  Kahan total;
  bool exhausted = false;
  for (const Quadtree& t : trees) {
    total.add(t.value.sum);
    out.error += t.error;
    out.cells += t.cells;
    exhausted = exhausted || t.exhausted;
  }
  out.value = total.sum;
  if (exhausted && out.error > tol) {
    throw AccuracyError("adaptive quadrature did not reach tol " + std::to_string(tol), out.error);
  }
  if (cells_out) {
    for (const auto& part : accepted) cells_out->insert(cells_out->end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

QuadratureResult integrate_rectangle(const PlaneIntegrand& g, double x0, double x1, double y0, double y1,
                                     double tol, int order, int max_depth) {
  return adaptive(g, x0, x1, y0, y1, tol, order, max_depth, 4, nullptr);
}

cplx lens_to_phi(cplx z) { return kPi / 2 - std::atan(z); }

double lens_half_width(int m, double y) {
  const double r = 1.0 / std::sin(kPi / m);
  const double c = std::cos(kPi / m) / std::sin(kPi / m);
  return std::sqrt(std::max(0.0, r * r - y * y)) - c;
}

double lens_area(int m) {
  const double a = kPi / m;
  return 2.0 / (std::sin(a) * std::sin(a)) * (a - std::sin(a) * std::cos(a));
}

namespace {

// Parameter rectangle of a backend and its map to (phi, Jacobian).
struct DomainChart {
  double x0, x1, y0, y1;
  std::function<std::pair<cplx, double>(double, double)> map;
};

DomainChart chart(const Anisotropy& a, const QuadratureOptions& opts) {
  const int m = a.m();
  if (opts.backend == QuadratureBackend::Lens) {
    // y = sin(pi v / 2), x = t h(y); d^2 phi = d^2 z / |1 + z^2|^2
    return {-1.0, 1.0, -1.0, 1.0, [m](double t, double v) {
              const double y = std::sin(kPi * v / 2);
              const double h = lens_half_width(m, y);
              const cplx z(t * h, y);
              const double jac = h * (kPi / 2) * std::cos(kPi * v / 2) / std::norm(1.0 + z * z);
              return std::pair<cplx, double>(lens_to_phi(z), jac);
            }};
  }
  const double hw = kPi / (2.0 * m);
  const double cut = opts.im_cutoff > 0.0 ? opts.im_cutoff : 8.0 * m;
  return {kPi / 2 - hw, kPi / 2 + hw, -cut, cut,
          [](double x, double y) { return std::pair<cplx, double>(cplx(x, y), 1.0); }};
}

PlaneIntegrand pullback(const DomainChart& c, const DomainIntegrand& g) {
  return [&c, &g](double x, double y) -> cplx {
    const auto [phi, jac] = c.map(x, y);
    return jac == 0.0 ? cplx(0.0) : g(phi) * jac;
  };
}

}  // namespace

QuadratureResult integrate_over_domain(const Anisotropy& a, const DomainIntegrand& g,
                                       const QuadratureOptions& opts) {
  const DomainChart c = chart(a, opts);
  QuadratureResult r = adaptive(pullback(c, g), c.x0, c.x1, c.y0, c.y1, opts.tol, opts.order, opts.max_depth,
                                opts.root_cells, nullptr);
  if (opts.backend == QuadratureBackend::Strip) {
    // integrands decay at least like e^{-2|Im phi|}: tail <= width * |g(edge)| / 2 per side
    const double width = c.x1 - c.x0;
    r.tail = 0.5 * width * (std::abs(g(cplx(kPi / 2, c.y1))) + std::abs(g(cplx(kPi / 2, c.y0))));
  }
  return r;
}

DomainRule domain_rule(const Anisotropy& a, const DomainIntegrand& probe, const QuadratureOptions& opts,
                       int split) {
  if (split < 0) throw InvalidArgument("domain_rule: split must be >= 0");
  const DomainChart c = chart(a, opts);
  std::vector<std::array<double, 4>> cells;
  adaptive(pullback(c, probe), c.x0, c.x1, c.y0, c.y1, opts.tol, opts.order, opts.max_depth, opts.root_cells,
           &cells);
  std::vector<double> nodes;
  std::vector<double> weights;
  gauss_legendre(opts.order, nodes, weights);
  const int parts = 1 << split;
  DomainRule rule;
  for (const auto& cell : cells) {
    const double dx = (cell[1] - cell[0]) / parts;
    const double dy = (cell[3] - cell[2]) / parts;
    for (int px = 0; px < parts; ++px)
      for (int py = 0; py < parts; ++py) {
        const double cx = cell[0] + dx * (px + 0.5);
        const double cy = cell[2] + dy * (py + 0.5);
        for (std::size_t i = 0; i < nodes.size(); ++i)
          for (std::size_t j = 0; j < nodes.size(); ++j) {
            const auto [phi, jac] = c.map(cx + 0.5 * dx * nodes[i], cy + 0.5 * dy * nodes[j]);
            if (jac == 0.0) continue;
            rule.phi.push_back(phi);
            rule.weight.push_back(weights[i] * weights[j] * 0.25 * dx * dy * jac);
          }
      }
  }
  return rule;
}

}  // namespace xxz
