#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "xxz/charges.hpp"
#include "xxz/current_expansion.hpp"
#include "xxz/densities.hpp"
#include "xxz/drude.hpp"
#include "xxz/errors.hpp"
#include "xxz/io.hpp"
#include "xxz/lindblad.hpp"
#include "xxz/quadrature.hpp"
#include "xxz/quasilocal.hpp"
#include "xxz/time_average.hpp"
#include "xxz/transfer.hpp"

namespace xxzcli {

using namespace xxz;

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) throw InvalidArgument(msg);
}

QuadratureOptions quad_opts(const RunConfig& c) {
  QuadratureOptions o;
  o.tol = c.tol;
  o.backend = parse_backend(c.backend);
  return o;
}

std::vector<int> chain_lengths(const RunConfig& c) { return c.ns.empty() ? std::vector<int>{c.n} : c.ns; }

// ---- conserve

bool cmd_conserve(const RunConfig& c, Report& rep) {
  const Anisotropy a(c.l, c.m);
  const cplx phi = c.phi();
  const cplx phi2 = phi + cplx(0.1, 0.25);
  const std::vector<cplx> ss{{0.3, 0.2}, {-0.45, 0.1}};

  std::vector<ResidualEntry> rows = commutation_suite(a, c.n, {phi, phi2}, ss, c.flux);

  const auto y = cached_transfer(c.cache, TransferKind::Y, a, phi, 0.0, 0.0, c.n);
  const auto yt = cached_transfer(c.cache, TransferKind::YTwisted, a, phi, 0.0, c.flux, c.n);
  const Operator hp = build_hamiltonian(a, c.n, BoundarySpec::periodic());
  const Operator ht = build_hamiltonian(a, c.n, BoundarySpec::twisted(c.flux));
  rows.push_back({"||[H_pbc,Y]||/||Y|| (cached)", hs_norm(commutator(hp, y.op)) / hs_norm(y.op), 1e-10, false});
  rows.push_back({"||[H_flux,Y_flux]||/||Y_flux|| (cached)", hs_norm(commutator(ht, yt.op)) / hs_norm(yt.op), 1e-10,
                  false});
  rows.push_back({"density sum vs Y", density_sum_residual(a, phi, c.n, c.flux) / hs_norm(y.op), 1e-10, false});
  if (c.n >= 2) rows.push_back({"density sum vs Z (open)", open_density_residual(a, phi, c.n), 1e-10, false});
  rows.push_back({"spin inversion", spin_inversion_residual(a, phi, ss[0], c.n), 1e-9, false});
  rows.push_back({"symmetry relation", symmetry_relation_residual(a, ss[0], c.n), 1e-9, false});
  rows.push_back({"PT (Y)", pt_residual(TransferKind::Y, a, phi, c.n) / hs_norm(y.op), 1e-10, false});
  if (c.n >= 3) {
    const ChargeSet q = fundamental_charges(a, c.n, 1);
    rows.push_back({"Q1 in span{H, 1}", hamiltonian_span_residual(a, q.Q[0]), 1e-10, false});
  }

  rep.kind = "conserve";
  rep.table.col("label").col("value").col("threshold").col("negative_control").col("pass");
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.pass();
    rep.table.row({r.label, r.value, r.threshold, r.negative_control, r.pass()});
  }
  return ok;
}

// ---- quasiloc

bool cmd_quasiloc(const RunConfig& c, Report& rep) {
  const Anisotropy a(c.l, c.m);
  rep.kind = "quasiloc";
  if (c.grid > 0) {
    // tau1 over a window twice the width of the strip
    rep.kind = "quasiloc-domain";
    rep.table.col("phi", true).col("tau1").col("xi").col("in_domain");
    const int k = c.grid;
    const double half = kPi / a.m();
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const double u = k == 1 ? 0.0 : -half + 2.0 * half * i / (k - 1);
        const double v = k == 1 ? 0.0 : -2.0 + 4.0 * j / (k - 1);
        const cplx phi(kPi / 2 + u, v);
        Cell tau, xi;
        try {
          const auto cert = contraction_certificate(a, phi);
          tau = cert.tau1;
          xi = cert.xi;
        } catch (const SingularPoint&) {
        }
        rep.table.row({phi, tau, xi, in_domain(a, phi)});
      }
    }
    return true;
  }

  const cplx phi = c.phi();
  const auto cert = contraction_certificate(a, phi);
  const int r_max = c.r_max > 0 ? c.r_max : 16;
  rep.table.col("phi", true).col("tau1").col("xi").col("r").col("q_norm_sq").col("q_norm");
  for (int r = 2; r <= r_max; ++r) {
    const double q2 = q_norm_sq(a, phi, r);
    rep.table.row({phi, cert.tau1, cert.xi, static_cast<long long>(r), q2, std::sqrt(std::max(q2, 0.0))});
  }
  auto& e = rep.extra["certificate"];
  e["tau1"] = cert.tau1;
  e["xi"] = cert.xi;
  e["gamma"] = cert.gamma ? nlohmann::ordered_json(*cert.gamma) : nullptr;
  e["gamma_prime"] = cert.gamma_prime ? nlohmann::ordered_json(*cert.gamma_prime) : nullptr;
  e["in_domain"] = cert.in_domain;
  e["a_min_eig"] = cert.a_min_eig;
  e["e_max_eig"] = cert.e_max_eig;
  e["dad_residual"] = cert.dad_residual;
  e["domain_boundary"] = domain_boundary(a, phi.imag());
  e["expected_boundary"] = kPi / (2.0 * a.m());
  return true;
}

// ---- kernel

bool cmd_kernel(const RunConfig& c, Report& rep) {
  const Anisotropy a(c.l, c.m);
  const int k = c.grid > 0 ? c.grid : 9;
  rep.kind = "kernel";
  rep.table.col("phi", true).col("phi_prime", true).col("K_solve", true).col("K_closed", true).col("singular");
  const double half = 0.9 * kPi / (2.0 * a.m());
  std::vector<cplx> pts;
  for (int i = 0; i < k; ++i) pts.emplace_back(kPi / 2 + (k == 1 ? 0.0 : -half + 2.0 * half * i / (k - 1)), c.phi_im);
  for (cplx p : pts) {
    for (cplx q : pts) {
      // K pairs conj(phi) with phi'
      const cplx pc = std::conj(p);
      try {
        rep.table.row({p, q, kernel_K(a, pc, q), kernel_K_closed(a, pc, q), false});
      } catch (const SingularPoint&) {
        rep.table.row({p, q, Cell{}, Cell{}, true});
      }
    }
  }
  rep.extra["K_center"] = cjson(kernel_K(a, kPi / 2, kPi / 2));
  return true;
}

// ---- drude

bool cmd_drude(const RunConfig& c, Report& rep) {
  const int m_hi = c.m_max > 0 ? c.m_max : c.m;
  rep.kind = "drude";
  rep.table.col("l").col("m").col("D_K").col("F").col("F_error").col("fredholm_max_residual").col("tol").col(
      "backend");
  bool ok = true;
  for (int m = c.m; m <= m_hi; ++m) {
    const Anisotropy a(c.l, m);
    const double dk = drude_bound_DK(a);
    Cell f, ferr, fred;
    if (!c.skip_functional) {
      const QuadratureOptions o = quad_opts(c);
      const DomainIntegrand weight = [&a](cplx phi) { return current_weight_f(a, phi); };
      const auto mf = mazur_bound_functional(a, weight, current_coefficient(), o);
      const double h = kPi / (4.0 * m);
      const auto fr = fredholm_residual(a, weight, current_coefficient(),
                                        {cplx(kPi / 2, 0), cplx(kPi / 2 + h, 0.3), cplx(kPi / 2 - h, -0.5),
                                         cplx(kPi / 2 + 0.5 * h, 1.2)},
                                        o);
      f = mf.value;
      ferr = mf.quadrature_error;
      fred = fr.max_residual;
      ok = ok && std::abs(mf.value - dk / 4) <= 10 * c.tol + mf.quadrature_error;
    }
    rep.table.row({static_cast<long long>(c.l), static_cast<long long>(m), dk, f, ferr, fred, c.tol, c.backend});
  }
  return ok;
}

// ---- susceptibility

bool cmd_susceptibility(const RunConfig& c, Report& rep) {
  const Anisotropy a(c.l, c.m);
  const int level = c.grid > 0 ? c.grid : 2;
  const auto grid = mazur_grid(a, level);
  rep.kind = "susceptibility";
  rep.table.col("n").col("D_n").col("mazur_bound").col("effective_rank").col("grid_points").col("current_coefficient",
                                                                                                  true);
  auto& reports = rep.extra["finite_n_mazur"] = nlohmann::ordered_json::array();
  bool ok = true;
  for (int n : chain_lengths(c)) {
    const Operator h = build_hamiltonian(a, n, BoundarySpec::periodic());
    const Operator j = spin_current(n);
    const auto ta = time_average(h, j);
    const auto fm = finite_n_mazur(a, n, grid, j);
    ok = ok && fm.bound <= ta.susceptibility + 1e-9;
    rep.table.row({static_cast<long long>(n), ta.susceptibility, fm.bound, static_cast<long long>(fm.effective_rank),
                   static_cast<long long>(grid.size()), finite_current_coefficient(a, kPi / 2, n)});
    nlohmann::ordered_json r;
    r["n"] = n;
    r["D_n"] = ta.susceptibility;
    r["bound"] = fm.bound;
    r["effective_rank"] = fm.effective_rank;
    r["odd_family"] = fm.odd_family;
    r["gram_singular_values"] = fm.gram_singular_values;
    auto& g = r["grid"] = nlohmann::ordered_json::array();
    for (cplx p : fm.grid) g.push_back(cjson(p));
    reports.push_back(std::move(r));
  }
  return ok;
}

// ---- lindblad

bool cmd_lindblad(const RunConfig& c, Report& rep) {
  const LindbladSetup setup{Anisotropy(c.l, c.m), c.n, c.epsilon};
  rep.kind = "lindblad";
  rep.table.col("case").col("s", true).col("epsilon_backsub_error").col("defining_residual").col(
      "fixed_point_residual").col("diagonal_deviation").col("lower_part").col("nullspace_fidelity").col(
      "kernel_dim");
  std::optional<NullSpaceSolution> ns;
  if (c.n <= 4) ns = null_space_steady_state(setup);
  bool ok = true;
  for (SteadyCase k : {SteadyCase::Phi0, SteadyCase::PhiHalfPi}) {
    const auto st = steady_state(setup, k);
    Cell fid, kdim;
    if (ns) {
      fid = fidelity(st.rho, ns->rho);
      kdim = static_cast<long long>(ns->kernel_dim);
    }
    ok = ok && st.defining_residual < 1e-9 && st.fixed_point_residual < 1e-9;
    rep.table.row({std::string(case_name(k)), st.s, std::abs(epsilon_from_spin(setup.params, k, st.s) - c.epsilon),
                   st.defining_residual, st.fixed_point_residual, st.diagonal_deviation, st.lower_part, fid, kdim});
  }
  return ok;
}

// ---- current-avg

bool cmd_current_avg(const RunConfig& c, Report& rep) {
  const Anisotropy a(c.l, c.m);
  const int r_max = c.r_max > 0 ? c.r_max : 8;
  const IkNormalization norm = c.normalization == "printed" ? IkNormalization::Printed : IkNormalization::Lens;
  const auto e = current_expansion(a, r_max, norm);
  rep.kind = "current-avg";
  rep.table.col("section").col("index").col("label").col("amplitude", true).col("value", true);
  for (std::size_t k = 0; k < e.Ik.size(); ++k)
    rep.table.row({std::string("Ik"), static_cast<long long>(k), std::string("I_") + std::to_string(k), Cell{},
                   e.Ik[k]});
  for (const auto& t : e.terms)
    rep.table.row({std::string("term"), static_cast<long long>(t.r), t.label(), t.amplitude, t.coefficient});
  for (int r = 2; r <= r_max; ++r)
    rep.table.row({std::string("max_abs"), static_cast<long long>(r), std::string("max|a_r|"), Cell{},
                   cplx(e.max_coefficient(r), 0.0)});
  return true;
}

}  // namespace

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["l"] = c.l;
  j["m"] = c.m;
  j["n"] = c.n;
  j["ns"] = chain_lengths(c);
  j["phi"] = cjson(c.phi());
  j["flux"] = c.flux;
  j["epsilon"] = c.epsilon;
  j["grid"] = c.grid;
  j["r_max"] = c.r_max;
  j["m_max"] = c.m_max;
  j["tol"] = c.tol;
  j["backend"] = c.backend;
  j["normalization"] = c.normalization;
  j["skip_functional"] = c.skip_functional;
  j["output"] = c.output;
  j["format"] = c.format;
  j["cache"] = c.cache;
  return j;
}

void validate(const RunConfig& c) {
  need(c.format == "csv" || c.format == "json", "--format must be csv or json");
  need(c.l >= 1 && c.m >= 2, "--l must be >= 1 and --m >= 2");
  need(std::gcd(c.l, c.m) == 1 && c.l < c.m, "--l and --m must be coprime with l < m");
  need(std::isfinite(c.phi_re) && std::isfinite(c.phi_im), "--phi-re/--phi-im must be finite");
  need(std::isfinite(c.flux), "--flux must be finite");
  need(c.tol > 0.0 && c.tol < 1.0, "--tol must lie in (0, 1)");
  need(c.grid >= 0, "--grid must be non-negative");
  need(c.backend == "lens" || c.backend == "strip", "--backend must be lens or strip");
  need(c.normalization == "lens" || c.normalization == "printed", "--normalization must be lens or printed");

  const auto cap = [&](int n, int hi, int code_lo) {
    need(n >= code_lo, "--n must be >= " + std::to_string(code_lo));
    if (n > hi) throw SizeError("--n " + std::to_string(n) + " exceeds the cap " + std::to_string(hi));
  };
  if (c.command == "conserve") {
    cap(c.n, 10, 2);
  } else if (c.command == "quasiloc") {
    need(c.grid <= 201, "--grid must be <= 201");
    need(c.r_max == 0 || c.r_max >= 2, "--r-max must be >= 2");
  } else if (c.command == "kernel") {
    need(c.grid <= 101, "--grid must be <= 101");
  } else if (c.command == "drude") {
    need(c.m_max == 0 || c.m_max >= c.m, "--m-max must be >= --m");
    for (int m = c.m; m <= std::max(c.m, c.m_max); ++m)
      need(std::gcd(c.l, m) == 1 && c.l < m, "--l must be coprime to every m up to --m-max");
  } else if (c.command == "susceptibility") {
    for (int n : chain_lengths(c)) cap(n, 12, 3);
    need(c.grid <= 4, "--grid (refinement level) must be <= 4");
  } else if (c.command == "lindblad") {
    cap(c.n, 8, 2);
    need(c.epsilon > 0.0 && std::isfinite(c.epsilon), "--epsilon must be positive");
  } else if (c.command == "current-avg") {
    need(c.r_max == 0 || c.r_max >= 2, "--r-max must be >= 2");
    if (c.r_max > kMaxDensitySupport) throw SizeError("--r-max exceeds " + std::to_string(kMaxDensitySupport));
  } else {
    throw InvalidArgument("unknown command '" + c.command + "'");
  }
}

bool run_command(const RunConfig& c, Report& out) {
  if (c.command == "conserve") return cmd_conserve(c, out);
  if (c.command == "quasiloc") return cmd_quasiloc(c, out);
  if (c.command == "kernel") return cmd_kernel(c, out);
  if (c.command == "drude") return cmd_drude(c, out);
  if (c.command == "susceptibility") return cmd_susceptibility(c, out);
  if (c.command == "lindblad") return cmd_lindblad(c, out);
  if (c.command == "current-avg") return cmd_current_avg(c, out);
  throw InvalidArgument("unknown command '" + c.command + "'");
}

}  // namespace xxzcli
