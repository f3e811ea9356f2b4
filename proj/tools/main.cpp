#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "xxz/errors.hpp"

namespace {

enum Exit { kOk = 0, kConfig = 1, kAccuracy = 2, kSize = 3 };

void add_common(CLI::App* sub, xxzcli::RunConfig& c) {
  sub->add_option("--l", c.l, "anisotropy numerator, eta = pi l / m")->capture_default_str();
  sub->add_option("--m", c.m, "anisotropy denominator")->capture_default_str();
  sub->add_option("--phi-re", c.phi_re, "Re of the spectral parameter")->capture_default_str();
  sub->add_option("--phi-im", c.phi_im, "Im of the spectral parameter")->capture_default_str();
  sub->add_option("--output,-o", c.output, "output file, - for stdout")->capture_default_str();
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  xxzcli::RunConfig cfg;
  CLI::App app{"xxzql: quasilocal conservation laws of the XXZ chain"};
  app.require_subcommand(1);

  auto* conserve = app.add_subcommand("conserve", "commutator and identity residuals");
  add_common(conserve, cfg);
  conserve->add_option("--n", cfg.n, "chain length")->capture_default_str();
  conserve->add_option("--flux", cfg.flux, "twist flux")->capture_default_str();
  conserve->add_option("--cache", cfg.cache, "directory for cached transfer operators");

  auto* quasiloc = app.add_subcommand("quasiloc", "contraction certificate and ||q_r|| decay");
  add_common(quasiloc, cfg);
  quasiloc->add_option("--r-max", cfg.r_max, "largest support in the decay table (default 16)");
  quasiloc->add_option("--grid", cfg.grid, "N > 0: tau1 on an N x N window around the strip");

  auto* kernel = app.add_subcommand("kernel", "K(conj phi, phi') on a grid");
  add_common(kernel, cfg);
  kernel->add_option("--grid", cfg.grid, "points per axis (default 9)");

  auto* drude = app.add_subcommand("drude", "D_K, Fredholm residuals, Mazur functional");
  add_common(drude, cfg);
  drude->add_option("--m-max", cfg.m_max, "tabulate m .. m-max");
  drude->add_option("--tol", cfg.tol, "quadrature tolerance")->capture_default_str();
  drude->add_option("--backend", cfg.backend, "lens or strip")->capture_default_str();
  drude->add_flag("--skip-functional", cfg.skip_functional, "only the closed form D_K");

  auto* susc = app.add_subcommand("susceptibility", "D_n(J) and the finite-n Mazur bound");
  add_common(susc, cfg);
  susc->add_option("--n", cfg.ns, "chain lengths")->delimiter(',');
  susc->add_option("--grid", cfg.grid, "grid refinement level (default 2)");

  auto* lind = app.add_subcommand("lindblad", "boundary-driven steady state residuals");
  add_common(lind, cfg);
  lind->add_option("--n", cfg.n, "chain length")->capture_default_str();
  lind->add_option("--epsilon", cfg.epsilon, "coupling rate")->capture_default_str();

  auto* cur = app.add_subcommand("current-avg", "time-averaged current coefficients and I_k");
  add_common(cur, cfg);
  cur->add_option("--r-max", cfg.r_max, "largest support (default 8)");
  cur->add_option("--normalization", cfg.normalization, "lens or printed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    xxzcli::validate(cfg);
    xxzcli::Report report;
    const bool ok = xxzcli::run_command(cfg, report);
    xxzcli::emit(report, xxzcli::config_json(cfg), cfg.format, cfg.output);
    if (!ok) {
      std::cerr << "xxzql: some checks missed their thresholds\n";
      return kAccuracy;
    }
    return kOk;
  } catch (const xxz::AccuracyError& e) {
    std::cerr << "xxzql: accuracy failure: " << e.what() << " (achieved " << e.achieved() << ")\n";
    return kAccuracy;
  } catch (const xxz::SizeError& e) {
    std::cerr << "xxzql: " << e.what() << '\n';
    return kSize;
  } catch (const xxz::InvalidArgument& e) {
    std::cerr << "xxzql: " << e.what() << '\n';
    return kConfig;
  } catch (const xxz::SingularPoint& e) {
    std::cerr << "xxzql: singular point: " << e.what() << '\n';
    return kConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "xxzql: " << e.what() << '\n';
    return kConfig;
  }
}
