#pragma once

#include "xxz/anisotropy.hpp"
#include "xxz/chain.hpp"

namespace xxz {

/// Densities are capped at this support length (2^r x 2^r storage).
inline constexpr int kMaxDensitySupport = 10;

/// q_r(phi; flux): sigma^- on the first site, sigma^+ on the last, interior
/// weights <1| L0^{a_2} G ... L0^{a_{r-1}} G |1> with G = G_{flux/n}.
struct LocalDensity {
  Anisotropy params;
  cplx phi;
  double flux;  // total flux; 0 for the untwisted density
  int n;        // chain length the flux is distributed over (unused at flux 0)
  int r;
  Operator op;
};

/// p_n(phi; flux) = sum_{k=1}^{m-1} <k| (L0 G)^{(x)(n-1)} (x) (L1 G) |k>.
/// Stored without the density prefactor; the density sum multiplies it back in.
struct Remainder {
  Anisotropy params;
  cplx phi;
  double flux;
  int n;
  Operator op;
};

/// r = 2 is exactly sigma^- (x) sigma^+ (times e^{i flux/n} when twisted).
/// Throws InvalidArgument for r < 2 and SizeError for r > 10.
LocalDensity density_q(const Anisotropy& a, cplx phi, int r, double flux = 0.0, int n = 0);

Remainder remainder_p(const Anisotropy& a, cplx phi, int n, double flux = 0.0);

/// sum_{r=2}^n sum_x S^x(1 (x) q_r) + c * sum_x S^x(p_n), c = density prefactor
/// (or 1 for the literal, unscaled remainder).
Operator periodic_density_sum(const Anisotropy& a, cplx phi, int n, double flux = 0.0,
                              bool scale_remainder = true);

/// sum_{r=2}^n sum_{x=0}^{n-r} 1_{2^x} (x) q_r (x) 1_{2^{n-r-x}}
Operator open_density_sum(const Anisotropy& a, cplx phi, int n);

/// ||Y_n - periodic_density_sum||_HS. With flux the comparison is against the
/// shift-invariant gauged operator C Y_n(phi; flux) C^dagger.
double density_sum_residual(const Anisotropy& a, cplx phi, int n, double flux = 0.0);
/// Same with the remainder taken literally, without the density prefactor.
double density_sum_literal_residual(const Anisotropy& a, cplx phi, int n, double flux = 0.0);

/// ||Z_n - open_density_sum||_HS.
double open_density_residual(const Anisotropy& a, cplx phi, int n);

}  // namespace xxz
