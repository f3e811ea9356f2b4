#pragma once

#include <complex>

namespace xxz {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Commensurate easy-plane anisotropy eta = pi l / m, Delta = cos(eta).
///
/// The auxiliary Verma module truncates to dimension m at these points, so
/// (l, m) fixes every representation size in the library.
class Anisotropy {
 public:
  /// Throws InvalidArgument unless m >= 2, 1 <= l <= m and gcd(l, m) = 1.
  Anisotropy(int l, int m);

  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }
  double eta() const noexcept { return eta_; }
  double delta() const noexcept { return delta_; }
  cplx q() const noexcept { return std::polar(1.0, eta_); }

  /// c_k = cos(pi l k / m)
  double c(int k) const noexcept;
  /// s_k = sin(pi l k / m)
  double s(int k) const noexcept;

  friend bool operator==(const Anisotropy&, const Anisotropy&) = default;

 private:
  int l_;
  int m_;
  double eta_;
  double delta_;
};

}  // namespace xxz
