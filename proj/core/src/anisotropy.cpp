#include "xxz/anisotropy.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "xxz/errors.hpp"

namespace xxz {

Anisotropy::Anisotropy(int l, int m) : l_(l), m_(m) {
  if (m < 2) throw InvalidArgument("anisotropy: m must be >= 2, got " + std::to_string(m));
  if (l < 1 || l > m) {
    throw InvalidArgument("anisotropy: l must satisfy 1 <= l <= m, got l=" + std::to_string(l));
  }
  if (std::gcd(l, m) != 1) {
    throw InvalidArgument("anisotropy: l and m must be coprime, got l=" + std::to_string(l) +
                          " m=" + std::to_string(m));
  }
  eta_ = kPi * l / m;
  delta_ = std::cos(eta_);
}

double Anisotropy::c(int k) const noexcept { return std::cos(eta_ * k); }

double Anisotropy::s(int k) const noexcept { return std::sin(eta_ * k); }

}  // namespace xxz
