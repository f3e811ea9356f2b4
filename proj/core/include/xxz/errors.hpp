#pragma once

#include <stdexcept>
#include <string>

namespace xxz {

/// Violated precondition on user-supplied parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested chain or density support exceeds the dense-storage cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Evaluation at a spectral parameter where sin(phi) vanishes or a
/// normalization degenerates.
class SingularPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical routine failed to reach its requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace xxz
