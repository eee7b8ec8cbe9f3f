#pragma once

#include <stdexcept>
#include <string>

namespace trisqueeze {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented guard (range, mode index, degree, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A ratio such as g2 or V_jk whose denominator vanishes.
class UndefinedRatio : public Error {
 public:
  using Error::Error;
};

/// The normally ordered P function does not exist as a regular function.
class SingularDistribution : public Error {
 public:
  using Error::Error;
};

/// Adaptive integration could not find a decayed window or did not converge.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace trisqueeze
