#pragma once

#include <stdexcept>
#include <string>

namespace pathnoise {

/// Bad input: malformed sequence, knob outside its range, invalid band.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A factorization or decomposition could not be produced.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No candidate arc explains the observations well enough to name a band.
class AmbiguousBandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pathnoise
