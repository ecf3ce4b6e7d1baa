#pragma once

#include <stdexcept>
#include <string>

namespace schwarz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters: c outside (0,3], degenerate Möbius data, unknown names.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Evaluation requested outside the open unit disk.
class DomainError : public Error {
 public:
  using Error::Error;
};

class CenterMismatch : public Error {
 public:
  using Error::Error;
};

// Leading coefficient of a divisor (or log/pow argument) below the singular
// threshold. For f' this means local univalence is lost at the point.
class DivisionBySingular : public Error {
 public:
  using Error::Error;
};

// Too many singular points on a norm-search grid.
class SearchUnreliable : public Error {
 public:
  using Error::Error;
};

// |f''(0)|/c too close to 1 for the gamma-dependent Schwarzian bound.
class GammaDegenerate : public Error {
 public:
  using Error::Error;
};

}  // namespace schwarz
