#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffh {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A blade refers to a generator index outside 1..dim, or repeats an index.
class InvalidBladeError : public Error {
public:
  using Error::Error;
};

// Two operands live in algebras or polynomial rings of different shape.
class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

// Sum of two extended scalars with different pi powers; the result would
// leave the representable set.
class MixedPiSumError : public Error {
public:
  using Error::Error;
};

// A radial expression has no polynomial counterpart (negative or odd
// exponents after removing the sector unit vectors, or a stray pi factor).
class NotConvertibleError : public Error {
public:
  using Error::Error;
};

// Text input rejected; `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Arguments outside the contract of an operation (bad parity, unsupported
// dimension, evaluation on a singular locus, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// A numeric quadrature failed to converge within its order budget.
class QuadratureError : public Error {
public:
  using Error::Error;
};

}  // namespace ffh
