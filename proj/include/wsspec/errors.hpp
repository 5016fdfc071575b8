#pragma once

#include <stdexcept>
#include <string>

namespace wsspec
{

// Base of every error raised by the toolkit.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Quantum numbers that do not describe a state (N <= l, negative l, ...).
class InvalidState : public Error
{
  public:
    using Error::Error;
};

// Closed-form energy whose imaginary part survives the reality tolerance.
class ComplexEnergy : public Error
{
  public:
    using Error::Error;
};

// Jacobi exponents outside (-1, inf); the state cannot be normalized.
class InvalidExponents : public Error
{
  public:
    using Error::Error;
};

class NonNormalizable : public Error
{
  public:
    using Error::Error;
};

class DivergentIntegral : public Error
{
  public:
    using Error::Error;
};

class DegreeTooLarge : public Error
{
  public:
    using Error::Error;
};

class OutOfRegion : public Error
{
  public:
    using Error::Error;
};

// The requested node count is not reached below the continuum threshold.
class NoBoundState : public Error
{
  public:
    using Error::Error;
};

class BracketAmbiguous : public Error
{
  public:
    using Error::Error;
};

class ConfigError : public Error
{
  public:
    using Error::Error;
};

} // namespace wsspec
