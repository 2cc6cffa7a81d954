#pragma once

#include <stdexcept>
#include <string>

namespace qrlab {

/// Raised for arguments outside an operation's domain (non-prime moduli,
/// equal primes, out-of-range multipliers, even q for the Eisenstein route).
class InputError : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

/// A modulus divides a value that must be a unit modulo it.
class CoprimalityError : public InputError
{
  public:
	using InputError::InputError;
};

/// An enumeration or table would exceed the configured size limit.
class ResourceError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

} // namespace qrlab
