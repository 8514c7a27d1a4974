#pragma once

#include <stdexcept>
#include <string>

namespace ybekit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong degree, out-of-range point, non-bijective image list.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (group order, brace order, enumeration budget) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must hold failed. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace ybekit
