#pragma once

#include <stdexcept>
#include <string>

namespace dhtcost {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A geometry parameter, node id or cost price is outside its domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A configured size guard (node cap, enumeration cap) or integer range
/// would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The parameters are valid but the requested evaluation has no closed form
/// (e.g. torus formulas at n_side = 2, per-node de Bruijn costs).
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace dhtcost
