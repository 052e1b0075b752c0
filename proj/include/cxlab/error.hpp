#pragma once

#include <stdexcept>
#include <string>

namespace cxlab {

/// Base for every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mathematically inadmissible input (CLI exit code 1).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A degree, pair-count or exponent cap was hit (CLI exit code 2).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A proved statement was contradicted by certified data (CLI exit code 3).
class SelfTestFailure : public Error {
 public:
  using Error::Error;
};

/// Broken internal certificate; always a software fault.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cxlab
