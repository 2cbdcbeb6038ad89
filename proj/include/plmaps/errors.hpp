#pragma once

#include <stdexcept>
#include <string>

namespace plm {

// Base of every error thrown by the library. The CLI maps these to exit 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside [0,1] or outside a partial map's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid breakpoint data: unordered abscissae, values outside [0,1], ...
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A produced map would exceed kMaxBreakpoints.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A constant piece makes a lap count or level set ill-defined.
class FlatSegmentError : public Error {
 public:
  using Error::Error;
};

class MonotonicityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A commutator-derived structure (laps, splits, images) is inconsistent.
class StructureError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace plm
