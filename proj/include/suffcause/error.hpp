#pragma once

#include <stdexcept>
#include <string>

namespace suffcause {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownNodeError : public Error {
 public:
  explicit UnknownNodeError(const std::string& name)
      : Error("unknown node '" + name + "'") {}
};

class GraphError : public Error {
 public:
  using Error::Error;
};

// A table, conjunction or representation violates its contract.
class ModelError : public Error {
 public:
  using Error::Error;
};

// A theorem's premises do not hold for the requested query.
class PremiseError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace suffcause
