#pragma once

#include <stdexcept>
#include <string>

namespace treechild {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-domain input (bad word, bad shape, bad argument).
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what) : Error(what) {}
};

// A configured resource budget (enumeration length, table size) was exceeded.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

// Two independent computation routes disagreed. This is a finding, not a
// user mistake: it means one of the implemented models is wrong.
class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& what) : Error(what) {}
};

}  // namespace treechild
