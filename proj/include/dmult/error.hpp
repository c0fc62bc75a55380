#pragma once

#include <stdexcept>
#include <string>

namespace dmult {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  Budget = 1,
  Parse = 2,
  Domain = 3,
  Internal = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct BudgetError : Error {
  explicit BudgetError(const std::string& w) : Error(ErrorKind::Budget, w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorKind::Parse, w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::Domain, w) {}
};
// Broken internal invariant: inexact division, divergent limit, escaping
// Y-operator, degenerate spectrum. These indicate a convention bug.
struct InvariantError : Error {
  explicit InvariantError(const std::string& w) : Error(ErrorKind::Internal, w) {}
};

}  // namespace dmult
