#pragma once

#include <stdexcept>
#include <string>

namespace chiwb {

// One exception type for the whole engine; the kind discriminates the
// failure classes that callers (and the session driver) react to.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    Parse,
    Domain,            // bad argument, ring mismatch, invariant violated by input
    DivisionByZero,
    InfiniteLength,
    NoStabilization,
    BudgetExhausted,
    SupportNotAtOrigin,
    SupportNotFinite,
    NotModuleFinite,
    ResidualSupport,
    AssertionFailed,   // a verified identity failed on this instance
    Internal,
  };

  Error(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  Error(Kind kind, std::string message, int line, int column)
      : std::runtime_error(std::move(message)), kind_(kind), line_(line), column_(column) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_ = 0;
  int column_ = 0;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace chiwb
