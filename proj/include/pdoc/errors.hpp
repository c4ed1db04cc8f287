#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdoc {

/// Operands built over different fibre dimensions.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The j = 0 diagonal has a nonzero scalar trace on an infinite tail.
class NotTraceComputable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BlockNotTraceComputable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A formal symbol does not store the partial symbol a computation needs.
class DepthInsufficient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnknownBuiltin : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCommuting : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed-form and enumerated counts disagree. Never expected.
class InternalMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pdoc
