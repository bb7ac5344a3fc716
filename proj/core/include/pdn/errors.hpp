#ifndef PDN_ERRORS_HPP
#define PDN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdn {

/// Violated precondition or value-domain constraint (bad dimensions,
/// negative rates, out-of-range parameters).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed file contents. Carries the byte offset at which parsing failed
/// when it is known (0 otherwise).
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t byte_offset = 0)
      : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Non-finite value detected in a numeric pipeline (forward/backward pass).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pdn

#endif  // PDN_ERRORS_HPP
