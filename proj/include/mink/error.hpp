#ifndef MINK_ERROR_HPP
#define MINK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mink {

enum class ErrorKind {
  dimension_mismatch,
  invalid_argument,
  lower_dimensional,
  invalid_gauge,
  numerical_failure,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::lower_dimensional: return "lower-dimensional input";
    case ErrorKind::invalid_gauge: return "invalid gauge body";
    case ErrorKind::numerical_failure: return "numerical failure";
  }
  return "unknown error";
}

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw Error(kind, what);
}

}  // namespace mink

#endif  // MINK_ERROR_HPP
