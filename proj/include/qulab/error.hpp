#ifndef QULAB_ERROR_HPP
#define QULAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qulab {

/// Error category, mapped onto CLI exit codes by the front-end.
enum class ErrorKind {
  validation,    // malformed input data (exit 2)
  usage,         // unknown name / selector / out-of-range request (exit 3)
  precondition,  // an operation's stated precondition does not hold
  internal,      // a "cannot happen" invariant failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& msg) {
  throw Error(ErrorKind::validation, msg);
}
[[noreturn]] inline void fail_usage(const std::string& msg) {
  throw Error(ErrorKind::usage, msg);
}
[[noreturn]] inline void fail_precondition(const std::string& msg) {
  throw Error(ErrorKind::precondition, msg);
}

}  // namespace qulab

#endif
