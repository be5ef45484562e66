#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zdl {

enum class ErrorKind {
  input_domain,
  capacity,
  pole,
  domain,
  conditioning,
  numerical,
  horizon,
  incomplete,
  order_violation,
  parse,
  hypothesis_failure,
  branch_failure,
  identity_failure,
  profile,
  spacing,
  io,
  config,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so that the CLI can
// render it as machine-readable JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace zdl
