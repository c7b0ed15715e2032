#pragma once

#include <stdexcept>
#include <string>

namespace sysres {

enum class ErrorKind {
  parse,
  dimension_mismatch,
  degenerate_input,
  bad_prime,
  prime_too_small,
  unlucky_prime,
  scheme_inapplicable,
  cap_exceeded,
  singular_design,
  degeneracy_exhausted,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Process exit code used by the command-line driver for each error kind.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::invalid_argument:
    case ErrorKind::scheme_inapplicable:
      return 2;
    case ErrorKind::dimension_mismatch:
      return 3;
    case ErrorKind::cap_exceeded:
      return 4;
    case ErrorKind::degenerate_input:
    case ErrorKind::bad_prime:
    case ErrorKind::prime_too_small:
    case ErrorKind::unlucky_prime:
    case ErrorKind::singular_design:
    case ErrorKind::degeneracy_exhausted:
      return 5;
  }
  return 1;
}

}  // namespace sysres
