// Error types shared by every module of the engine.

#ifndef OMEGA_ERROR_HPP_
#define OMEGA_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace omega {

enum class ErrorKind {
  schema,
  group_axiom,
  constant,
  unknown_operation,
  arity_mismatch,
  size_guard,
  polarization_unsupported,
  parse,
  validation,
  invariant,
};

std::string_view to_string(ErrorKind kind);

// Process exit code used by the command line front end for each error kind.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(what), _kind(kind) {}

  ErrorKind kind() const noexcept { return _kind; }

 private:
  ErrorKind _kind;
};

[[noreturn]] void fail(ErrorKind kind, std::string const& what);

}  // namespace omega

#endif  // OMEGA_ERROR_HPP_
