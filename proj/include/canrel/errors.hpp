#pragma once
#include <stdexcept>

namespace canrel {

/* Error taxonomy shared by the library and the CLI.
 *   ParseError        malformed textual input (bad rational literal, bad JSON)
 *   TypeMismatchError well-formed objects that do not fit together
 *                     (ambient dimension mismatch, non-chaining morphisms)
 *   PreconditionError a mathematical precondition fails (non-Lagrangian body,
 *                     non-coisotropic subspace, out-of-range index, ...)
 * The CLI maps these to exit codes 2, 3 and 4 respectively. */
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TypeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace canrel
