#ifndef GRADEX_ERRORS_HPP
#define GRADEX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace gradex {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (group specs, ring elements, config files).
struct parse_error : error {
  using error::error;
};

/// Structurally valid input outside the operation's domain
/// (modulus below 2, shape mismatch, ring-variant mismatch).
struct domain_error : error {
  using error::error;
};

/// Operation not defined for the given value (enumerating an infinite
/// group, homogeneous parts of an ungraded ring).
struct unsupported_operation : error {
  using error::error;
};

/// A grading descriptor violating its invariants.
struct invalid_grading : error {
  using error::error;
};

/// A stated hypothesis does not hold; carries the offending class sizes
/// when the witness-construction hypothesis fails.
struct precondition_error : error {
  precondition_error(const std::string& what, std::vector<std::size_t> sizes = {})
      : error(what), class_sizes(std::move(sizes)) {}
  std::vector<std::size_t> class_sizes;
};

}  // namespace gradex

#endif
