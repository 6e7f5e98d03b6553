#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gak {

enum class ErrorKind {
  signature_mismatch,
  invalid_argument,
  singular,          // zero Study norm, no inverse / no nearest rotor
  no_real_root,      // requested root lies off the real branch
  complex_solution,  // negative Study-norm radicand
  non_unique,        // isoclinic or otherwise ambiguous logarithm
  branch_point,      // logarithm of -1 and friends
  not_converged,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI)
// can tell mathematical singularities apart from misuse.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // true for failures that stem from the input's geometry rather than misuse
  bool is_mathematical() const noexcept {
    return kind_ != ErrorKind::signature_mismatch &&
           kind_ != ErrorKind::invalid_argument;
  }

 private:
  ErrorKind kind_;
};

}  // namespace gak
