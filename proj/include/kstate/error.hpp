#pragma once

#include <stdexcept>
#include <string>

namespace kstate {

enum class ErrorKind {
  malformed,         // tokenizer / syntax
  duplicate_label,   // a label not appearing exactly twice
  non_planar,        // face count != n + 2
  inconsistent,      // orientation cannot be recovered from the labels
  not_realizable,    // Gauss code with no planar realization
  link,              // more than one component
  unsupported,       // e.g. zero crossings
  resource_cap,      // state enumeration cap exceeded
  empty_state_set,
  invariant,         // internal consistency check failed
};

const char* to_string(ErrorKind kind) noexcept;

/// Exit status the CLI reports for an error of this kind.
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace kstate
