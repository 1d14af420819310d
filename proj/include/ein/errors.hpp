#pragma once

#include <stdexcept>
#include <string>

namespace ein {

/// Malformed user input (files, flags, JSON).  CLI exit code 1.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated precondition or out-of-domain argument.  CLI exit code 2.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant; indicates a bug, not bad input.  CLI exit code 3.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void check_domain(bool ok, const std::string& what) {
  if (!ok) throw domain_error(what);
}

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw internal_error(what);
}

}  // namespace ein
