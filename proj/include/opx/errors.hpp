#ifndef OPX_ERRORS_HPP
#define OPX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opx {

// Invalid mathematical input (negative radicand, division by zero, ...).
// Mapped to exit code 3 by the CLI.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Caller misuse (guard exceeded, unknown name, wrong mode).
// Mapped to exit code 2 by the CLI.
class usage_error : public std::runtime_error {
public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace opx

#endif
