#ifndef OPX_VERIFY_HPP
#define OPX_VERIFY_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace opx {

class check_failure : public std::runtime_error {
public:
  explicit check_failure(const std::string& what) : std::runtime_error(what) {}
};

struct Check {
  std::string name;
  std::string suite;          // motzkin | favard | tridiag | families | perms
  int criterion;              // acceptance number, 0 for suite-only checks
  std::function<void()> fn;   // throws check_failure on mismatch
};

const std::vector<Check>& all_checks();

struct CheckResult {
  std::string name;
  int criterion;
  bool passed;
  std::string detail;  // minimal counterexample on failure
};

// suite = "all" runs everything; unknown suite names raise usage_error.
std::vector<CheckResult> run_suite(const std::string& suite);

// The numbered acceptance criteria only, in order.
std::vector<CheckResult> run_acceptance();

}  // namespace opx

#endif
