#include "opx/series.hpp"

namespace opx {

RationalSeries named_series(const std::string& name, int order) {
  RationalSeries s(order);
  if (name == "exp") {
    for (int k = 0; k <= order; ++k) s.set_coeff(k, factorial(unsigned(k)).inv());
    return s;
  }
  if (name == "log1p") {
    for (int k = 1; k <= order; ++k)
      s.set_coeff(k, Rational(k % 2 == 1 ? 1 : -1, k));
    return s;
  }
  if (name == "sin") {
    for (int k = 1; k <= order; k += 2)
      s.set_coeff(k, Rational(k % 4 == 1 ? 1 : -1) * factorial(unsigned(k)).inv());
    return s;
  }
  if (name == "cos") {
    for (int k = 0; k <= order; k += 2)
      s.set_coeff(k, Rational(k % 4 == 0 ? 1 : -1) * factorial(unsigned(k)).inv());
    return s;
  }
  if (name == "tan") return named_series("sin", order) / named_series("cos", order);
  if (name == "sec")
    return RationalSeries::constant(order, Rational(1)) / named_series("cos", order);
  if (name == "arctan") {
    for (int k = 1; k <= order; k += 2)
      s.set_coeff(k, Rational(k % 4 == 1 ? 1 : -1, k));
    return s;
  }
  throw usage_error("named_series: unknown series '" + name + "'");
}

}  // namespace opx
