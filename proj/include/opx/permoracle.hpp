#ifndef OPX_PERMORACLE_HPP
#define OPX_PERMORACLE_HPP

#include <vector>

#include "opx/parampoly.hpp"
#include "opx/rational.hpp"

namespace opx {

inline constexpr int kPermGuard = 10;

// Sum of eta^{s(sigma)} over zig-zag permutations of {1..two_n} that start
// and end with a rise (sigma_1 < sigma_2 > sigma_3 < ... < sigma_{2n});
// s counts left-to-right minima.  Returned as a polynomial in eta.
ParamPoly zigzag_moment_poly(int two_n);
Rational zigzag_moment(int two_n, const Rational& eta);

// Number of zig-zag permutations of odd length starting with a descent and
// ending with a rise; T_1, T_3, T_5, ... are the tangent numbers.
Rational tangent_count(int odd_len);

struct EulerTable {
  // e[n][k] counts zig-zag permutations of 2n elements (rise...rise) with
  // k left-to-right minima; built by the binomial recursion.
  std::vector<std::vector<Rational>> e;
  std::vector<Rational> tangent;  // tangent[m] = T_{2m+1}, by enumeration
};
EulerTable euler_table(int n_max);

// Sum over S_n of w^{des(sigma)}.
Rational descent_weighted_sum(int n, const Rational& w);

// c[j] = number of permutations of {1..n} with exactly j odd-length cycles.
std::vector<Rational> odd_cycle_counts(int n);

}  // namespace opx

#endif
