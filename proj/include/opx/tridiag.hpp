#ifndef OPX_TRIDIAG_HPP
#define OPX_TRIDIAG_HPP

#include <functional>
#include <string>
#include <vector>

#include "opx/errors.hpp"
#include "opx/favard.hpp"
#include "opx/motzkin.hpp"
#include "opx/rational.hpp"
#include "opx/surd.hpp"

namespace opx {

// T e_n = u_n e_{n-1} + d_n e_n + l_n e_{n+1}, with the u-term absent at
// n = 0.  Off-diagonal entries may be surds; the diagonal is rational, and
// the products lambda_n = l_{n-1} u_{n-1} must come out rational (the
// radicands cancel), which is what ties T to a rational recurrence.
struct TridiagonalOperator {
  std::function<Surd(int)> l;
  std::function<Rational(int)> d;
  std::function<Surd(int)> u;

  Rational lambda(int n) const {
    if (n < 1) throw usage_error("TridiagonalOperator: lambda index must be >= 1");
    return (l(n - 1) * u(n - 1)).to_rational();
  }

  RecurrencePair<Rational> recurrence(bool ops_flag = false) const {
    return RecurrencePair<Rational>{d, [op = *this](int n) { return op.lambda(n); },
                                    ops_flag};
  }

  bool entries_rational(int max_index) const {
    for (int n = 0; n <= max_index; ++n)
      if (!l(n).is_rational() || !u(n).is_rational()) return false;
    return true;
  }
};

// Builds an operator from finite tables; queries past the tables raise.
TridiagonalOperator table_operator(std::vector<Surd> l, std::vector<Rational> d,
                                   std::vector<Surd> u);

// <e_{i+d}, X e_i> for a word X over {L, D, U} applied right-to-left.
// Returns exact scalar zero whenever the word's lattice path is not a valid
// Motzkin path from (0,i) to (|X|, i+d).
Surd word_entry(const TridiagonalOperator& T, const std::string& word, int i, int d);

// <e_{i+d}, T^m e_i> by Motzkin-path transfer: surd prefactor (l's for d>0,
// u's for d<0) times the rational path total under b_n = d_n,
// lambda_n = l_{n-1} u_{n-1}.
Surd matrix_entry(const TridiagonalOperator& T, int m, int i, int d);

// (N+1)x(N+1) truncation of T raised to the m-th power by repeated
// multiplication.  Entries (r, c) with r + m <= N and c + m <= N are exact:
// a power of a banded matrix cannot feel truncation beyond bandwidth * power.
std::vector<std::vector<Rational>> truncated_power_exact(const TridiagonalOperator& T,
                                                         int m, int N);
std::vector<std::vector<double>> truncated_power_float(const TridiagonalOperator& T,
                                                       int m, int N);

// Formal eigenvector coefficients for eigenvalue candidate z: p_values from
// the recurrence with b_n = d_n, lambda_n = u_{n-1} l_{n-1}, and
// h_values[n] = p_n(z) / (u_0...u_{n-1}).  No l^2 membership judgment.
struct EigvecResult {
  std::vector<Rational> p_values;
  std::vector<Surd> h_values;
};
EigvecResult eigenvector_coeffs(const TridiagonalOperator& T, const Rational& z, int N);

}  // namespace opx

#endif
