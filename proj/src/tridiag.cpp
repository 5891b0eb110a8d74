#include "opx/tridiag.hpp"

namespace opx {

TridiagonalOperator table_operator(std::vector<Surd> l, std::vector<Rational> d,
                                   std::vector<Surd> u) {
  return TridiagonalOperator{table_fn(std::move(l)), table_fn(std::move(d)),
                             table_fn(std::move(u))};
}

Surd word_entry(const TridiagonalOperator& T, const std::string& word, int i, int d) {
  if (i < 0 || i + d < 0) throw usage_error("word_entry: negative basis index");
  Surd coef(Rational(1));
  int idx = i;
  // Letters apply right-to-left.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'L':
        coef = coef * T.l(idx);
        ++idx;
        break;
      case 'D':
        coef = coef * Surd(T.d(idx));
        break;
      case 'U':
        if (idx == 0) return Surd();  // U e_0 = 0
        coef = coef * T.u(idx - 1);
        --idx;
        break;
      default:
        throw usage_error(std::string("word_entry: bad letter '") + *it + "'");
    }
  }
  if (idx != i + d) return Surd();
  return coef;
}

Surd matrix_entry(const TridiagonalOperator& T, int m, int i, int d) {
  if (m < 0 || i < 0 || i + d < 0) throw usage_error("matrix_entry: negative argument");
  Surd pref(Rational(1));
  Rational total;
  if (d >= 0) {
    // Net ascents carry the l's; the remaining up/down pairs carry lambdas.
    for (int t = 0; t < d; ++t) pref = pref * T.l(i + t);
    total = transfer_total<Rational>(
        m, i, i + d, ValuationV<Rational>{T.d, [&T](int n) { return T.lambda(n); }});
  } else {
    // Net descents carry the u's, so here the lambdas attach to the up steps
    // (each up is matched by one of the non-net downs).
    for (int t = 0; t < -d; ++t) pref = pref * T.u(i - 1 - t);
    total = transfer_total_v1<Rational>(
        m, i, i + d,
        ValuationV1<Rational>{[&T](int n) { return T.lambda(n + 1); }, T.d,
                              [](int) { return Rational(1); }});
  }
  return pref * total;
}

std::vector<std::vector<Rational>> truncated_power_exact(const TridiagonalOperator& T,
                                                         int m, int N) {
  if (m < 0 || N < 0) throw usage_error("truncated_power: negative argument");
  if (!T.entries_rational(N))
    throw usage_error("truncated_power_exact: operator has surd entries; use float mode");
  size_t n = size_t(N) + 1;
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n, Rational(0)));
  for (size_t c = 0; c < n; ++c) {
    A[c][c] = T.d(int(c));
    if (c + 1 < n) {
      A[c + 1][c] = T.l(int(c)).to_rational();
      A[c][c + 1] = T.u(int(c)).to_rational();
    }
  }
  std::vector<std::vector<Rational>> P(n, std::vector<Rational>(n, Rational(0)));
  for (size_t r = 0; r < n; ++r) P[r][r] = Rational(1);
  for (int step = 0; step < m; ++step) {
    std::vector<std::vector<Rational>> Q(n, std::vector<Rational>(n, Rational(0)));
    for (size_t r = 0; r < n; ++r)
      for (size_t k = 0; k < n; ++k) {
        if (P[r][k].is_zero()) continue;
        for (size_t c = 0; c < n; ++c) Q[r][c] += P[r][k] * A[k][c];
      }
    P.swap(Q);
  }
  return P;
}

std::vector<std::vector<double>> truncated_power_float(const TridiagonalOperator& T,
                                                       int m, int N) {
  if (m < 0 || N < 0) throw usage_error("truncated_power: negative argument");
  size_t n = size_t(N) + 1;
  std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
  for (size_t c = 0; c < n; ++c) {
    A[c][c] = T.d(int(c)).to_double();
    if (c + 1 < n) {
      A[c + 1][c] = T.l(int(c)).to_double();
      A[c][c + 1] = T.u(int(c)).to_double();
    }
  }
  std::vector<std::vector<double>> P(n, std::vector<double>(n, 0.0));
  for (size_t r = 0; r < n; ++r) P[r][r] = 1.0;
  for (int step = 0; step < m; ++step) {
    std::vector<std::vector<double>> Q(n, std::vector<double>(n, 0.0));
    for (size_t r = 0; r < n; ++r)
      for (size_t k = 0; k < n; ++k)
        for (size_t c = 0; c < n; ++c) Q[r][c] += P[r][k] * A[k][c];
    P.swap(Q);
  }
  return P;
}

EigvecResult eigenvector_coeffs(const TridiagonalOperator& T, const Rational& z, int N) {
  EigvecResult r;
  r.p_values.push_back(Rational(1));
  if (N >= 1) r.p_values.push_back(z - T.d(0));
  for (int n = 1; n < N; ++n) {
    Rational next = (z - T.d(n)) * r.p_values[size_t(n)] -
                    T.lambda(n) * r.p_values[size_t(n - 1)];
    r.p_values.push_back(next);
  }
  Surd uprod(Rational(1));
  for (int n = 0; n <= N; ++n) {
    if (n > 0) {
      Surd un = T.u(n - 1);
      if (un.is_zero())
        throw domain_error("eigenvector_coeffs: u_" + std::to_string(n - 1) + " = 0");
      uprod = uprod * un;
    }
    r.h_values.push_back(Surd(r.p_values[size_t(n)]) * uprod.inv());
  }
  return r;
}

}  // namespace opx
