#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adp/arith_function.hpp"
#include "adp/factor_table.hpp"

namespace adp {

// S_f(X, l) = sum_{n} f(n) tau(n + l), n from max(1, 1 - l) to X.
struct ConvolutionResult {
  std::string function;
  uint64_t X = 0;
  int64_t shift = 0;
  double value = 0.0;
  std::optional<int64_t> exact;     // set when f is integer-valued
  std::optional<double> mainterm;
  std::optional<double> residual;   // value - mainterm
};

ConvolutionResult shifted_sum(const ArithFunction& f, uint64_t X, int64_t shift,
                              const FactorTable& t);

// Exact regrouping of S_f(X,-1) over divisors q <= sqrt(X-1):
//   lhs = sum f(n) tau(n-1)
//   rhs = 2 sum_{q} sum_{n <= X, n = 1 (q), n-1 > q^2} f(n) + sum_{n-1 square} f(n)
// The two sides are equal identically; for integer-valued f both come out of
// exact integer accumulation.
struct HyperbolaSides {
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<int64_t> lhs_exact;
  std::optional<int64_t> rhs_exact;
};
HyperbolaSides hyperbola_identity(const ArithFunction& f, uint64_t X, const FactorTable& t);

// D(X; q, l) = sum_{n <= X, n = l (q)} tau(n) together with the closed main
// term X q^{-1} sum_{h|q} c_h(l) h^{-1} (log X + 2 gamma - 1 - 2 log h).
struct DivisorApResult {
  int64_t exact = 0;
  double main = 0.0;
};
DivisorApResult divisor_sum_ap(uint64_t X, uint64_t q, int64_t l, const FactorTable& t);

// sum_{n <= X} f(n) (c(0,n)(log n + 2 gamma) + 2 c'(0,n)).
double mainterm_thm1(const ArithFunction& f, uint64_t X, const FactorTable& t);

// Shifted-sum vs main-term comparison row.
struct Thm1Row {
  uint64_t X = 0;
  double S = 0.0;
  double main = 0.0;
  double residual = 0.0;
  double normalized = 0.0;  // |residual| / (X (log X)^0.6)
  double ratio = 0.0;       // S / main
};
Thm1Row thm1_compare(const ArithFunction& f, uint64_t X, const FactorTable& t);

// M_{phi,l}(X) = sum lambda(n)^l tau(n-1), brute force. For even l = 2j a
// least-squares fit of value/X against a polynomial in log X of degree
// (2j)!/(j!(j+1)!) across the supplied grid.
struct MPhiLResult {
  unsigned l = 0;
  std::vector<uint64_t> grid;
  std::vector<double> values;       // M_{phi,l}(X_i)
  std::vector<double> fit_coeffs;   // even l only, ascending powers of log X
};
MPhiLResult m_phi_l(const std::vector<uint64_t>& grid, unsigned l, const HeckeEigenvalues& E,
                    const FactorTable& t);

// V = sum_{m <= M} tau(p1 m + w1) tau(p2 m + w2), skipping m with a
// nonpositive argument.
int64_t binary_divisor_sum(uint64_t M, uint64_t p1, uint64_t p2, int64_t w1, int64_t w2,
                           const FactorTable& t);

// Cubic main-term data for tau4 in arithmetic progressions: the q = 1 cubic
// B3 is recovered by least squares on exact sums over a geometric grid, and
// general q uses psi_q^{(j)}(1) with the derivatives B3^{(j)}.
std::array<double, 4> fit_tau4_poly(const FactorTable& t, uint64_t Xlo, uint64_t Xhi,
                                    int points = 12);

struct Tau4ApResult {
  int64_t exact = 0;
  double main = 0.0;
};
Tau4ApResult tau4_ap_check(uint64_t X, uint64_t q, int64_t a, const FactorTable& t,
                           const std::array<double, 4>& b3poly);

}  // namespace adp
