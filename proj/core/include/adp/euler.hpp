#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "adp/factor_table.hpp"

namespace adp {

// Euler-Mascheroni constant, 30 digits. Validated in the test suite against
// the limit sum_{k<=N} 1/k - log N at N = 1e8.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

// Global constants of the singular series:
//   K     = prod_p (1 + 1/((p-1)p)) = zeta(2) zeta(3) / zeta(6)
//   kappa = sum_p log p / (p^2 - p + 1)
// K comes from the closed form (production path); K_product is the truncated
// prime product kept as an independent cross-check. kappa is truncated at
// `cutoff` with tail below (log P + 2)/P.
struct EulerConstants {
  double K = 0.0;
  double K_product = 0.0;
  double kappa = 0.0;
  double zeta2 = 0.0;
  double zeta3 = 0.0;
  double zeta6 = 0.0;
  uint64_t cutoff = 0;
};

// Cached constants at the default cutoff of 2e8 (kappa tail ~1e-7).
const EulerConstants& euler_constants();
EulerConstants compute_euler_constants(uint64_t cutoff);

double zeta3_apery();

// h(s) = prod_p (1 + 1/((p-1) p^{s+1})) for s > -1/2, absolute tolerance tol.
// Near s = 0 the product is evaluated as K times the ratio prod_p
// (1+1/((p-1)p^{s+1})) / (1+1/((p-1)p)), whose tail shrinks with |s|; away
// from 0 plain truncation converges. Throws CapacityError when the certified
// tail bound cannot reach tol under the prime cap.
double h_value(double s, double tol);

// g_s(a) = prod_{p|a} (1 - p/((p-1)p^{s+1} + 1)); depends only on rad(a).
double g_s(uint64_t a, double s, const FactorTable& t);
std::vector<double> g_s_bulk(uint64_t X, double s, const FactorTable& t);

// c(s,a) = h(s) g_s(a); exact local factors over p | a times the truncated
// global product.
double c_value(uint64_t a, double s, double tol, const FactorTable& t);

// c'(0,a) = c(0,a) ( sum_{p|a} (log p/(p-1) + log p/(p^2-p+1)) - kappa ).
double c_derivative_at_zero(uint64_t a, double tol, const FactorTable& t);

// Bulk c(0,n) and c'(0,n) for n <= X, memoized on the radical through a
// linear-sieve recurrence (one multiply per index, logs only at primes).
struct CZeroTable {
  std::vector<double> c0;
  std::vector<double> c0prime;
};
CZeroTable tabulate_c_zero(uint64_t X, const FactorTable& t);

// psi_q(s) = (sum_{k|q} mu(k) k^{-s})^4; returns {psi(1), psi'(1), psi''(1),
// psi'''(1)} with entries beyond jmax zeroed. Exact symbolic differentiation
// of the finite Dirichlet polynomial via the power rule.
std::array<double, 4> psi_q_derivatives(uint64_t q, unsigned jmax, const FactorTable& t);

}  // namespace adp
