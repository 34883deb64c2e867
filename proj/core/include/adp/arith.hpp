#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adp/factor_table.hpp"

namespace adp {

// Point evaluators over a factor table. All preconditions (n <= bound) throw
// DomainError. Integer-valued functions stay exact; von Mangoldt returns the
// real log p.
int64_t tau(uint64_t n, const FactorTable& t);
int64_t tau_k(unsigned k, uint64_t n, const FactorTable& t);
int64_t tau4(uint64_t n, const FactorTable& t);
int mobius(uint64_t n, const FactorTable& t);
uint64_t euler_phi(uint64_t n, const FactorTable& t);
int omega(uint64_t n, const FactorTable& t);
double von_mangoldt(uint64_t n, const FactorTable& t);

// Named dispatch mirroring the CLI identifiers: tau, tau_k:<k>, mobius (mu),
// phi, vonmangoldt (Lambda), omega. Throws DomainError for unknown names.
double eval_arith(const std::string& name, uint64_t n, const FactorTable& t);

// Bulk tables over [0, X]; index 0 is a zero/ignored slot so that v[n] is the
// value at n. Linear sieve recurrences, deterministic.
std::vector<uint32_t> tabulate_tau(const FactorTable& t, uint64_t X);
std::vector<uint32_t> tabulate_tau4(const FactorTable& t, uint64_t X);
std::vector<int8_t> tabulate_mobius(const FactorTable& t, uint64_t X);
std::vector<uint32_t> tabulate_phi(const FactorTable& t, uint64_t X);
std::vector<double> tabulate_von_mangoldt(const FactorTable& t, uint64_t X);

// Ramanujan sum c_q(l) via the mu/gcd formula
//   c_q(l) = sum_{d | (q,l)} d mu(q/d),
// with c_q(0) = phi(q). Exact 64-bit integers; q must be <= table bound.
int64_t ramanujan_sum(uint64_t q, int64_t l, const FactorTable& t);

// sigma_{-1}^{(r)}(a) = sum_{d | |a|} (log d)^r / d, with the convention
// 0^0 = 1 so the d = 1 term contributes 1 when r = 0 and nothing otherwise.
double sigma_log(unsigned r, int64_t a, const FactorTable& t);

// Y(a) = sum_{h>=1} |c_h(a)| h^{-2}, truncated once the tail bound
// sum_{h>H} |a|/h^2 < |a|/H drops below tol.
double y_series(int64_t a, double tol, const FactorTable& t, uint64_t max_terms = 1ull << 26);

// Y^{(j)}(X; a, m) = sum_{h<=X, (h,m)=1} c_h(a) h^{-2} (log h)^j, exact finite sum.
double y_truncated(double X, int64_t a, uint64_t m, unsigned j, const FactorTable& t);

}  // namespace adp
