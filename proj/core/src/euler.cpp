#include "adp/euler.hpp"

#include <cmath>
#include <numbers>

#include "adp/errors.hpp"
#include "adp/kahan.hpp"

namespace adp {

namespace {

constexpr uint64_t kDefaultCutoff = 200'000'000;
constexpr uint64_t kPrimeCap = 1'000'000'000;

double local_ratio_c0(double p) {
  // (1 - 1/p) / (1 + 1/((p-1)p)) = (p-1)^2 / (p^2 - p + 1)
  return (p - 1.0) * (p - 1.0) / (p * p - p + 1.0);
}

}  // namespace

double zeta3_apery() {
  // zeta(3) = (5/2) sum_{k>=1} (-1)^{k-1} / (k^3 binom(2k,k)), term ratio
  // t_{k+1}/t_k = -k^3 / ((k+1)(2k+1)(2k+2)).
  double term = 0.5;  // k = 1: 1/(1 * 2) = 1/2
  KahanSum s;
  for (int k = 1; k <= 64; ++k) {
    s.add(term);
    double kd = static_cast<double>(k);
    term *= -(kd * kd * kd) / ((kd + 1.0) * (2.0 * kd + 1.0) * (2.0 * kd + 2.0));
    if (std::abs(term) < 1e-30) break;
  }
  return 2.5 * s.value();
}

EulerConstants compute_euler_constants(uint64_t cutoff) {
  if (cutoff < 10) throw DomainError("compute_euler_constants: cutoff too small");
  EulerConstants c;
  c.cutoff = cutoff;
  const double pi = std::numbers::pi;
  c.zeta2 = pi * pi / 6.0;
  c.zeta6 = pi * pi * pi * pi * pi * pi / 945.0;
  c.zeta3 = zeta3_apery();
  c.K = c.zeta2 * c.zeta3 / c.zeta6;

  KahanSum logK;
  KahanSum kappa;
  for_primes_up_to(cutoff, [&](uint64_t p) {
    double pd = static_cast<double>(p);
    logK.add(std::log1p(1.0 / ((pd - 1.0) * pd)));
    kappa.add(std::log(pd) / (pd * pd - pd + 1.0));
  });
  c.K_product = std::exp(logK.value());
  c.kappa = kappa.value();
  return c;
}

const EulerConstants& euler_constants() {
  static const EulerConstants c = compute_euler_constants(kDefaultCutoff);
  return c;
}

namespace {

// Truncation point for the direct product at s >= 1/4: log-tail bounded by
// sum_{n>P} 2 n^{-s-2} <= 2 P^{-s-1}/(s+1).
uint64_t direct_cutoff(double s, double tol) {
  double need = std::pow(2.0 / (tol * (s + 1.0)), 1.0 / (s + 1.0));
  if (!(need >= 3.0)) return 3;
  if (need > static_cast<double>(kPrimeCap))
    throw CapacityError("h_value: tolerance unreachable at this s (direct route)");
  return static_cast<uint64_t>(need) + 1;
}

// Truncation point for the ratio route at |s| < 1/4: log-tail bounded by
//   s >= 0:   2 s (log P + 1) / P
//   s <  0:   2|s| (log P/(1-|s|) + 1/(1-|s|)^2) P^{-(1-|s|)}
uint64_t ratio_cutoff(double s, double tol) {
  double as = std::abs(s);
  if (as == 0.0) return 10;
  for (uint64_t P = 1024; P <= kPrimeCap; P *= 2) {
    double lp = std::log(static_cast<double>(P));
    double bound;
    if (s >= 0) {
      bound = 2.0 * as * (lp + 1.0) / static_cast<double>(P);
    } else {
      double q = 1.0 - as;
      bound = 2.0 * as * (lp / q + 1.0 / (q * q)) * std::pow(static_cast<double>(P), -q);
    }
    if (bound <= tol) return P;
  }
  throw CapacityError("h_value: tolerance unreachable at this s (ratio route)");
}

}  // namespace

double h_value(double s, double tol) {
  if (s <= -0.5) throw DomainError("h_value: s must exceed -1/2");
  if (tol <= 0) throw DomainError("h_value: tol must be positive");

  if (std::abs(s) < 0.25) {
    // h(s) = K * prod_p r_p(s), r_p = (1 + 1/((p-1)p^{s+1})) / (1 + 1/((p-1)p)).
    const EulerConstants& c = euler_constants();
    if (s == 0.0) return c.K;
    uint64_t P = ratio_cutoff(s, tol / (2.0 * c.K));
    KahanSum logr;
    for_primes_up_to(P, [&](uint64_t p) {
      double pd = static_cast<double>(p);
      double u0 = 1.0 / ((pd - 1.0) * pd);
      double us = 1.0 / ((pd - 1.0) * std::pow(pd, s + 1.0));
      logr.add(std::log1p(us) - std::log1p(u0));
    });
    return c.K * std::exp(logr.value());
  }

  uint64_t P = direct_cutoff(s, tol / 2.0);
  KahanSum logh;
  for_primes_up_to(P, [&](uint64_t p) {
    double pd = static_cast<double>(p);
    logh.add(std::log1p(1.0 / ((pd - 1.0) * std::pow(pd, s + 1.0))));
  });
  return std::exp(logh.value());
}

double g_s(uint64_t a, double s, const FactorTable& t) {
  if (a < 1) throw DomainError("g_s: a must be positive");
  FactorTable::PrimePower f[16];
  int k = t.factorize(a, f);
  double v = 1.0;
  for (int i = 0; i < k; ++i) {
    double pd = static_cast<double>(f[i].p);
    v *= 1.0 - pd / ((pd - 1.0) * std::pow(pd, s + 1.0) + 1.0);
  }
  return v;
}

std::vector<double> g_s_bulk(uint64_t X, double s, const FactorTable& t) {
  if (X > t.bound()) throw DomainError("g_s_bulk: X exceeds table bound");
  std::vector<double> v(X + 1, 0.0);
  if (X >= 1) v[1] = 1.0;
  // g depends only on the radical: g(n) = g(n/p) when p^2 | n at p = spf(n).
  for (uint64_t n = 2; n <= X; ++n) {
    uint32_t p = t.spf(n);
    uint64_t m = n / p;
    if (m % p == 0) {
      v[n] = v[m];
    } else {
      double pd = static_cast<double>(p);
      v[n] = v[m] * (1.0 - pd / ((pd - 1.0) * std::pow(pd, s + 1.0) + 1.0));
    }
  }
  return v;
}

double c_value(uint64_t a, double s, double tol, const FactorTable& t) {
  if (a < 1) throw DomainError("c_value: a must be positive");
  return h_value(s, tol) * g_s(a, s, t);
}

double c_derivative_at_zero(uint64_t a, double tol, const FactorTable& t) {
  if (tol <= 0) throw DomainError("c_derivative_at_zero: tol must be positive");
  const EulerConstants& c = euler_constants();
  double kappa_tail = (std::log(static_cast<double>(c.cutoff)) + 2.0) / static_cast<double>(c.cutoff);
  if (kappa_tail > tol)
    throw CapacityError("c_derivative_at_zero: kappa cutoff cannot certify requested tolerance");
  FactorTable::PrimePower f[16];
  int k = t.factorize(a, f);
  KahanSum w;
  for (int i = 0; i < k; ++i) {
    double pd = static_cast<double>(f[i].p);
    double lp = std::log(pd);
    w.add(lp / (pd - 1.0));
    w.add(lp / (pd * pd - pd + 1.0));
  }
  double c0 = c.K * g_s(a, 0.0, t);
  return c0 * (w.value() - c.kappa);
}

CZeroTable tabulate_c_zero(uint64_t X, const FactorTable& t) {
  if (X > t.bound()) throw DomainError("tabulate_c_zero: X exceeds table bound");
  const EulerConstants& cst = euler_constants();
  CZeroTable out;
  out.c0.assign(X + 1, 0.0);
  out.c0prime.assign(X + 1, 0.0);
  std::vector<double> sumw(X + 1, 0.0);
  if (X >= 1) {
    out.c0[1] = cst.K;
    out.c0prime[1] = -cst.K * cst.kappa;
  }
  for (uint64_t n = 2; n <= X; ++n) {
    uint32_t p = t.spf(n);
    uint64_t m = n / p;
    if (m % p == 0) {
      out.c0[n] = out.c0[m];
      sumw[n] = sumw[m];
    } else {
      double pd = static_cast<double>(p);
      double lp = std::log(pd);
      out.c0[n] = out.c0[m] * local_ratio_c0(pd);
      sumw[n] = sumw[m] + lp / (pd - 1.0) + lp / (pd * pd - pd + 1.0);
    }
    out.c0prime[n] = out.c0[n] * (sumw[n] - cst.kappa);
  }
  return out;
}

std::array<double, 4> psi_q_derivatives(uint64_t q, unsigned jmax, const FactorTable& t) {
  if (q < 1) throw DomainError("psi_q_derivatives: q must be positive");
  if (jmax > 3) throw DomainError("psi_q_derivatives: jmax must be at most 3");
  // Inner sum I(s) = sum_{k|q} mu(k) k^{-s} = prod_{p|q} (1 - p^{-s});
  // I^{(i)}(1) = sum over squarefree divisors k of mu(k) (-log k)^i / k.
  FactorTable::PrimePower f[16];
  int np = t.factorize(q, f);
  double I[4] = {0.0, 0.0, 0.0, 0.0};
  int nsub = 1 << np;
  for (int mask = 0; mask < nsub; ++mask) {
    double k = 1.0;
    int bits = 0;
    for (int i = 0; i < np; ++i)
      if (mask & (1 << i)) {
        k *= static_cast<double>(f[i].p);
        ++bits;
      }
    double mu = (bits % 2 == 0) ? 1.0 : -1.0;
    double lk = std::log(k);
    double pw = 1.0;
    for (int i = 0; i < 4; ++i) {
      I[i] += mu * pw / k;
      pw *= -lk;
    }
  }
  std::array<double, 4> psi{};
  double I0 = I[0], I1 = I[1], I2 = I[2], I3 = I[3];
  psi[0] = I0 * I0 * I0 * I0;
  psi[1] = 4.0 * I0 * I0 * I0 * I1;
  psi[2] = 12.0 * I0 * I0 * I1 * I1 + 4.0 * I0 * I0 * I0 * I2;
  psi[3] = 24.0 * I0 * I1 * I1 * I1 + 36.0 * I0 * I0 * I1 * I2 + 4.0 * I0 * I0 * I0 * I3;
  for (unsigned i = jmax + 1; i < 4; ++i) psi[i] = 0.0;
  return psi;
}

}  // namespace adp
