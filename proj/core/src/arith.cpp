#include "adp/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "adp/errors.hpp"
#include "adp/kahan.hpp"

namespace adp {

namespace {

void check_range(uint64_t n, const FactorTable& t, const char* who) {
  if (n < 1 || n > t.bound()) throw DomainError(std::string(who) + ": n out of table range");
}

// binom(e + k - 1, k - 1) with overflow checks; this is tau_k at p^e.
int64_t ordered_factorizations_local(unsigned k, unsigned e) {
  // numerator (e+1)(e+2)...(e+k-1), denominator (k-1)!
  __int128 v = 1;
  for (unsigned i = 1; i < k; ++i) {
    v = v * (e + i) / i;  // running product stays integral (binomial prefix)
    if (v > static_cast<__int128>(1) << 62) throw CapacityError("tau_k: value exceeds 64 bits");
  }
  return static_cast<int64_t>(v);
}

}  // namespace

int64_t tau(uint64_t n, const FactorTable& t) {
  check_range(n, t, "tau");
  FactorTable::PrimePower f[16];
  int k = t.factorize(n, f);
  int64_t v = 1;
  for (int i = 0; i < k; ++i) v *= f[i].e + 1;
  return v;
}

int64_t tau_k(unsigned k, uint64_t n, const FactorTable& t) {
  if (k < 1 || k > 64) throw DomainError("tau_k: k must be in [1, 64]");
  check_range(n, t, "tau_k");
  FactorTable::PrimePower f[16];
  int m = t.factorize(n, f);
  int64_t v = 1;
  for (int i = 0; i < m; ++i) {
    int64_t loc = ordered_factorizations_local(k, f[i].e);
    __int128 prod = static_cast<__int128>(v) * loc;
    if (prod > static_cast<__int128>(1) << 62) throw CapacityError("tau_k: value exceeds 64 bits");
    v = static_cast<int64_t>(prod);
  }
  return v;
}

int64_t tau4(uint64_t n, const FactorTable& t) { return tau_k(4, n, t); }

int mobius(uint64_t n, const FactorTable& t) {
  check_range(n, t, "mobius");
  FactorTable::PrimePower f[16];
  int k = t.factorize(n, f);
  for (int i = 0; i < k; ++i)
    if (f[i].e > 1) return 0;
  return (k % 2 == 0) ? 1 : -1;
}

uint64_t euler_phi(uint64_t n, const FactorTable& t) {
  check_range(n, t, "phi");
  FactorTable::PrimePower f[16];
  int k = t.factorize(n, f);
  uint64_t v = n;
  for (int i = 0; i < k; ++i) v = v / f[i].p * (f[i].p - 1);
  return v;
}

int omega(uint64_t n, const FactorTable& t) {
  check_range(n, t, "omega");
  FactorTable::PrimePower f[16];
  return t.factorize(n, f);
}

double von_mangoldt(uint64_t n, const FactorTable& t) {
  check_range(n, t, "vonmangoldt");
  if (n == 1) return 0.0;
  FactorTable::PrimePower f[16];
  int k = t.factorize(n, f);
  if (k != 1) return 0.0;
  return std::log(static_cast<double>(f[0].p));
}

double eval_arith(const std::string& name, uint64_t n, const FactorTable& t) {
  if (name == "tau") return static_cast<double>(tau(n, t));
  if (name.rfind("tau_k:", 0) == 0) {
    unsigned k = static_cast<unsigned>(std::stoul(name.substr(6)));
    return static_cast<double>(tau_k(k, n, t));
  }
  if (name == "tau4") return static_cast<double>(tau4(n, t));
  if (name == "mobius" || name == "mu") return static_cast<double>(mobius(n, t));
  if (name == "phi") return static_cast<double>(euler_phi(n, t));
  if (name == "omega") return static_cast<double>(omega(n, t));
  if (name == "vonmangoldt" || name == "Lambda") return von_mangoldt(n, t);
  throw DomainError("eval_arith: unknown function '" + name + "'");
}

std::vector<uint32_t> tabulate_tau(const FactorTable& t, uint64_t X) {
  if (X > t.bound()) throw DomainError("tabulate_tau: X exceeds table bound");
  std::vector<uint32_t> v(X + 1, 0);
  std::vector<uint8_t> e_spf(X + 1, 0);  // exponent of spf(n) in n
  if (X >= 1) v[1] = 1;
  for (uint64_t n = 2; n <= X; ++n) {
    uint32_t p = t.spf(n);
    uint64_t m = n / p;
    if (m % p != 0) {
      e_spf[n] = 1;
      v[n] = v[m] * 2;
    } else {
      e_spf[n] = e_spf[m] + 1;
      v[n] = v[m] / (e_spf[m] + 1) * (e_spf[m] + 2);
    }
  }
  return v;
}

std::vector<uint32_t> tabulate_tau4(const FactorTable& t, uint64_t X) {
  if (X > t.bound()) throw DomainError("tabulate_tau4: X exceeds table bound");
  std::vector<uint32_t> v(X + 1, 0);
  std::vector<uint8_t> e_spf(X + 1, 0);
  if (X >= 1) v[1] = 1;
  auto local = [](uint32_t e) -> uint32_t {
    // binom(e+3, 3)
    return static_cast<uint32_t>((static_cast<uint64_t>(e + 1) * (e + 2) * (e + 3)) / 6);
  };
  for (uint64_t n = 2; n <= X; ++n) {
    uint32_t p = t.spf(n);
    uint64_t m = n / p;
    if (m % p != 0) {
      e_spf[n] = 1;
      v[n] = v[m] * 4;
    } else {
      e_spf[n] = e_spf[m] + 1;
      v[n] = v[m] / local(e_spf[m]) * local(e_spf[n]);
    }
  }
  return v;
}

std::vector<int8_t> tabulate_mobius(const FactorTable& t, uint64_t X) {
  if (X > t.bound()) throw DomainError("tabulate_mobius: X exceeds table bound");
  std::vector<int8_t> v(X + 1, 0);
  if (X >= 1) v[1] = 1;
  for (uint64_t n = 2; n <= X; ++n) {
    uint32_t p = t.spf(n);
    uint64_t m = n / p;
    v[n] = (m % p == 0) ? 0 : -v[m];
  }
  return v;
}

std::vector<uint32_t> tabulate_phi(const FactorTable& t, uint64_t X) {
  if (X > t.bound()) throw DomainError("tabulate_phi: X exceeds table bound");
  std::vector<uint32_t> v(X + 1, 0);
  if (X >= 1) v[1] = 1;
  for (uint64_t n = 2; n <= X; ++n) {
    uint32_t p = t.spf(n);
    uint64_t m = n / p;
    v[n] = (m % p == 0) ? v[m] * p : v[m] * (p - 1);
  }
  return v;
}

std::vector<double> tabulate_von_mangoldt(const FactorTable& t, uint64_t X) {
  if (X > t.bound()) throw DomainError("tabulate_von_mangoldt: X exceeds table bound");
  std::vector<double> v(X + 1, 0.0);
  for (uint32_t p : t.primes()) {
    if (p > X) break;
    double lp = std::log(static_cast<double>(p));
    for (uint64_t q = p; q <= X; q *= p) {
      v[q] = lp;
      if (q > X / p) break;
    }
  }
  return v;
}

int64_t ramanujan_sum(uint64_t q, int64_t l, const FactorTable& t) {
  if (q < 1) throw DomainError("ramanujan_sum: q must be positive");
  if (q > t.bound()) throw DomainError("ramanujan_sum: q out of table range");
  uint64_t al = l < 0 ? static_cast<uint64_t>(-l) : static_cast<uint64_t>(l);
  uint64_t g = (l == 0) ? q : std::gcd(q, al);
  // c_q(0) = phi(q) falls out of the same formula with (q, 0) = q.
  FactorTable::PrimePower fg[16];
  int kg = t.factorize(g, fg);
  // Enumerate divisors d of g; mu(q/d) vanishes unless q/d is squarefree.
  int64_t total = 0;
  int nd = 1;
  for (int i = 0; i < kg; ++i) nd *= fg[i].e + 1;
  for (int idx = 0; idx < nd; ++idx) {
    uint64_t d = 1;
    int rem = idx;
    for (int i = 0; i < kg; ++i) {
      int e = rem % (fg[i].e + 1);
      rem /= fg[i].e + 1;
      for (int j = 0; j < e; ++j) d *= fg[i].p;
    }
    uint64_t qd = q / d;
    int mu = mobius(qd, t);
    total += mu * static_cast<int64_t>(d);
  }
  return total;
}

double sigma_log(unsigned r, int64_t a, const FactorTable& t) {
  if (a == 0) throw DomainError("sigma_log: a must be nonzero");
  uint64_t n = a < 0 ? static_cast<uint64_t>(-a) : static_cast<uint64_t>(a);
  check_range(n, t, "sigma_log");
  FactorTable::PrimePower f[16];
  int k = t.factorize(n, f);
  int nd = 1;
  for (int i = 0; i < k; ++i) nd *= f[i].e + 1;
  // Enumerate divisors in ascending order for a fixed accumulation order.
  std::vector<uint64_t> divs;
  divs.reserve(static_cast<size_t>(nd));
  divs.push_back(1);
  for (int i = 0; i < k; ++i) {
    size_t old = divs.size();
    uint64_t pe = 1;
    for (uint32_t e = 1; e <= f[i].e; ++e) {
      pe *= f[i].p;
      for (size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  KahanSum s;
  for (uint64_t d : divs) {
    double term = (r == 0) ? 1.0 : std::pow(std::log(static_cast<double>(d)), static_cast<double>(r));
    s.add(term / static_cast<double>(d));
  }
  return s.value();
}

double y_series(int64_t a, double tol, const FactorTable& t, uint64_t max_terms) {
  if (a == 0) throw DomainError("y_series: a must be nonzero");
  if (tol <= 0) throw DomainError("y_series: tol must be positive");
  uint64_t aa = a < 0 ? static_cast<uint64_t>(-a) : static_cast<uint64_t>(a);
  // Tail bound: |c_h(a)| <= (h, a) <= |a|, so sum_{h>H} |a|/h^2 < |a|/H.
  uint64_t H = static_cast<uint64_t>(static_cast<double>(aa) / tol) + 1;
  if (H > max_terms)
    throw CapacityError("y_series: tolerance needs " + std::to_string(H) +
                        " terms, above the iteration cap");
  if (H > t.bound()) throw DomainError("y_series: truncation point exceeds table bound");
  KahanSum s;
  for (uint64_t h = 1; h <= H; ++h) {
    int64_t c = ramanujan_sum(h, a, t);
    double ac = static_cast<double>(c < 0 ? -c : c);
    s.add(ac / (static_cast<double>(h) * static_cast<double>(h)));
  }
  return s.value();
}

double y_truncated(double X, int64_t a, uint64_t m, unsigned j, const FactorTable& t) {
  if (a == 0) throw DomainError("y_truncated: a must be nonzero");
  if (m < 1) throw DomainError("y_truncated: m must be positive");
  if (X < 1) return 0.0;
  uint64_t H = static_cast<uint64_t>(X);
  if (H > t.bound()) throw DomainError("y_truncated: X exceeds table bound");
  KahanSum s;
  for (uint64_t h = 1; h <= H; ++h) {
    if (std::gcd(h, m) != 1) continue;
    int64_t c = ramanujan_sum(h, a, t);
    if (c == 0) continue;
    double lg = (j == 0) ? 1.0 : std::pow(std::log(static_cast<double>(h)), static_cast<double>(j));
    s.add(static_cast<double>(c) * lg / (static_cast<double>(h) * static_cast<double>(h)));
  }
  return s.value();
}

}  // namespace adp
