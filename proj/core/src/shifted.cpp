#include "adp/shifted.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "adp/arith.hpp"
#include "adp/errors.hpp"
#include "adp/euler.hpp"
#include "adp/kahan.hpp"
#include "adp/parallel.hpp"
#include "adp/polyfit.hpp"

namespace adp {

namespace {

constexpr uint64_t kBlock = 1 << 15;

struct BlockAcc {
  KahanSum real;
  __int128 exact = 0;
};

int64_t to_i64(__int128 v, const char* who) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw CapacityError(std::string(who) + ": exact accumulator exceeds 64 bits");
  return static_cast<int64_t>(v);
}

}  // namespace

ConvolutionResult shifted_sum(const ArithFunction& f, uint64_t X, int64_t shift,
                              const FactorTable& t) {
  if (shift == 0) throw DomainError("shifted_sum: shift must be nonzero");
  if (X < 1) throw DomainError("shifted_sum: X must be positive");
  uint64_t max_arg = (shift > 0) ? X + static_cast<uint64_t>(shift) : X;
  if (max_arg > t.bound()) throw DomainError("shifted_sum: X + shift exceeds table bound");

  uint64_t n0 = shift >= 1 ? 1 : static_cast<uint64_t>(1 - shift);  // first n with n+shift >= 1
  ConvolutionResult res;
  res.function = f.name();
  res.X = X;
  res.shift = shift;
  if (n0 > X) return res;

  auto tau_tab = tabulate_tau(t, max_arg);

  if (f.integer_valued()) {
    auto fv = f.tabulate_int(t, X);
    auto parts = parallel_blocks<__int128>(n0, X + 1, kBlock, [&](uint64_t, uint64_t lo, uint64_t hi) {
      __int128 acc = 0;
      for (uint64_t n = lo; n < hi; ++n)
        acc += static_cast<__int128>(fv[n]) *
               static_cast<__int128>(tau_tab[static_cast<uint64_t>(static_cast<int64_t>(n) + shift)]);
      return acc;
    });
    __int128 total = 0;
    for (const auto& p : parts) total += p;
    res.exact = to_i64(total, "shifted_sum");
    res.value = static_cast<double>(*res.exact);
  } else {
    auto fv = f.tabulate_real(t, X);
    auto parts = parallel_blocks<KahanSum>(n0, X + 1, kBlock, [&](uint64_t, uint64_t lo, uint64_t hi) {
      KahanSum acc;
      for (uint64_t n = lo; n < hi; ++n)
        acc.add(fv[n] * tau_tab[static_cast<uint64_t>(static_cast<int64_t>(n) + shift)]);
      return acc;
    });
    KahanSum total;
    for (const auto& p : parts) total.merge(p);
    res.value = total.value();
  }
  return res;
}

HyperbolaSides hyperbola_identity(const ArithFunction& f, uint64_t X, const FactorTable& t) {
  if (X < 2) throw DomainError("hyperbola_identity: X must be at least 2");
  if (X > t.bound()) throw DomainError("hyperbola_identity: X exceeds table bound");

  HyperbolaSides out;
  ConvolutionResult lhs = shifted_sum(f, X, -1, t);
  out.lhs = lhs.value;
  out.lhs_exact = lhs.exact;

  // q ranges over 1..floor(sqrt(X-1)); the divisor-pair term counts n with
  // n - 1 = q m, n - 1 > q^2; the square term adds f(k^2 + 1).
  uint64_t qlim = static_cast<uint64_t>(std::sqrt(static_cast<double>(X - 1)));
  while (qlim > 0 && qlim * qlim > X - 1) --qlim;
  while ((qlim + 1) * (qlim + 1) <= X - 1) ++qlim;

  if (f.integer_valued()) {
    auto fv = f.tabulate_int(t, X);
    auto parts = parallel_blocks<__int128>(1, qlim + 1, 1024, [&](uint64_t, uint64_t lo, uint64_t hi) {
      __int128 acc = 0;
      for (uint64_t q = lo; q < hi; ++q) {
        // n - 1 = q m > q^2  =>  m > q, n = qm + 1 <= X
        for (uint64_t m = q + 1; q * m + 1 <= X; ++m) acc += fv[q * m + 1];
      }
      return acc;
    });
    __int128 total = 0;
    for (const auto& p : parts) total += p;
    total *= 2;
    for (uint64_t k = 1; k * k + 1 <= X; ++k) total += fv[k * k + 1];
    out.rhs_exact = to_i64(total, "hyperbola_identity");
    out.rhs = static_cast<double>(*out.rhs_exact);
  } else {
    auto fv = f.tabulate_real(t, X);
    auto parts = parallel_blocks<KahanSum>(1, qlim + 1, 1024, [&](uint64_t, uint64_t lo, uint64_t hi) {
      KahanSum acc;
      for (uint64_t q = lo; q < hi; ++q)
        for (uint64_t m = q + 1; q * m + 1 <= X; ++m) acc.add(fv[q * m + 1]);
      return acc;
    });
    KahanSum pairs;
    for (const auto& p : parts) pairs.merge(p);
    KahanSum total;
    total.add(2.0 * pairs.value());
    for (uint64_t k = 1; k * k + 1 <= X; ++k) total.add(fv[k * k + 1]);
    out.rhs = total.value();
  }
  return out;
}

DivisorApResult divisor_sum_ap(uint64_t X, uint64_t q, int64_t l, const FactorTable& t) {
  if (q < 1) throw DomainError("divisor_sum_ap: q must be positive");
  if (X < 1 || X > t.bound()) throw DomainError("divisor_sum_ap: X out of table range");

  auto tau_tab = tabulate_tau(t, X);
  uint64_t r = static_cast<uint64_t>(((l % static_cast<int64_t>(q)) + static_cast<int64_t>(q)) %
                                     static_cast<int64_t>(q));
  uint64_t n0 = (r == 0) ? q : r;
  DivisorApResult res;
  __int128 acc = 0;
  for (uint64_t n = n0; n <= X; n += q) acc += tau_tab[n];
  res.exact = to_i64(acc, "divisor_sum_ap");

  // main term: X q^{-1} sum_{h|q} c_h(l) h^{-1} (log X + 2 gamma - 1 - 2 log h)
  double logX = std::log(static_cast<double>(X));
  KahanSum s;
  FactorTable::PrimePower fq[16];
  int kq = t.factorize(q, fq);
  int nd = 1;
  for (int i = 0; i < kq; ++i) nd *= fq[i].e + 1;
  std::vector<uint64_t> divs;
  divs.reserve(static_cast<size_t>(nd));
  divs.push_back(1);
  for (int i = 0; i < kq; ++i) {
    size_t old = divs.size();
    uint64_t pe = 1;
    for (uint32_t e = 1; e <= fq[i].e; ++e) {
      pe *= fq[i].p;
      for (size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  for (uint64_t h : divs) {
    int64_t ch = ramanujan_sum(h, l, t);
    if (ch == 0) continue;
    double hd = static_cast<double>(h);
    s.add(static_cast<double>(ch) / hd * (logX + 2.0 * kEulerGamma - 1.0 - 2.0 * std::log(hd)));
  }
  res.main = static_cast<double>(X) / static_cast<double>(q) * s.value();
  return res;
}

double mainterm_thm1(const ArithFunction& f, uint64_t X, const FactorTable& t) {
  if (X < 1 || X > t.bound()) throw DomainError("mainterm_thm1: X out of table range");
  auto cz = tabulate_c_zero(X, t);
  auto fv = f.tabulate_real(t, X);
  auto parts = parallel_blocks<KahanSum>(1, X + 1, kBlock, [&](uint64_t, uint64_t lo, uint64_t hi) {
    KahanSum acc;
    for (uint64_t n = lo; n < hi; ++n) {
      double fn = fv[n];
      if (fn == 0.0) continue;
      double logn = std::log(static_cast<double>(n));
      acc.add(fn * (cz.c0[n] * (logn + 2.0 * kEulerGamma) + 2.0 * cz.c0prime[n]));
    }
    return acc;
  });
  KahanSum total;
  for (const auto& p : parts) total.merge(p);
  return total.value();
}

Thm1Row thm1_compare(const ArithFunction& f, uint64_t X, const FactorTable& t) {
  Thm1Row row;
  row.X = X;
  row.S = shifted_sum(f, X, -1, t).value;
  row.main = mainterm_thm1(f, X, t);
  row.residual = row.S - row.main;
  double logX = std::log(static_cast<double>(X));
  row.normalized = std::abs(row.residual) / (static_cast<double>(X) * std::pow(logX, 0.6));
  row.ratio = row.S / row.main;
  return row;
}

MPhiLResult m_phi_l(const std::vector<uint64_t>& grid, unsigned l, const HeckeEigenvalues& E,
                    const FactorTable& t) {
  if (l < 1) throw DomainError("m_phi_l: l must be positive");
  if (grid.empty()) throw DomainError("m_phi_l: empty grid");
  MPhiLResult out;
  out.l = l;
  out.grid = grid;

  ArithFunction f = ArithFunction::parse(l == 1 ? "lambda" : "lambda^" + std::to_string(l));
  f.attach_hecke(std::shared_ptr<const HeckeEigenvalues>(&E, [](const HeckeEigenvalues*) {}));
  for (uint64_t X : grid) {
    if (X + 0 > E.bound() || X > t.bound()) throw DomainError("m_phi_l: X exceeds table bound");
    out.values.push_back(shifted_sum(f, X, -1, t).value);
  }

  if (l % 2 == 0) {
    unsigned j = l / 2;
    SymPowerMultiplicities mul = sym_power_multiplicities(l);
    (void)j;
    int degree = static_cast<int>(mul.leading);  // A_j = (2j)!/(j!(j+1)!)
    if (static_cast<size_t>(degree) + 1 <= grid.size()) {
      std::vector<double> xs, ys;
      for (size_t i = 0; i < grid.size(); ++i) {
        xs.push_back(std::log(static_cast<double>(grid[i])));
        ys.push_back(out.values[i] / static_cast<double>(grid[i]));
      }
      out.fit_coeffs = polyfit(xs, ys, degree);
    }
  }
  return out;
}

int64_t binary_divisor_sum(uint64_t M, uint64_t p1, uint64_t p2, int64_t w1, int64_t w2,
                           const FactorTable& t) {
  if (M < 1) throw DomainError("binary_divisor_sum: M must be positive");
  auto max_arg = [&](uint64_t p, int64_t w) -> uint64_t {
    int64_t v = static_cast<int64_t>(p * M) + w;
    return v > 0 ? static_cast<uint64_t>(v) : 0;
  };
  uint64_t need = std::max(max_arg(p1, w1), max_arg(p2, w2));
  if (need > t.bound()) throw DomainError("binary_divisor_sum: arguments exceed table bound");

  auto tau_tab = tabulate_tau(t, need);
  auto parts = parallel_blocks<__int128>(1, M + 1, kBlock, [&](uint64_t, uint64_t lo, uint64_t hi) {
    __int128 acc = 0;
    for (uint64_t m = lo; m < hi; ++m) {
      int64_t a1 = static_cast<int64_t>(p1 * m) + w1;
      int64_t a2 = static_cast<int64_t>(p2 * m) + w2;
      if (a1 <= 0 || a2 <= 0) continue;
      acc += static_cast<__int128>(tau_tab[static_cast<uint64_t>(a1)]) *
             static_cast<__int128>(tau_tab[static_cast<uint64_t>(a2)]);
    }
    return acc;
  });
  __int128 total = 0;
  for (const auto& p : parts) total += p;
  return to_i64(total, "binary_divisor_sum");
}

std::array<double, 4> fit_tau4_poly(const FactorTable& t, uint64_t Xlo, uint64_t Xhi, int points) {
  if (Xlo < 16 || Xhi <= Xlo) throw DomainError("fit_tau4_poly: bad grid range");
  if (Xhi > t.bound()) throw DomainError("fit_tau4_poly: Xhi exceeds table bound");
  if (points < 5) points = 5;

  auto tau4_tab = tabulate_tau4(t, Xhi);
  // Prefix sums at the geometric grid points.
  std::vector<uint64_t> grid;
  double ratio = std::pow(static_cast<double>(Xhi) / static_cast<double>(Xlo),
                          1.0 / static_cast<double>(points - 1));
  double x = static_cast<double>(Xlo);
  for (int i = 0; i < points; ++i) {
    grid.push_back(static_cast<uint64_t>(x));
    x *= ratio;
  }
  grid.back() = Xhi;

  std::vector<double> xs, ys;
  __int128 acc = 0;
  uint64_t n = 1;
  for (uint64_t g : grid) {
    for (; n <= g; ++n) acc += tau4_tab[n];
    xs.push_back(std::log(static_cast<double>(g)));
    ys.push_back(static_cast<double>(acc) / static_cast<double>(g));
  }
  auto c = polyfit(xs, ys, 3);
  return {c[0], c[1], c[2], c[3]};
}

Tau4ApResult tau4_ap_check(uint64_t X, uint64_t q, int64_t a, const FactorTable& t,
                           const std::array<double, 4>& b3) {
  if (q < 1) throw DomainError("tau4_ap_check: q must be positive");
  uint64_t ar = static_cast<uint64_t>(((a % static_cast<int64_t>(q)) + static_cast<int64_t>(q)) %
                                      static_cast<int64_t>(q));
  if (std::gcd(ar == 0 ? q : ar, q) != 1) throw DomainError("tau4_ap_check: a must be coprime to q");
  if (X < 1 || X > t.bound()) throw DomainError("tau4_ap_check: X out of table range");

  auto tau4_tab = tabulate_tau4(t, X);
  uint64_t n0 = (ar == 0) ? q : ar;
  __int128 acc = 0;
  for (uint64_t n = n0; n <= X; n += q) acc += tau4_tab[n];

  // main = X/phi(q) * sum_{j=0}^{3} (1/j!) B3^{(j)}(log X) psi_q^{(j)}(1),
  // where B3 is the fitted q = 1 cubic; its derivatives supply the lower
  // degree companion polynomials.
  double u = std::log(static_cast<double>(X));
  auto psi = psi_q_derivatives(q, 3, t);
  std::vector<double> b{b3[0], b3[1], b3[2], b3[3]};
  double fact = 1.0;
  double main = 0.0;
  std::vector<double> cur = b;
  for (unsigned j = 0; j <= 3; ++j) {
    if (j > 0) {
      fact *= j;
      std::vector<double> d(cur.size() - 1);
      for (size_t i = 1; i < cur.size(); ++i) d[i - 1] = cur[i] * static_cast<double>(i);
      cur = d;
    }
    main += polyval(cur, u) * psi[j] / fact;
  }
  main *= static_cast<double>(X) / static_cast<double>(euler_phi(q, t));

  Tau4ApResult res;
  res.exact = to_i64(acc, "tau4_ap_check");
  res.main = main;
  return res;
}

}  // namespace adp
