#include "adp/hecke.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "adp/errors.hpp"

namespace adp {

namespace {

// Euler / Jacobi: prod_{n>=1} (1-q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}.
struct SparseTerm {
  uint64_t offset;
  int64_t coeff;
};

std::vector<SparseTerm> jacobi_cube_terms(uint64_t N) {
  std::vector<SparseTerm> terms;
  for (uint64_t k = 0;; ++k) {
    uint64_t off = k * (k + 1) / 2;
    if (off > N) break;
    int64_t c = static_cast<int64_t>(2 * k + 1);
    terms.push_back({off, (k % 2 == 0) ? c : -c});
  }
  return terms;
}

constexpr int128 int128_max() {
  return static_cast<int128>((~static_cast<unsigned __int128>(0)) >> 1);
}

// out = in * J truncated at degree N. When max|in| * sum|coeff| provably fits
// in 128 bits the pass runs unchecked (every partial sum is bounded by that
// product); otherwise each operation is overflow-checked.
void mul_jacobi(const std::vector<int128>& in, std::vector<int128>& out,
                const std::vector<SparseTerm>& terms, uint64_t N) {
  int128 coeff_l1 = 0;
  for (const SparseTerm& t : terms) coeff_l1 += t.coeff < 0 ? -t.coeff : t.coeff;
  int128 maxabs = 0;
  for (const int128& v : in) {
    int128 a = v < 0 ? -v : v;
    if (a > maxabs) maxabs = a;
  }
  out.assign(N + 1, 0);
  const bool safe = coeff_l1 > 0 && maxabs <= int128_max() / coeff_l1;
  if (safe) {
    for (const SparseTerm& t : terms) {
      const int128 c = t.coeff;
      const uint64_t off = t.offset;
      const int128* src = in.data();
      int128* dst = out.data() + off;
      const uint64_t len = N + 1 - off;
      for (uint64_t i = 0; i < len; ++i) dst[i] += c * src[i];
    }
  } else {
    for (const SparseTerm& t : terms) {
      const int128 c = t.coeff;
      const uint64_t off = t.offset;
      for (uint64_t i = off; i <= N; ++i) {
        out[i] = checked_add(out[i], checked_mul(c, in[i - off]));
      }
    }
  }
}

}  // namespace

HeckeEigenvalues HeckeEigenvalues::build(uint64_t N) {
  if (N < 1) throw DomainError("HeckeEigenvalues::build: N must be positive");
  if (N > kCap) throw CapacityError("HeckeEigenvalues::build: N above cap " + std::to_string(kCap));

  // tau_R(n) is the coefficient of q^{n-1} in prod (1-q^n)^24 = J^8.
  const uint64_t deg = N - 1;
  auto terms = jacobi_cube_terms(deg);

  std::vector<int128> cur(deg + 1, 0);
  for (const SparseTerm& t : terms) cur[t.offset] = t.coeff;  // cur = J
  std::vector<int128> next;
  for (int pass = 0; pass < 7; ++pass) {
    mul_jacobi(cur, next, terms, deg);
    cur.swap(next);
  }

  HeckeEigenvalues h;
  h.bound_ = N;
  h.tau_.assign(N + 1, 0);
  for (uint64_t n = 1; n <= N; ++n) h.tau_[n] = cur[n - 1];
  h.normalize();
  return h;
}

HeckeEigenvalues HeckeEigenvalues::build_hecke_recursion(uint64_t N,
                                                         const HeckeEigenvalues& primes_source,
                                                         const FactorTable& table) {
  if (N < 1) throw DomainError("build_hecke_recursion: N must be positive");
  if (N > primes_source.bound()) throw DomainError("build_hecke_recursion: source table too small");
  if (N > table.bound()) throw DomainError("build_hecke_recursion: factor table too small");

  HeckeEigenvalues h;
  h.bound_ = N;
  h.tau_.assign(N + 1, 0);
  h.tau_[1] = 1;

  // Prime powers first.
  for (uint32_t p : table.primes()) {
    if (p > N) break;
    int128 tp = primes_source.tau_[p];
    h.tau_[p] = tp;
    uint64_t p64 = p;
    if (p64 * p64 > N) continue;
    int128 p11 = 1;
    for (int i = 0; i < 11; ++i) p11 = checked_mul(p11, static_cast<int128>(p));
    int128 prev = 1;   // tau(p^0)
    int128 curp = tp;  // tau(p^1)
    for (uint64_t pe = p64 * p64;; pe *= p64) {
      int128 nextp = checked_add(checked_mul(tp, curp), -checked_mul(p11, prev));
      h.tau_[pe] = nextp;
      prev = curp;
      curp = nextp;
      if (pe > N / p64) break;
    }
  }

  // Multiplicative fill: n = p^e * m with p = spf(n), (m, p) = 1.
  for (uint64_t n = 2; n <= N; ++n) {
    if (table.is_prime(n)) continue;
    uint32_t p = table.spf(n);
    uint64_t pe = 1;
    uint64_t m = n;
    while (m % p == 0) {
      m /= p;
      pe *= p;
    }
    if (m == 1) continue;  // pure prime power, already set
    h.tau_[n] = checked_mul(h.tau_[pe], h.tau_[m]);
  }

  h.normalize();
  return h;
}

void HeckeEigenvalues::normalize() {
  // Plain floating path: n^{11/2} = exp(5.5 log n). Relative error is a few
  // ulps (< 1e-12), which is the documented budget for the lambda table.
  lambda_.assign(bound_ + 1, 0.0);
  for (uint64_t n = 1; n <= bound_; ++n) {
    double norm = std::exp(5.5 * std::log(static_cast<double>(n)));
    lambda_[n] = static_cast<double>(tau_[n]) / norm;
  }
}

int128 HeckeEigenvalues::tau_ramanujan(uint64_t n) const {
  if (n < 1 || n > bound_) throw DomainError("tau_ramanujan: n out of range");
  return tau_[n];
}

double HeckeEigenvalues::lambda(uint64_t n) const {
  if (n < 1 || n > bound_) throw DomainError("lambda: n out of range");
  return lambda_[n];
}

double HeckeEigenvalues::lambda_power(uint64_t n, unsigned l) const {
  if (n < 1 || n > bound_) throw DomainError("lambda_power: n out of range");
  double v = 1.0;
  double b = lambda_[n];
  for (unsigned i = 0; i < l; ++i) v *= b;
  return v;
}

void HeckeEigenvalues::export_text(std::ostream& os) const {
  for (uint64_t n = 1; n <= bound_; ++n) os << n << ' ' << to_string(tau_[n]) << '\n';
}

HeckeEigenvalues HeckeEigenvalues::import_text(std::istream& is) {
  std::vector<int128> vals;
  vals.push_back(0);  // slot 0
  std::string line;
  uint64_t expect = 1;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    uint64_t n;
    std::string v;
    if (!(ls >> n >> v)) throw std::runtime_error("HeckeEigenvalues::import_text: bad line '" + line + "'");
    if (n != expect)
      throw std::runtime_error("HeckeEigenvalues::import_text: expected n=" + std::to_string(expect));
    vals.push_back(parse_int128(v));
    ++expect;
  }
  if (vals.size() < 2) throw std::runtime_error("HeckeEigenvalues::import_text: empty input");
  HeckeEigenvalues h;
  h.bound_ = vals.size() - 1;
  h.tau_ = std::move(vals);
  h.normalize();
  return h;
}

SymPowerMultiplicities sym_power_multiplicities(unsigned l) {
  if (l < 2) throw DomainError("sym_power_multiplicities: l must be at least 2");
  if (l > 33) throw CapacityError("sym_power_multiplicities: factorials exceed 128 bits beyond l=33");
  unsigned j = l / 2;

  auto factorial = [](unsigned n) {
    int128 v = 1;
    for (unsigned i = 2; i <= n; ++i) v = checked_mul(v, static_cast<int128>(i));
    return v;
  };
  auto exact_div = [](int128 num, int128 den) {
    if (den == 0 || num % den != 0)
      throw std::logic_error("sym_power_multiplicities: non-integral multiplicity");
    return num / den;
  };
  auto to64 = [](int128 v) {
    if (v > static_cast<int128>(INT64_MAX)) throw CapacityError("sym_power_multiplicities: value exceeds 64 bits");
    return static_cast<int64_t>(v);
  };

  SymPowerMultiplicities out;
  out.l = l;
  out.j = j;
  out.even = (l % 2 == 0);
  if (out.even) {
    out.leading = to64(exact_div(factorial(2 * j), checked_mul(factorial(j), factorial(j + 1))));
    for (unsigned r = 1; r + 1 <= j; ++r) {
      int128 num = checked_mul(factorial(2 * j), static_cast<int128>(2 * r + 1));
      int128 den = checked_mul(factorial(j - r), factorial(j + r + 1));
      out.inner.push_back(to64(exact_div(num, den)));
    }
  } else {
    int128 num = checked_mul(static_cast<int128>(2), factorial(2 * j + 1));
    out.leading = to64(exact_div(num, checked_mul(factorial(j), factorial(j + 2))));
    for (unsigned r = 1; r + 1 <= j; ++r) {
      int128 n2 = checked_mul(factorial(2 * j + 1), static_cast<int128>(2 * r + 2));
      int128 d2 = checked_mul(factorial(j - r), factorial(j + r + 2));
      out.inner.push_back(to64(exact_div(n2, d2)));
    }
  }
  return out;
}

}  // namespace adp
