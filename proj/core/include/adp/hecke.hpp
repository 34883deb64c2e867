#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "adp/factor_table.hpp"
#include "adp/int128.hpp"

namespace adp {

// Fourier coefficients of the weight-12 level-1 cusp form: exact integers
// tau_R(n) together with the normalized eigenvalues
// lambda(n) = tau_R(n) / n^{11/2}.
//
// The integer path is exact: every coefficient and every intermediate series
// coefficient is held in a 128-bit word, and each multiplication pass either
// proves in advance that no partial sum can leave the 128-bit range or falls
// back to overflow-checked arithmetic, so a build that completes is correct.
// |tau_R(n)| <= tau(n) n^{11/2} stays below 1.2e37 up to the documented cap
// of 2e6; intermediate eta powers are smaller still.
class HeckeEigenvalues {
public:
  static constexpr uint64_t kCap = 2'000'000;

  uint64_t bound() const { return bound_; }

  int128 tau_ramanujan(uint64_t n) const;
  double lambda(uint64_t n) const;
  double lambda_power(uint64_t n, unsigned l) const;  // lambda(n)^l

  const std::vector<double>& lambda_table() const { return lambda_; }

  // Exact q-expansion of q * prod_{n>=1} (1 - q^n)^24 up to q^N, built as the
  // 8th power of Euler's sparse series for prod (1 - q^n)^3.
  static HeckeEigenvalues build(uint64_t N);

  // Independent extension path: takes tau_R at primes from `primes_source`
  // and rebuilds everything else from the Hecke recursion
  //   tau(p^{e+1}) = tau(p) tau(p^e) - p^11 tau(p^{e-1})
  // and multiplicativity across coprime parts.
  static HeckeEigenvalues build_hecke_recursion(uint64_t N, const HeckeEigenvalues& primes_source,
                                                const FactorTable& table);

  // Plain-text exchange format, one "n value" pair per line.
  void export_text(std::ostream& os) const;
  static HeckeEigenvalues import_text(std::istream& is);

private:
  void normalize();

  uint64_t bound_ = 0;
  std::vector<int128> tau_;    // index n, tau_[0] unused
  std::vector<double> lambda_;
};

// Multiplicities in the decomposition of lambda(p)^l into symmetric-power
// coefficients: for even l = 2j the zeta exponent A_j and the sym^{2r}
// exponents C_j(r); for odd l = 2j+1 the first-power exponent B_j and the
// sym^{2r+1} exponents D_j(r), 1 <= r <= j-1.
struct SymPowerMultiplicities {
  unsigned l = 0;
  unsigned j = 0;
  bool even = false;
  int64_t leading = 0;          // A_j (even) or B_j (odd)
  std::vector<int64_t> inner;   // C_j(r) or D_j(r) for r = 1..j-1
};

SymPowerMultiplicities sym_power_multiplicities(unsigned l);  // requires l >= 2

}  // namespace adp
