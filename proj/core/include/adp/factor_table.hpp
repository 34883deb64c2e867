#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace adp {

// Smallest-prime-factor table over [2, X]. Immutable after construction and
// safe to share across threads. Memory is one 32-bit word per index, so the
// practical cap is governed by RAM; build_factor_table rejects bounds above
// the (configurable) cap rather than thrashing.
class FactorTable {
public:
  uint64_t bound() const { return bound_; }

  // Smallest prime factor of n, 2 <= n <= bound.
  uint32_t spf(uint64_t n) const { return spf_[n]; }

  bool is_prime(uint64_t n) const { return n >= 2 && spf_[n] == n; }

  const std::vector<uint32_t>& primes() const { return primes_; }

  // Distinct primes of n in ascending order with exponents.
  // Returns the number of distinct primes written (capacity 16 suffices for
  // any 64-bit input reachable through a 32-bit spf table).
  struct PrimePower {
    uint32_t p;
    uint32_t e;
  };
  int factorize(uint64_t n, PrimePower out[16]) const;

  // Binary cache ("ADPL" magic, version byte, little-endian 64-bit bound,
  // 32-bit spf entries for 2..bound).
  void save(std::ostream& os) const;
  static FactorTable load(std::istream& is);
  void save_file(const std::string& path) const;
  static FactorTable load_file(const std::string& path);

  friend FactorTable build_factor_table(uint64_t X, uint64_t memory_cap_bytes);

private:
  uint64_t bound_ = 0;
  std::vector<uint32_t> spf_;     // indexed by n, entries 0..1 unused
  std::vector<uint32_t> primes_;  // all primes <= bound
};

// Linear (Euler) sieve: O(X) time, one 32-bit word per index. Default memory
// cap of 1.25 GiB admits X up to ~3e8; pass a larger cap explicitly for more.
FactorTable build_factor_table(uint64_t X, uint64_t memory_cap_bytes = (5ull << 28));

// Streams primes in [2, limit] in segments without a full spf table. Used for
// Euler-product constants where limit ~ 2e8 and only the primes are needed.
// visit(p) is called in ascending order.
template <typename Visit>
void for_primes_up_to(uint64_t limit, Visit&& visit);

namespace detail {
void segmented_primes(uint64_t limit, void* ctx, void (*cb)(void*, uint64_t));
}

template <typename Visit>
void for_primes_up_to(uint64_t limit, Visit&& visit) {
  struct Ctx {
    Visit* v;
  } ctx{&visit};
  detail::segmented_primes(limit, &ctx, [](void* c, uint64_t p) { (*static_cast<Ctx*>(c)->v)(p); });
}

}  // namespace adp
