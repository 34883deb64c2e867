#include "adp/factor_table.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "adp/errors.hpp"

namespace adp {

FactorTable build_factor_table(uint64_t X, uint64_t memory_cap_bytes) {
  if (X < 2) throw DomainError("build_factor_table: X must be at least 2");
  if (X > 0xFFFFFFFFull) throw CapacityError("build_factor_table: 32-bit spf entries cap X at 2^32-1");
  uint64_t need = (X + 1) * sizeof(uint32_t);
  if (need > memory_cap_bytes)
    throw CapacityError("build_factor_table: spf table of " + std::to_string(need) +
                        " bytes exceeds memory cap of " + std::to_string(memory_cap_bytes));

  FactorTable t;
  t.bound_ = X;
  t.spf_.assign(X + 1, 0);
  t.primes_.reserve(static_cast<size_t>(X > 16 ? 1.2 * X / std::log(static_cast<double>(X)) : 8));

  // Linear sieve: each composite is struck exactly once, by its smallest
  // prime factor.
  for (uint64_t n = 2; n <= X; ++n) {
    if (t.spf_[n] == 0) {
      t.spf_[n] = static_cast<uint32_t>(n);
      t.primes_.push_back(static_cast<uint32_t>(n));
    }
    uint32_t spf_n = t.spf_[n];
    for (uint32_t p : t.primes_) {
      if (p > spf_n) break;
      uint64_t m = n * p;
      if (m > X) break;
      t.spf_[m] = p;
    }
  }
  return t;
}

int FactorTable::factorize(uint64_t n, PrimePower out[16]) const {
  if (n < 1 || n > bound_) throw DomainError("factorize: n out of table range");
  int k = 0;
  while (n > 1) {
    uint32_t p = spf_[n];
    uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n > 1 && spf_[n] == p);
    out[k].p = p;
    out[k].e = e;
    ++k;
  }
  return k;
}

namespace {
constexpr char kMagic[4] = {'A', 'D', 'P', 'L'};
constexpr uint8_t kVersion = 1;
}  // namespace

void FactorTable::save(std::ostream& os) const {
  os.write(kMagic, 4);
  os.put(static_cast<char>(kVersion));
  uint64_t x = bound_;
  unsigned char hdr[8];
  for (int i = 0; i < 8; ++i) hdr[i] = static_cast<unsigned char>((x >> (8 * i)) & 0xFF);
  os.write(reinterpret_cast<const char*>(hdr), 8);
  // spf entries are stored little-endian; this code assumes a little-endian
  // host, which the loader re-checks via the bound round trip.
  os.write(reinterpret_cast<const char*>(spf_.data() + 2),
           static_cast<std::streamsize>((bound_ - 1) * sizeof(uint32_t)));
  if (!os) throw std::runtime_error("FactorTable::save: write failed");
}

FactorTable FactorTable::load(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("FactorTable::load: bad magic");
  int version = is.get();
  if (version != kVersion) throw std::runtime_error("FactorTable::load: unsupported version");
  unsigned char hdr[8];
  is.read(reinterpret_cast<char*>(hdr), 8);
  if (!is) throw std::runtime_error("FactorTable::load: truncated header");
  uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<uint64_t>(hdr[i]) << (8 * i);
  if (x < 2 || x > 0xFFFFFFFFull) throw std::runtime_error("FactorTable::load: invalid bound");

  FactorTable t;
  t.bound_ = x;
  t.spf_.assign(x + 1, 0);
  is.read(reinterpret_cast<char*>(t.spf_.data() + 2),
          static_cast<std::streamsize>((x - 1) * sizeof(uint32_t)));
  if (!is) throw std::runtime_error("FactorTable::load: truncated spf data");
  for (uint64_t n = 2; n <= x; ++n) {
    uint32_t p = t.spf_[n];
    if (p < 2 || p > n || n % p != 0) throw std::runtime_error("FactorTable::load: corrupt spf entry");
    if (p == n) t.primes_.push_back(p);
  }
  return t;
}

void FactorTable::save_file(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("FactorTable::save_file: cannot open " + path);
  save(os);
}

FactorTable FactorTable::load_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("FactorTable::load_file: cannot open " + path);
  return load(is);
}

namespace detail {

void segmented_primes(uint64_t limit, void* ctx, void (*cb)(void*, uint64_t)) {
  if (limit < 2) return;
  cb(ctx, 2);
  if (limit < 3) return;

  uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  while (root * root > limit) --root;

  // Odd base primes up to sqrt(limit).
  std::vector<uint32_t> base;
  {
    std::vector<uint8_t> comp(root + 1, 0);
    for (uint64_t i = 3; i <= root; i += 2) {
      if (!comp[i]) {
        base.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i * i; j <= root; j += 2 * i) comp[j] = 1;
      }
    }
  }

  constexpr uint64_t kSegment = 1 << 20;  // odd numbers per segment
  std::vector<uint8_t> sieve(kSegment);
  std::vector<uint64_t> next(base.size());
  for (size_t i = 0; i < base.size(); ++i) next[i] = static_cast<uint64_t>(base[i]) * base[i];

  for (uint64_t low = 3; low <= limit; low += 2 * kSegment) {
    uint64_t high = std::min(limit, low + 2 * kSegment - 2);
    uint64_t count = (high - low) / 2 + 1;
    std::fill(sieve.begin(), sieve.begin() + count, 0);
    for (size_t i = 0; i < base.size(); ++i) {
      uint64_t p = base[i];
      uint64_t j = next[i];
      if (j > high) continue;
      if (j < low) {
        j = low + ((p - low % p) % p);
        if ((j & 1) == 0) j += p;
      }
      for (; j <= high; j += 2 * p) sieve[(j - low) / 2] = 1;
      next[i] = j;
    }
    for (uint64_t k = 0; k < count; ++k)
      if (!sieve[k]) cb(ctx, low + 2 * k);
  }
}

}  // namespace detail

}  // namespace adp
