#include "catlab/primes.hpp"

#include <cassert>

namespace catlab {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a proven witness set for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> result;
  if (hi < 2 || hi < lo) return result;
  if (lo < 2) lo = 2;
  // Simple sieve over [lo, hi]; range sizes in this project stay small.
  std::vector<bool> composite(std::size_t(hi - lo + 1), false);
  for (std::uint64_t q = 2; q * q <= hi; ++q) {
    std::uint64_t start = q * q;
    if (start < lo) start = ((lo + q - 1) / q) * q;
    for (std::uint64_t m = start; m <= hi; m += q) {
      if (m != q) composite[std::size_t(m - lo)] = true;
    }
  }
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (!composite[std::size_t(n - lo)]) result.push_back(n);
  }
  return result;
}

std::vector<std::uint64_t> primes_in_class(std::uint64_t lo, std::uint64_t hi,
                                           int cls) {
  assert(cls >= 0 && cls <= 2);
  std::vector<std::uint64_t> result;
  for (std::uint64_t p : primes_in_range(lo, hi)) {
    if (p % 3 == static_cast<std::uint64_t>(cls)) result.push_back(p);
  }
  return result;
}

std::vector<std::uint64_t> primes_in_class(std::uint64_t limit, int cls) {
  return primes_in_class(2, limit, cls);
}

}  // namespace catlab
