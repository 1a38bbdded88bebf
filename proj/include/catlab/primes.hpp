#ifndef CATLAB_PRIMES_HPP
#define CATLAB_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace catlab {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// All primes in [lo, hi], ascending (sieve-backed).
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Primes p in [lo, hi] with p mod 3 == cls for cls in {1, 2}; cls == 0
// selects {3} when it lies in range (the only prime divisible by 3).
std::vector<std::uint64_t> primes_in_class(std::uint64_t lo, std::uint64_t hi,
                                           int cls);
// Same with lo = 2: all primes <= limit in the class.
std::vector<std::uint64_t> primes_in_class(std::uint64_t limit, int cls);

}  // namespace catlab

#endif  // CATLAB_PRIMES_HPP
