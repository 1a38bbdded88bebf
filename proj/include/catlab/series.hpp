#ifndef CATLAB_SERIES_HPP
#define CATLAB_SERIES_HPP

// Truncated bivariate polynomial ring over exact integers, used to replay the
// generating-function proof of the main identity by coefficient extraction.

#include <vector>

#include "catlab/exact.hpp"

namespace catlab {

// Dense rectangular coefficient table; all arithmetic discards terms of
// s-degree > max_s or t-degree > max_t.
struct BivariatePoly {
  long max_s = 0;
  long max_t = 0;
  std::vector<Integer> coeffs;  // (max_s+1) x (max_t+1), s-major

  BivariatePoly(long ms, long mt);

  Integer& at(long i, long j) { return coeffs[std::size_t(i) * std::size_t(max_t + 1) + std::size_t(j)]; }
  const Integer& at(long i, long j) const {
    return coeffs[std::size_t(i) * std::size_t(max_t + 1) + std::size_t(j)];
  }
};

// Truncated product; operands must share truncation bounds.
BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b);

// ((s+st)^2 + s(1-s-st)^2)^l truncated to (max_s, max_t); requires max_s >= 3l
// so every coefficient consumed by the identity at this l survives truncation.
BivariatePoly kernel_pow(long l, long max_s, long max_t);

// Coefficient of s^i t^j; indices must be within bounds.
Integer coeff(const BivariatePoly& p, long i, long j);

}  // namespace catlab

#endif  // CATLAB_SERIES_HPP
