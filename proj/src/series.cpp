#include "catlab/series.hpp"

#include <stdexcept>

namespace catlab {

BivariatePoly::BivariatePoly(long ms, long mt) : max_s(ms), max_t(mt) {
  if (ms < 0 || mt < 0) throw std::invalid_argument("negative bound");
  coeffs.resize(std::size_t(ms + 1) * std::size_t(mt + 1));
}

BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.max_s != b.max_s || a.max_t != b.max_t) {
    throw std::invalid_argument("poly_mul: mismatched truncation bounds");
  }
  BivariatePoly out(a.max_s, a.max_t);
  for (long i1 = 0; i1 <= a.max_s; ++i1) {
    for (long j1 = 0; j1 <= a.max_t; ++j1) {
      const Integer& c1 = a.at(i1, j1);
      if (c1 == 0) continue;
      for (long i2 = 0; i2 + i1 <= a.max_s; ++i2) {
        for (long j2 = 0; j2 + j1 <= a.max_t; ++j2) {
          const Integer& c2 = b.at(i2, j2);
          if (c2 == 0) continue;
          Integer& dst = out.at(i1 + i2, j1 + j2);
          mpz_addmul(dst.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
        }
      }
    }
  }
  return out;
}

BivariatePoly kernel_pow(long l, long max_s, long max_t) {
  if (l < 0) throw std::invalid_argument("kernel_pow: negative exponent");
  if (max_s < 3 * l) {
    throw std::invalid_argument("kernel_pow: max_s below 3l");
  }
  BivariatePoly result(max_s, max_t);
  result.at(0, 0) = 1;
  if (l == 0) return result;

  // (s+st)^2 + s(1-s-st)^2 expanded: s - s^2 + s^2 t^2 + s^3 + 2 s^3 t + s^3 t^2.
  BivariatePoly kernel(max_s, max_t);
  auto put = [&](long i, long j, long c) {
    if (i <= max_s && j <= max_t) kernel.at(i, j) = c;
  };
  put(1, 0, 1);
  put(2, 0, -1);
  put(2, 2, 1);
  put(3, 0, 1);
  put(3, 1, 2);
  put(3, 2, 1);

  for (long e = 0; e < l; ++e) result = poly_mul(result, kernel);
  return result;
}

Integer coeff(const BivariatePoly& p, long i, long j) {
  if (i < 0 || j < 0 || i > p.max_s || j > p.max_t) {
    throw std::out_of_range("coeff: index outside truncation bounds");
  }
  return p.at(i, j);
}

}  // namespace catlab
