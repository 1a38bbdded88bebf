#include "catlab/exact.hpp"

#include <cassert>
#include <stdexcept>

namespace catlab {

Sign3 legendre3(long long a) {
  int m = int(((a % 3) + 3) % 3);
  return Sign3{m == 2 ? -1 : m};
}

Sign3 legendre3(const Integer& a) {
  unsigned long m = mpz_fdiv_ui(a.get_mpz_t(), 3);
  return Sign3{m == 2 ? -1 : int(m)};
}

Rational make_rational(const Integer& num, const Integer& den) {
  assert(den != 0);
  Rational q;
  mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Integer binom_int(const Integer& x, long k) {
  if (k < 0) return 0;
  Integer r;
  // mpz_bin_ui follows the product convention for negative upper arguments.
  mpz_bin_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Rational binom_rat(const Rational& x, long k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  for (long j = 0; j < k; ++j) num *= x - j;
  Integer fac;
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(k));
  return num / Rational(fac);
}

Integer catalan(long n) {
  assert(n >= 0);
  return binom_int(Integer(2 * n), n) - binom_int(Integer(2 * n), n - 1);
}

std::vector<Integer> catalan_upto(long n_max) {
  assert(n_max >= 0);
  std::vector<Integer> c(std::size_t(n_max) + 1);
  c[0] = 1;
  for (long n = 0; n < n_max; ++n) {
    // C_{n+1} = C_n * 2(2n+1)/(n+2)
    Integer& next = c[std::size_t(n) + 1];
    mpz_mul_ui(next.get_mpz_t(), c[std::size_t(n)].get_mpz_t(),
               static_cast<unsigned long>(2 * (2 * n + 1)));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(),
                    static_cast<unsigned long>(n + 2));
  }
  return c;
}

Integer gen_catalan(long n, long j) {
  assert(n >= 0 && j >= 0);
  Integer two_n(2 * n);
  return 2 * binom_int(two_n, n - j) - binom_int(two_n, n - 1 - j) -
         binom_int(two_n, n + 1 - j);
}

Integer shifted_catalan(long n, long k) {
  Integer upper(2 * n + k);
  return binom_int(upper, n) - binom_int(upper, n - 1);
}

Integer stirling2(long r, long s) {
  if (r < 0 || s < 0) return 0;
  Integer sum(0);
  for (long t = 0; t <= s; ++t) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(t),
                  static_cast<unsigned long>(r));
    Integer term = binom_int(Integer(s), t) * pw;
    if ((s - t) % 2 != 0) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  Integer fac;
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(s));
  Integer q;
  mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), fac.get_mpz_t());
  return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("not a rational: " + s);
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace catlab
