#include "catlab/modp.hpp"

#include <cassert>
#include <map>

namespace catlab {

namespace {

inline long sign_pow(long e) { return (e & 1L) != 0 ? -1 : 1; }

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

// Inverse modulo a prime.
std::uint64_t invmod_prime(std::uint64_t a, std::uint64_t p) {
  assert(a % p != 0);
  return powmod(a, p - 2, p);
}

// Inverse modulo an arbitrary modulus (used mod p^2), by extended Euclid.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(m);
  long long newr = static_cast<long long>(a % m);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  assert(r == 1);
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const Integer& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
}

// 1/k mod p for k = 1..p-1, by the standard recurrence.
std::vector<std::uint64_t> inverse_table(std::uint64_t p) {
  std::vector<std::uint64_t> inv(std::size_t(p), 0);
  if (p >= 2) inv[1] = 1;
  for (std::uint64_t k = 2; k < p; ++k) {
    inv[std::size_t(k)] = mulmod(p - p / k, inv[std::size_t(p % k)], p);
  }
  return inv;
}

// binom(n, k) mod p for n, k < p: Pascal-table lookup for small p, direct
// exact binomial for large p (rare path).
std::uint64_t small_binom_mod(std::uint64_t n, std::uint64_t k,
                              std::uint64_t p) {
  if (k > n) return 0;
  if (p <= 512) {
    thread_local std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
    std::vector<std::uint64_t>& tri = cache[p];
    if (tri.empty()) {
      tri.resize(std::size_t(p) * (p + 1) / 2);
      for (std::uint64_t i = 0; i < p; ++i) {
        std::uint64_t* row = tri.data() + std::size_t(i) * (i + 1) / 2;
        row[0] = 1 % p;
        for (std::uint64_t j = 1; j < i; ++j) {
          const std::uint64_t* prev =
              tri.data() + std::size_t(i - 1) * i / 2;
          row[j] = (prev[j - 1] + prev[j]) % p;
        }
        if (i > 0) row[i] = 1 % p;
      }
    }
    return tri[std::size_t(n) * (n + 1) / 2 + k];
  }
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return reduce_mpz(b, p);
}

Rational rat(const Integer& v) { return Rational(v); }

}  // namespace

FpElement::FpElement(std::uint64_t residue, std::uint64_t modulus)
    : residue_(residue), modulus_(modulus) {
  if (modulus < 2 || residue >= modulus) {
    throw std::invalid_argument("FpElement: residue outside [0, p)");
  }
}

FpElement FpElement::inverse() const {
  if (residue_ == 0) throw std::domain_error("FpElement: inverting zero");
  return FpElement(invmod_prime(residue_, modulus_), modulus_);
}

namespace {
void require_matching(const FpElement& a, const FpElement& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("FpElement: mismatched moduli");
  }
}
}  // namespace

FpElement operator+(const FpElement& a, const FpElement& b) {
  require_matching(a, b);
  std::uint64_t s = a.residue() + b.residue();
  if (s >= a.modulus()) s -= a.modulus();
  return FpElement(s, a.modulus());
}

FpElement operator-(const FpElement& a, const FpElement& b) {
  require_matching(a, b);
  std::uint64_t s = a.residue() + a.modulus() - b.residue();
  if (s >= a.modulus()) s -= a.modulus();
  return FpElement(s, a.modulus());
}

FpElement operator*(const FpElement& a, const FpElement& b) {
  require_matching(a, b);
  return FpElement(mulmod(a.residue(), b.residue(), a.modulus()), a.modulus());
}

FpElement fp_from_integer(const Integer& v, std::uint64_t p) {
  return FpElement(reduce_mpz(v, p), p);
}

FpElement fp_reduce(const Rational& q, std::uint64_t p) {
  std::uint64_t den = reduce_mpz(Integer(q.get_den()), p);
  if (den == 0) {
    throw DenominatorDivisible("fp_reduce: " + to_string(q) + " mod " +
                               std::to_string(p));
  }
  std::uint64_t num = reduce_mpz(Integer(q.get_num()), p);
  return FpElement(mulmod(num, invmod_prime(den, p), p), p);
}

FpElement binom_mod(std::uint64_t n, long long k, std::uint64_t p) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return FpElement(0, p);
  std::uint64_t kk = static_cast<std::uint64_t>(k);
  std::uint64_t result = 1 % p;
  while (n > 0 || kk > 0) {
    std::uint64_t nd = n % p, kd = kk % p;
    if (kd > nd) return FpElement(0, p);
    result = mulmod(result, small_binom_mod(nd, kd, p), p);
    n /= p;
    kk /= p;
  }
  return FpElement(result, p);
}

namespace {

// Closed forms of the three central-binomial row congruences (cong1.4/5/6).
Rational central_row_rhs(std::uint64_t p, long d, CentralRowPart part) {
  int e = legendre3(static_cast<long long>(p) - d).value;
  long div3 = iverson((static_cast<long long>(p) - d) % 3 == 0);
  switch (part) {
    case CentralRowPart::kSum:
      return Rational(e);
    case CentralRowPart::kWeighted:
      return make_rational(3 * div3 - 1, 3) * Rational(2 * e - d) -
             iverson(p == 3);
    case CentralRowPart::kHarmonic:
      if (d == 0) return Rational(-iverson(p == 3));
      return make_rational(-1 + 2 * sign_pow(d) + 3 * div3, d);
  }
  return Rational(0);
}

}  // namespace

FpPair eval_central_row(std::uint64_t p, long d, CentralRowPart part) {
  assert(d >= 0 && static_cast<std::uint64_t>(d) <= p);
  if (part == CentralRowPart::kHarmonic) {
    FpElement lhs(0, p);
    for (std::uint64_t k = 1; k < p; ++k) {
      Rational term = make_rational(
          binom_int(Integer(2 * k), static_cast<long>(k) + d), Integer(k));
      lhs = lhs + fp_reduce(term, p);
    }
    return {lhs, fp_reduce(central_row_rhs(p, d, part), p)};
  }
  Integer sum(0);
  for (std::uint64_t k = 0; k < p; ++k) {
    Integer b = binom_int(Integer(2 * k), static_cast<long>(k) + d);
    if (part == CentralRowPart::kWeighted) b *= static_cast<long>(k);
    sum += b;
  }
  return {fp_from_integer(sum, p), fp_reduce(central_row_rhs(p, d, part), p)};
}

std::vector<CentralRowPoint> central_row_sweep(std::uint64_t p, long d_hi) {
  assert(d_hi >= 0);
  std::vector<std::uint64_t> inv = inverse_table(p);
  std::vector<std::uint64_t> sum(std::size_t(d_hi) + 1, 0);
  std::vector<std::uint64_t> wsum(std::size_t(d_hi) + 1, 0);
  std::vector<std::uint64_t> hsum(std::size_t(d_hi) + 1, 0);
  Integer central(1);  // binom(2k, k), advanced by *2(2k+1)/(k+1)
  for (std::uint64_t k = 0; k < p; ++k) {
    long kk = static_cast<long>(k);
    // Walk binom(2k, k+d) rightward: *(k-d) / (k+d+1); zero beyond d = k.
    Integer b = central;
    long top = std::min<long>(d_hi, kk);
    for (long d = 0; d <= top; ++d) {
      std::uint64_t v = reduce_mpz(b, p);
      sum[std::size_t(d)] = (sum[std::size_t(d)] + v) % p;
      wsum[std::size_t(d)] = (wsum[std::size_t(d)] + mulmod(k % p, v, p)) % p;
      if (k >= 1) {
        hsum[std::size_t(d)] =
            (hsum[std::size_t(d)] + mulmod(inv[std::size_t(k)], v, p)) % p;
      }
      if (d < top) {
        mpz_mul_ui(b.get_mpz_t(), b.get_mpz_t(),
                   static_cast<unsigned long>(kk - d));
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(),
                        static_cast<unsigned long>(kk + d + 1));
      }
    }
    if (k + 1 < p) {
      mpz_mul_ui(central.get_mpz_t(), central.get_mpz_t(),
                 static_cast<unsigned long>(2 * (2 * kk + 1)));
      mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(),
                      static_cast<unsigned long>(kk + 1));
    }
  }
  std::vector<CentralRowPoint> out(std::size_t(d_hi) + 1);
  for (long d = 0; d <= d_hi; ++d) {
    CentralRowPoint& pt = out[std::size_t(d)];
    pt.sum_lhs = sum[std::size_t(d)];
    pt.weighted_lhs = wsum[std::size_t(d)];
    pt.harmonic_lhs = hsum[std::size_t(d)];
    pt.sum_rhs = fp_reduce(central_row_rhs(p, d, CentralRowPart::kSum), p).residue();
    pt.weighted_rhs =
        fp_reduce(central_row_rhs(p, d, CentralRowPart::kWeighted), p).residue();
    pt.harmonic_rhs =
        fp_reduce(central_row_rhs(p, d, CentralRowPart::kHarmonic), p).residue();
  }
  return out;
}

FpPair eval_cong_1_7(std::uint64_t p, long d) {
  assert(d >= 0 && static_cast<std::uint64_t>(d) < p);
  std::vector<Integer> c = catalan_upto(static_cast<long>(p) - 1 + d);
  FpElement lhs(0, p);
  for (std::uint64_t k = 1; k < p; ++k) {
    lhs = lhs + fp_reduce(
                    make_rational(c[std::size_t(k) + std::size_t(d)], Integer(k)), p);
  }
  Rational rhs = rat(-iverson(p == 3) * catalan(d));
  for (long j = 1; j <= d + 1; ++j) {
    long bracket =
        -1 + 2 * sign_pow(j) +
        3 * iverson((static_cast<long long>(p) - j) % 3 == 0);
    rhs += make_rational(bracket * gen_catalan(d, j), Integer(j));
  }
  return {lhs, fp_reduce(rhs, p)};
}

std::pair<Rational, Rational> harmonic_constants(long d) {
  assert(d >= 0);
  std::vector<Integer> c = catalan_upto(d);
  Rational a(0);
  for (long k = 1; k <= d; ++k) {
    a += make_rational(2 * c[std::size_t(d - k)], Integer(k));
  }
  Rational b(0);
  for (long j = 1; j <= d + 1; ++j) {
    Rational per_j = make_rational(gen_catalan(d, j), Integer(j));
    a += Rational(2 * sign_pow(j) - 1) * per_j;
    if (j % 3 != 0) a += make_rational(3, 2) * per_j;
    b += Rational(legendre3(j).value) * per_j;
  }
  b *= make_rational(3, 2);
  return {a, b};
}

FpPair eval_harmonic_truncated(std::uint64_t p, long d) {
  assert(p >= 5 && d >= 0 && static_cast<std::uint64_t>(d) <= p - 2);
  std::vector<Integer> c = catalan_upto(static_cast<long>(p) - 1);
  FpElement lhs(0, p);
  for (std::uint64_t k = 1; k < p - static_cast<std::uint64_t>(d); ++k) {
    lhs = lhs + fp_reduce(
                    make_rational(c[std::size_t(k) + std::size_t(d)], Integer(k)), p);
  }
  auto [a, b] = harmonic_constants(d);
  Rational rhs = a + b * Rational(legendre3(static_cast<long long>(p)).value);
  return {lhs, fp_reduce(rhs, p)};
}

Rational f_eps(long i, Sign3 eps) {
  assert(i >= 0 && eps.value >= -1 && eps.value <= 1);
  long e = eps.value;
  Rational sum(0);
  for (long k = 0; k <= (i + 1 - e) / 3; ++k) {
    Rational upper = Rational(k) + make_rational(i - 2 + e, 3);
    sum += Rational(sign_pow(k + e)) *
           Rational(binom_int(Integer(i + 2), 3 * k + 1 + e)) *
           binom_rat(upper, i);
  }
  sum += iverson(e == 0 && (i + 1) % 3 == 0);
  if (i == 0) sum += 3 * iverson(e == -1) - 1;
  return sum;
}

FpPair eval_cong_1_15(std::uint64_t p, long d, long r) {
  assert(d >= 0 && r >= 0 && static_cast<std::uint64_t>(d) < p &&
         static_cast<std::uint64_t>(r) < p);
  std::vector<Integer> c = catalan_upto(static_cast<long>(p) - 1 + d);
  Integer total(0);
  for (std::uint64_t k = 0; k < p; ++k) {
    total += binom_int(Integer(static_cast<long>(k) + r), r) *
             c[std::size_t(k) + std::size_t(d)];
  }
  total *= sign_pow(r);
  Rational rhs(0);
  for (long k = 0; k < d; ++k) {
    rhs += rat(binom_int(Integer(d - 1 - k), r) * c[std::size_t(k)]);
  }
  for (long i = 0; i <= r; ++i) {
    Sign3 eps = legendre3(static_cast<long long>(p) - i - 1);
    rhs += Rational(sign_pow(i)) * rat(binom_int(Integer(d), r - i)) *
           f_eps(i, eps);
  }
  return {fp_from_integer(total, p), fp_reduce(rhs, p)};
}

FpPair eval_moment_sum(std::uint64_t p, long d, int r) {
  assert(d >= 0 && static_cast<std::uint64_t>(d) < p && r >= 0 && r <= 2);
  std::vector<Integer> c = catalan_upto(static_cast<long>(p) - 1 + d);
  Integer total(0);
  for (std::uint64_t k = 0; k < p; ++k) {
    Integer term = c[std::size_t(k) + std::size_t(d)];
    for (int t = 0; t < r; ++t) term *= static_cast<long>(k);
    total += term;
  }
  int e = legendre3(static_cast<long long>(p)).value;
  Rational rhs(0);
  if (r == 0) {
    rhs = make_rational(3 * e - 1, 2);
    for (long k = 0; k < d; ++k) rhs += rat(c[std::size_t(k)]);
  } else if (r == 1) {
    rhs = make_rational(d + 1, 2) * Rational(1 - e) - Rational(e * d);
    Integer s(0);
    for (long k = 0; k <= d; ++k) s += k * c[std::size_t(d - k)];
    rhs -= rat(s);
  } else {
    rhs = make_rational(9 * d * d + 6 * d - 1, 6) * Rational(e) -
          make_rational((d + 1) * (d + 1), 2) - Rational(iverson(p == 3));
    Integer s(0);
    for (long k = 1; k <= d; ++k) s += k * k * c[std::size_t(d - k)];
    rhs += rat(s);
  }
  return {fp_from_integer(total, p), fp_reduce(rhs, p)};
}

Rational d0_threecase_constant(std::uint64_t p, long r) {
  assert(r >= 0);
  long m = static_cast<long>(
      ((static_cast<long long>(p % 3) - r % 3) % 3 + 3) % 3);
  Rational v(0);
  long er;
  if (m == 0) {
    for (long k = 0; k <= (r + 2) / 3; ++k) {
      v += Rational(sign_pow(k - 1)) *
           rat(binom_int(Integer(r + 2), 3 * k)) *
           binom_rat(Rational(k) + make_rational(r - 3, 3), r);
    }
    er = -1;
  } else if (m == 1) {
    for (long k = 0; k <= (r + 1) / 3; ++k) {
      v += Rational(sign_pow(k)) *
           rat(binom_int(Integer(r + 2), 3 * k + 1)) *
           binom_rat(Rational(k) + make_rational(r - 2, 3), r);
    }
    v += iverson(p == 3);
    er = 0;
  } else {
    for (long k = 0; k <= r / 3; ++k) {
      v += Rational(sign_pow(k - 1)) *
           rat(binom_int(Integer(r + 2), 3 * k + 2)) *
           binom_rat(Rational(k) + make_rational(r - 1, 3), r);
    }
    er = 1;
  }
  // The printed three-case form drops the r = 0 bracket of f_0; restored here
  // (see README catalog note on d0.threecase).
  if (r == 0) v += 3 * iverson(er == -1) - 1;
  return v;
}

namespace {
FpElement row_sum_lhs(std::uint64_t p, long r) {
  std::vector<Integer> c = catalan_upto(static_cast<long>(p) - 1);
  Integer total(0);
  for (std::uint64_t k = 0; k < p; ++k) {
    total += binom_int(Integer(static_cast<long>(k) + r), r) * c[std::size_t(k)];
  }
  return fp_from_integer(total, p);
}
}  // namespace

FpPair eval_d0_threecase(std::uint64_t p, long r) {
  assert(r >= 0 && static_cast<std::uint64_t>(r) < p);
  return {row_sum_lhs(p, r), fp_reduce(d0_threecase_constant(p, r), p)};
}

FpPair eval_eq41(std::uint64_t p, long r) {
  assert(r >= 1 && p >= static_cast<std::uint64_t>(4 * r + 7));
  Sign3 eps = legendre3(static_cast<long long>(p) - r - 1);
  return {row_sum_lhs(p, r), fp_reduce(f_eps(r, eps), p)};
}

Rational fg_constants(long d, long r, int cls) {
  assert(d >= 0 && r >= 0 && (cls == 1 || cls == 2));
  std::vector<Sign3> eps(std::size_t(r) + 1);
  for (long i = 0; i <= r; ++i) {
    eps[std::size_t(i)] = legendre3(static_cast<long long>(cls) - i - 1);
  }
  std::vector<Integer> c = catalan_upto(d + 1);
  long dp = d + 1;
  auto big_b = [&](long s) -> Rational {
    Rational b(0);
    for (long k = 0; k < dp; ++k) {
      b += rat(binom_int(Integer(dp - 1 - k), s) * c[std::size_t(k)]);
    }
    for (long i = 0; i <= s; ++i) {
      b += Rational(sign_pow(i)) * rat(binom_int(Integer(dp), s - i)) *
           f_eps(i, eps[std::size_t(i)]);
    }
    return Rational(sign_pow(s)) * b;
  };
  Rational result(0);
  for (long s = 0; s <= r; ++s) {
    Integer fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(s));
    result += Rational(sign_pow(s)) * rat(fac * stirling2(r, s)) * big_b(s);
  }
  result *= sign_pow(r);
  if (r == 0) result -= rat(2 * c[std::size_t(d)]);
  return result;
}

FpPair eval_fg(std::uint64_t p, long d, long r) {
  assert(p != 3 && p > static_cast<std::uint64_t>(d) &&
         p > static_cast<std::uint64_t>(r));
  std::vector<Integer> c = catalan_upto(static_cast<long>(p) - 1 + d);
  Integer total(0);
  for (std::uint64_t k = 1; k < p; ++k) {
    Integer kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(r));
    total += kp * c[std::size_t(k) + std::size_t(d)];
  }
  return {fp_from_integer(total, p),
          fp_reduce(fg_constants(d, r, static_cast<int>(p % 3)), p)};
}

FpPair catalan_shift(std::uint64_t p, long k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > p - 2) {
    throw std::invalid_argument("catalan_shift: k outside 0..p-2");
  }
  return {fp_from_integer(catalan(static_cast<long>(p) + k), p),
          fp_from_integer(2 * catalan(k), p)};
}

std::pair<Integer, Integer> wolstenholme_check(std::uint64_t p) {
  assert(p >= 3);
  Integer p2 = Integer(p) * Integer(p);
  Integer p3 = p2 * Integer(p);
  Integer b1, b2;
  mpz_bin_uiui(b1.get_mpz_t(), static_cast<unsigned long>(2 * p),
               static_cast<unsigned long>(p));
  mpz_bin_uiui(b2.get_mpz_t(), static_cast<unsigned long>(2 * p - 1),
               static_cast<unsigned long>(p - 1));
  Integer r1, r2;
  mpz_fdiv_r(r1.get_mpz_t(), b1.get_mpz_t(), p2.get_mpz_t());
  mpz_fdiv_r(r2.get_mpz_t(), b2.get_mpz_t(), p3.get_mpz_t());
  return {r1, r2};
}

FpPair eval_lemma_negrow(std::uint64_t p, long k) {
  assert(k >= 0 && static_cast<std::uint64_t>(k) < p);
  return {fp_from_integer(binom_int(Integer(static_cast<long>(p) - 1), k), p),
          fp_from_integer(Integer(sign_pow(k)), p)};
}

FpPair eval_lemma_shift(std::uint64_t p, long k, long r, int which) {
  assert(k >= 0 && r >= 0 && static_cast<std::uint64_t>(k) < p &&
         static_cast<std::uint64_t>(r) < p);
  assert(which == 0 || which == 1);
  long pp = static_cast<long>(p);
  long lower = which == 0 ? pp + r : r;
  return {fp_from_integer(binom_int(Integer(pp + k + r), lower), p),
          fp_from_integer(binom_int(Integer(k + r), r), p)};
}

std::pair<Integer, Integer> eval_s_p2(std::uint64_t p, long d) {
  assert(p >= 5 && d >= 0 && static_cast<std::uint64_t>(d) < p);
  long pp = static_cast<long>(p);
  Integer s(0);
  for (long k = 0; k <= pp; ++k) {
    s += sign_pow(k) * binom_int(Integer(pp), k) *
         binom_int(Integer(2 * pp + d - k), pp) * binom_int(Integer(2 * k), k + d);
  }
  std::uint64_t p2 = p * p;
  Integer lhs;
  mpz_fdiv_r_ui(lhs.get_mpz_t(), s.get_mpz_t(),
                static_cast<unsigned long>(p2));
  Integer expected(0);
  if ((pp - d) % 3 == 0 && d != 0) {
    // -3p / (2p+d) mod p^2; the denominator is prime to p since 0 < d < p.
    std::uint64_t num = (3 * p) % p2;
    std::uint64_t den = (2 * p + static_cast<std::uint64_t>(d)) % p2;
    std::uint64_t val = mulmod(num, invmod(den, p2), p2);
    expected = Integer((p2 - val) % p2);
  }
  return {lhs, expected};
}

std::pair<Integer, Integer> eval_altsum_p2(std::uint64_t p) {
  assert(p >= 5);
  long pp = static_cast<long>(p);
  Integer t(0);
  for (long k = 0; k < pp; ++k) {
    t += sign_pow(k) * binom_int(Integer(pp), k) * binom_int(Integer(2 * k), k);
  }
  Integer lhs;
  mpz_fdiv_r_ui(lhs.get_mpz_t(), t.get_mpz_t(),
                static_cast<unsigned long>(p * p));
  return {lhs, Integer(1)};
}

std::pair<Integer, Integer> eval_binom_p2(std::uint64_t p, long k) {
  assert(k >= 1 && static_cast<std::uint64_t>(k) < p);
  std::uint64_t p2 = p * p;
  Integer lhs;
  Integer b = binom_int(Integer(static_cast<long>(p)), k);
  mpz_fdiv_r_ui(lhs.get_mpz_t(), b.get_mpz_t(),
                static_cast<unsigned long>(p2));
  std::uint64_t v = mulmod(p % p2, invmod(static_cast<std::uint64_t>(k), p2), p2);
  if (sign_pow(k - 1) < 0) v = (p2 - v) % p2;
  return {lhs, Integer(v)};
}

FpPair eval_eq5(std::uint64_t p, long d, int which) {
  assert(d >= 0 && static_cast<std::uint64_t>(d) < p);
  assert(which == 1 || which == 2);
  std::vector<Integer> c = catalan_upto(static_cast<long>(p) - 1 + d);
  Integer total(0);
  for (std::uint64_t k = 0; k < p; ++k) {
    Integer term = c[std::size_t(k) + std::size_t(d)];
    if (which == 2) term *= static_cast<long>(k);
    total += term;
  }
  int ep = legendre3(static_cast<long long>(p)).value;
  Rational rhs(0);
  if (which == 1) {
    Integer r = ep * catalan(d);
    for (long j = 1; j <= d + 1; ++j) {
      r += legendre3(static_cast<long long>(p) - j).value * gen_catalan(d, j);
    }
    rhs = rat(r);
  } else {
    rhs = Rational(-ep) * make_rational(2, 3) * rat(catalan(d));
    for (long j = 1; j <= d + 1; ++j) {
      long long pj = static_cast<long long>(p) - j;
      long div3 = iverson(pj % 3 == 0);
      rhs += rat(gen_catalan(d, j)) * make_rational(3 * div3 - 1, 3) *
             Rational(2 * legendre3(pj).value - j);
    }
  }
  return {fp_from_integer(total, p), fp_reduce(rhs, p)};
}

}  // namespace catlab
