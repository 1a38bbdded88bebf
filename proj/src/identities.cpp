#include "catlab/identities.hpp"

#include <cassert>

namespace catlab {

namespace {

// (-1)^e for any integer e (parity-safe for negatives).
inline long sign_pow(long e) { return (e & 1L) != 0 ? -1 : 1; }

inline long ceil_div3(long m) {
  assert(m >= 0);
  return (m + 2) / 3;
}

}  // namespace

std::pair<Integer, Integer> eval_identity_nl(long l, long m) {
  assert(l >= 0 && m >= 0);
  Integer lhs(0);
  for (long k = 0; k <= l; ++k) {
    lhs += sign_pow(m - k) * binom_int(l, k) * binom_int(m - k, l) *
           binom_int(2 * k, k - 2 * l + m);
  }
  long c = ceil_div3(m);
  Integer rhs = iverson(m % 3 == 0) * binom_int(l, c) * binom_int(2 * c, l);
  return {lhs, rhs};
}

std::pair<Integer, Integer> eval_identity_main(long l, long m, long n) {
  assert(l >= 0 && m >= 0 && n >= 0);
  Integer lhs(0);
  for (long k = 0; k <= l; ++k) {
    lhs += sign_pow(m - k) * binom_int(l, k) * binom_int(m - k, n) *
           binom_int(2 * k, k - 2 * l + m);
  }
  Integer rhs(0);
  for (long k = 0; k <= l; ++k) {
    rhs += binom_int(l, k) * binom_int(2 * k, n) *
           binom_int(n - l, m + n - 3 * k - l);
  }
  return {lhs, rhs};
}

std::pair<Integer, Integer> eval_identity_main_fast(long l, long m, long n) {
  Integer lhs(0);
  for (long k = 0; k <= l; ++k) {
    // binom(m-k, n) = 0 needs m-k >= 0 (negative uppers never vanish);
    // binom(2k, k-2l+m) = 0 outside 0 <= k-2l+m <= 2k.
    if (m - k >= 0 && n > m - k) continue;
    if (k - 2 * l + m < 0 || m - 2 * l > k) continue;
    lhs += sign_pow(m - k) * binom_int(l, k) * binom_int(m - k, n) *
           binom_int(2 * k, k - 2 * l + m);
  }
  Integer rhs(0);
  for (long k = 0; k <= l; ++k) {
    if (n > 2 * k) continue;
    if (m + n - 3 * k - l < 0 || (n - l >= 0 && m > 3 * k)) continue;
    rhs += binom_int(l, k) * binom_int(2 * k, n) *
           binom_int(n - l, m + n - 3 * k - l);
  }
  return {lhs, rhs};
}

std::pair<Integer, Integer> eval_identity_shifted(long l, long m, int j) {
  assert(l >= 0 && m >= 0 && (j == 1 || j == 2));
  Integer lhs(0);
  for (long k = 0; k <= l; ++k) {
    lhs += sign_pow(m - k) * binom_int(l, k) * binom_int(m - k, l + j) *
           binom_int(2 * k, k - 2 * l + m);
  }
  long c = ceil_div3(m);
  // Bracket factors: j=1 -> 1 - [3 | m-1], j=2 -> 1 + [3 | m+1].
  long bracket;
  if (j == 1) {
    bracket = 1 - iverson(((m - 1) % 3 + 3) % 3 == 0);
  } else {
    bracket = 1 + iverson((m + 1) % 3 == 0);
  }
  Integer rhs = bracket * binom_int(l, c) * binom_int(2 * c, l + j);
  return {lhs, rhs};
}

std::pair<Integer, Integer> eval_decomposition(long d, long k) {
  assert(d >= 0 && k >= 0);
  Integer lhs = catalan(k + d);
  Integer rhs = catalan(d) * binom_int(2 * k, k);
  for (long j = 1; j <= d + 1; ++j) {
    rhs += gen_catalan(d, j) * binom_int(2 * k, k + j);
  }
  return {lhs, rhs};
}

Forms119 eval_recurrence_1_19(long d) {
  assert(d >= 0);
  Forms119 out;
  out.catalan_value = catalan(d);
  std::vector<Integer> c = catalan_upto(d);
  for (long delta = 0; delta <= 1; ++delta) {
    Integer v(0);
    for (long k = 0; k < d; ++k) v += c[std::size_t(k)];
    v *= 1 - 2 * delta;
    Integer sym(0);
    for (long i = 0; i <= d; ++i) {
      sym += legendre3(i - delta).value * gen_catalan(d, i + 1);
    }
    v += sign_pow(delta) * sym + 1 + delta;
    (delta == 0 ? out.delta0 : out.delta1) = Rational(v);
  }
  Rational half(0);
  for (long j = 1; j <= d + 1; ++j) {
    half += Rational((1 - 3 * iverson(j % 3 == 0)) * gen_catalan(d, j));
  }
  out.half = half / 2 + make_rational(3, 2);
  return out;
}

Forms120 eval_recurrence_1_20(long d) {
  assert(d >= 0);
  Forms120 out;
  out.lhs = 0;
  std::vector<Integer> c = catalan_upto(d);
  for (long k = 0; k <= d; ++k) out.lhs += k * c[std::size_t(d - k)];
  out.form1 = 0;
  out.form2 = 0;
  for (long j = 1; j <= d + 1; ++j) {
    Integer base = 2 * binom_int(2 * d, d - j) - (d + 1) * gen_catalan(d, j);
    out.form1 += legendre3(j - 1).value * base;
    out.form2 += legendre3(j + 1).value * base;
  }
  out.form1 -= d;
  out.form2 += 2 * d + 1;
  return out;
}

Forms121 eval_recurrence_1_21(long d) {
  assert(d >= 0);
  Forms121 out;
  Rational lhs(0);
  std::vector<Integer> c = catalan_upto(d);
  for (long k = 1; k <= d; ++k) {
    lhs += (Rational(k) - make_rational(2, 3)) * Rational(c[std::size_t(d - k)]);
  }
  Rational jsum(0);
  Integer m1(0), m2(0);
  for (long j = 1; j <= d + 1; ++j) {
    Integer jc = j * gen_catalan(d, j);
    jsum += Rational(jc);
    if (j % 3 == 1) m1 += jc;
    if (j % 3 == 2) m2 += jc;
  }
  out.lhs = lhs + jsum / 3;
  out.form1 = Rational(m1) - d + make_rational(2, 3);
  out.form2 = Rational(m2) + 2 * d - make_rational(1, 3);
  return out;
}

std::pair<Integer, Integer> eval_rem13(long d, long j) {
  assert(d >= 0 && j >= 1 && j <= d + 1);
  Integer lhs = gen_catalan(d, j);
  Integer rhs =
      shifted_catalan(d - j, 2 * j) - shifted_catalan(d - (j - 1), 2 * j - 2);
  return {lhs, rhs};
}

}  // namespace catlab
