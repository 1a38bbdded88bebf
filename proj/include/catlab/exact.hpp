#ifndef CATLAB_EXACT_HPP
#define CATLAB_EXACT_HPP

// Exact integer and rational combinatorial primitives: generalized binomial
// coefficients (negative and rational upper arguments included), Catalan and
// generalized Catalan numbers, Stirling numbers of the second kind, and the
// mod-3 symbol. Everything is arbitrary precision (GMP) and pure.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace catlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline long iverson(bool b) { return b ? 1 : 0; }

// The unique element of {-1, 0, 1} congruent to its source modulo 3.
struct Sign3 {
  int value = 0;
};
inline bool operator==(Sign3 a, Sign3 b) { return a.value == b.value; }
inline bool operator!=(Sign3 a, Sign3 b) { return a.value != b.value; }

Sign3 legendre3(long long a);
Sign3 legendre3(const Integer& a);

// num/den in canonical form; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

// binom(x, k): product formula x(x-1)...(x-k+1)/k! for k > 0, 1 for k = 0,
// 0 for k < 0. x may be negative.
Integer binom_int(const Integer& x, long k);
inline Integer binom_int(long x, long k) { return binom_int(Integer(x), k); }

// Same product formula with a rational upper argument.
Rational binom_rat(const Rational& x, long k);

Integer catalan(long n);

// C_0 .. C_n_max via the quotient recursion; cheaper than n_max binomials.
std::vector<Integer> catalan_upto(long n_max);

// C_{n,j} = 2 binom(2n,n-j) - binom(2n,n-1-j) - binom(2n,n+1-j), 0 <= j <= n+1.
Integer gen_catalan(long n, long j);

// C_n^{(k)} = binom(2n+k,n) - binom(2n+k,n-1) for any integers n, k.
Integer shifted_catalan(long n, long k);

// S(r,s) by the defining alternating sum (1/s!) sum_t (-1)^(s-t) binom(s,t) t^r.
Integer stirling2(long r, long s);

// Canonical serialization: decimal for integers, "num/den" with den >= 2 for
// non-integral rationals, plain "num" otherwise.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
Rational rational_from_string(const std::string& s);

}  // namespace catlab

#endif  // CATLAB_EXACT_HPP
