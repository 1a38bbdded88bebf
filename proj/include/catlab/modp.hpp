#ifndef CATLAB_MODP_HPP
#define CATLAB_MODP_HPP

// Prime-field arithmetic and the congruence catalog (cong1.4 - cong1.18,
// eq4.1, eq5.1/eq5.2, d0.threecase, lemma.*, wolst.*, s.p2, altsum.p2,
// fg.eval, harm.trunc; see README). Every eval_* lhs is an exact big-integer
// or big-rational computation reduced at the end (termwise for harmonic
// sums), never a mod-p shortcut, so lhs and rhs take disjoint code paths.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catlab/exact.hpp"

namespace catlab {

// Thrown when a rational is reduced modulo a prime dividing its denominator;
// signals a congruence evaluated outside its validity range.
struct DenominatorDivisible : std::runtime_error {
  explicit DenominatorDivisible(const std::string& what)
      : std::runtime_error(what) {}
};

// Least nonnegative residue tagged with its (prime) modulus; arithmetic
// requires matching moduli, inversion requires a nonzero residue.
class FpElement {
 public:
  FpElement(std::uint64_t residue, std::uint64_t modulus);
  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }
  FpElement inverse() const;

  friend FpElement operator+(const FpElement& a, const FpElement& b);
  friend FpElement operator-(const FpElement& a, const FpElement& b);
  friend FpElement operator*(const FpElement& a, const FpElement& b);
  friend bool operator==(const FpElement& a, const FpElement& b) {
    return a.residue_ == b.residue_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const FpElement& a, const FpElement& b) {
    return !(a == b);
  }

 private:
  std::uint64_t residue_;
  std::uint64_t modulus_;
};

using FpPair = std::pair<FpElement, FpElement>;

FpElement fp_from_integer(const Integer& v, std::uint64_t p);
// num * den^-1 mod p; throws DenominatorDivisible when p | den.
FpElement fp_reduce(const Rational& q, std::uint64_t p);

// binom(n, k) mod p by base-p digit decomposition (Lucas); 0 for k < 0 or
// k > n. Requires n < 2^63.
FpElement binom_mod(std::uint64_t n, long long k, std::uint64_t p);

// cong1.4 / cong1.5 / cong1.6: sum_{k<p} binom(2k,k+d) w(k) with weight
// 1, k, 1/k against the closed forms in legendre3(p-d).
enum class CentralRowPart { kSum, kWeighted, kHarmonic };
FpPair eval_central_row(std::uint64_t p, long d, CentralRowPart part);

// Batched cong1.4/5/6 for one prime: all 0 <= d <= d_hi in one pass via the
// incremental central band binom(2k+2,k+1+d) = binom(2k,k+d+1) +
// 2 binom(2k,k+d) + binom(2k,k+d-1). Must agree with eval_central_row (tested).
struct CentralRowPoint {
  std::uint64_t sum_lhs, sum_rhs;
  std::uint64_t weighted_lhs, weighted_rhs;
  std::uint64_t harmonic_lhs, harmonic_rhs;
};
std::vector<CentralRowPoint> central_row_sweep(std::uint64_t p, long d_hi);

// cong1.7: full-range sum_{k=1}^{p-1} C_{k+d}/k vs the closed form; terms
// reduced individually so p | C_{k+d} never inverts a zero.
FpPair eval_cong_1_7(std::uint64_t p, long d);

// harm.trunc constants: (A, B) with sum_{0<k<p-d} C_{k+d}/k = A + B (p|3)
// for p >= max(5, d+2).
std::pair<Rational, Rational> harmonic_constants(long d);
// harm.trunc at a concrete prime; requires p >= 5 and d <= p-2.
FpPair eval_harmonic_truncated(std::uint64_t p, long d);

// The f_i(eps) rationals of the cong1.15 right side; the inner binomial has
// the exact rational upper argument k + (i-2+eps)/3.
Rational f_eps(long i, Sign3 eps);

// cong1.15: (-1)^r sum_{k<p} binom(k+r,r) C_{k+d} vs the f_i(eps_i) form,
// eps_i = legendre3(p-i-1). Requires d, r <= p-1.
FpPair eval_cong_1_15(std::uint64_t p, long d, long r);

// cong1.16/1.17/1.18 (r = 0, 1, 2): sum_{k<p} k^r C_{k+d} vs closed form.
FpPair eval_moment_sum(std::uint64_t p, long d, int r);

// d0.threecase: the d = 0 specialization by residue class (p - r) mod 3,
// with the r = 0 bracket restored (see README); exactly f_eps(r, eps_r).
Rational d0_threecase_constant(std::uint64_t p, long r);
FpPair eval_d0_threecase(std::uint64_t p, long r);

// eq4.1: sum_{k<p} binom(k+r,r) C_k vs f_r(eps_r); r >= 1, p >= 4r + 7.
FpPair eval_eq41(std::uint64_t p, long r);

// fg.eval constants: the class-c value of sum_{k=1}^{p-1} k^r C_{k+d} mod p,
// one rational valid for every prime p = c (mod 3), p > max{d, r, 3};
// c = 1 is F(d, r), c = 2 is G(d, r).
Rational fg_constants(long d, long r, int cls);
// fg.eval at a concrete prime: direct exact summation vs the reduced
// constant. Requires p > max{d, r} and p != 3.
FpPair eval_fg(std::uint64_t p, long d, long r);

// cong1.14: C_{p+k} vs 2 C_k; requires 0 <= k <= p-2.
FpPair catalan_shift(std::uint64_t p, long k);

// wolst.p2 / wolst.p3: (binom(2p,p) mod p^2, binom(2p-1,p-1) mod p^3);
// the first is 2 for every prime, the second 1 for p > 3.
std::pair<Integer, Integer> wolstenholme_check(std::uint64_t p);

// lemma.negrow: binom(p-1,k) vs (-1)^k, 0 <= k < p.
FpPair eval_lemma_negrow(std::uint64_t p, long k);
// lemma.shift.a: binom(p+k+r, p+r) vs binom(k+r, r); lemma.shift.b the same
// with lower index r. Requires 0 <= k, r < p.
FpPair eval_lemma_shift(std::uint64_t p, long k, long r, int which);

// s.p2: S = sum_{k=0}^{p} (-1)^k binom(p,k) binom(2p+d-k,p) binom(2k,k+d)
// mod p^2 vs -3p/(2p+d) when 3 | p-d and d != 0, else 0. Requires p >= 5.
std::pair<Integer, Integer> eval_s_p2(std::uint64_t p, long d);
// altsum.p2: sum_{k<p} (-1)^k binom(p,k) binom(2k,k) mod p^2 vs 1 (p >= 5).
std::pair<Integer, Integer> eval_altsum_p2(std::uint64_t p);
// binom.p2: binom(p,k) mod p^2 vs (p/k)(-1)^{k-1}, 1 <= k <= p-1.
std::pair<Integer, Integer> eval_binom_p2(std::uint64_t p, long k);

// eq5.1 / eq5.2: the two decomposition-driven intermediates; requires d < p.
FpPair eval_eq5(std::uint64_t p, long d, int which);

}  // namespace catlab

#endif  // CATLAB_MODP_HPP
