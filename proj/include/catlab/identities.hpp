#ifndef CATLAB_IDENTITIES_HPP
#define CATLAB_IDENTITIES_HPP

// Exact evaluation of both sides of every integer identity in the catalog
// (eq1.0 - eq1.3, eq1.13, eq1.19 - eq1.21; see README for the catalog).
// Evaluators are literal transcriptions: every summand in the stated index
// range is computed, vanishing binomials included.

#include <utility>

#include "catlab/exact.hpp"

namespace catlab {

// eq1.0: sum_{k=0}^{l} (-1)^(m-k) binom(l,k) binom(m-k,l) binom(2k,k-2l+m)
//        vs [3|m] binom(l, ceil(m/3)) binom(2 ceil(m/3), l).
std::pair<Integer, Integer> eval_identity_nl(long l, long m);

// eq1.1: lhs as above with binom(m-k,n); rhs sum_{k} binom(l,k) binom(2k,n)
//        binom(n-l, m+n-3k-l).
std::pair<Integer, Integer> eval_identity_main(long l, long m, long n);

// eq1.2 (j=1) and eq1.3 (j=2): lower index l+j on the left, bracket factors
// (1 - [3|m-1]) resp. (1 + [3|m+1]) on the right.
std::pair<Integer, Integer> eval_identity_shifted(long l, long m, int j);

// eq1.13: C_{k+d} vs C_d binom(2k,k) + sum_j C_{d,j} binom(2k,k+j).
std::pair<Integer, Integer> eval_decomposition(long d, long k);

// eq1.19: C_d against the delta = 0 form, the delta = 1 form, and the
// half-sum form; the first three are integral, the last provably so.
struct Forms119 {
  Integer catalan_value;
  Rational delta0;
  Rational delta1;
  Rational half;
};
Forms119 eval_recurrence_1_19(long d);

// eq1.20: sum_k k C_{d-k} against its two symbol-weighted closed forms.
struct Forms120 {
  Integer lhs;
  Integer form1;
  Integer form2;
};
Forms120 eval_recurrence_1_20(long d);

// eq1.21: the (k - 2/3)-weighted sum plus (1/3) sum_j j C_{d,j} against the
// two restricted-residue forms.
struct Forms121 {
  Rational lhs;
  Rational form1;
  Rational form2;
};
Forms121 eval_recurrence_1_21(long d);

// rem1.3: C_{d,j} vs the shifted-Catalan difference C_{d-j}^{(2j)} -
// C_{d-(j-1)}^{(2j-2)}, for 1 <= j <= d+1.
std::pair<Integer, Integer> eval_rem13(long d, long j);

// Zero-term-skipping evaluation of the eq1.1 sides; must agree with the
// literal transcription (tested) and is what the big sweeps call.
std::pair<Integer, Integer> eval_identity_main_fast(long l, long m, long n);

}  // namespace catlab

#endif  // CATLAB_IDENTITIES_HPP
