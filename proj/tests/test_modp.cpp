#include "catlab/modp.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "catlab/primes.hpp"
#include "doctest.h"

using namespace catlab;

TEST_CASE("FpElement construction and arithmetic") {
  FpElement a(3, 7), b(5, 7);
  CHECK((a + b).residue() == 1);
  CHECK((a - b).residue() == 5);
  CHECK((a * b).residue() == 1);
  CHECK(a.inverse() == FpElement(5, 7));
  CHECK(a == FpElement(3, 7));
  CHECK(a != b);
  CHECK_THROWS_AS(FpElement(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(FpElement(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(FpElement(1, 5) + FpElement(1, 7), std::invalid_argument);
  CHECK_THROWS_AS(FpElement(0, 5).inverse(), std::domain_error);
  for (std::uint64_t x = 1; x < 13; ++x) {
    CHECK((FpElement(x, 13) * FpElement(x, 13).inverse()).residue() == 1);
  }
}

TEST_CASE("fp_from_integer and fp_reduce pins") {
  CHECK(fp_from_integer(Integer(-1), 5).residue() == 4);
  CHECK(fp_from_integer(Integer(12), 5).residue() == 2);
  CHECK(fp_reduce(make_rational(-2, 3), 5).residue() == 1);
  CHECK(fp_reduce(make_rational(-1, 3), 5).residue() == 3);
  CHECK(fp_reduce(Rational(7), 5).residue() == 2);
  CHECK_THROWS_AS(fp_reduce(make_rational(1, 5), 5), DenominatorDivisible);
  CHECK_THROWS_AS(fp_reduce(make_rational(3, 10), 5), DenominatorDivisible);
  // canonicalization first: 5/5 reduces to 1 before the divisibility test
  CHECK(fp_reduce(make_rational(5, 5), 5).residue() == 1);
}

TEST_CASE("binom_mod pins and Lucas agreement with exact binomials") {
  CHECK(binom_mod(10, 5, 5).residue() == 2);
  CHECK(binom_mod(10, -1, 5).residue() == 0);
  CHECK(binom_mod(10, 11, 5).residue() == 0);
  CHECK(binom_mod(0, 0, 2).residue() == 1);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 97ULL}) {
    for (long n = 0; n <= 120; ++n) {
      for (long k = -1; k <= n + 1; ++k) {
        CHECK(binom_mod(std::uint64_t(n), k, p) ==
              fp_from_integer(binom_int(Integer(n), k), p));
      }
    }
  }
}

TEST_CASE("cong1.4/1.5/1.6 point pins") {
  FpPair s = eval_central_row(5, 1, CentralRowPart::kSum);
  CHECK(s.first.residue() == 1);
  CHECK(s.second.residue() == 1);
  FpPair w = eval_central_row(7, 0, CentralRowPart::kWeighted);
  CHECK(w.first.residue() == 4);
  CHECK(w.second.residue() == 4);
  FpPair h = eval_central_row(5, 1, CentralRowPart::kHarmonic);
  CHECK(h.first.residue() == 2);
  CHECK(h.second.residue() == 2);
}

TEST_CASE("cong1.4/1.5/1.6 hold for p <= 61 and all d <= p") {
  for (std::uint64_t p : primes_in_range(2, 61)) {
    for (long d = 0; d <= long(p); ++d) {
      for (CentralRowPart part :
           {CentralRowPart::kSum, CentralRowPart::kWeighted, CentralRowPart::kHarmonic}) {
        FpPair pr = eval_central_row(p, d, part);
        CHECK(pr.first == pr.second);
      }
    }
  }
}

TEST_CASE("central_row_sweep agrees with the pointwise evaluator") {
  for (std::uint64_t p : primes_in_range(2, 60)) {
    long d_hi = long(p);
    std::vector<CentralRowPoint> pts = central_row_sweep(p, d_hi);
    REQUIRE(pts.size() == std::size_t(d_hi) + 1);
    for (long d = 0; d <= d_hi; ++d) {
      const CentralRowPoint& pt = pts[std::size_t(d)];
      FpPair s = eval_central_row(p, d, CentralRowPart::kSum);
      FpPair w = eval_central_row(p, d, CentralRowPart::kWeighted);
      FpPair h = eval_central_row(p, d, CentralRowPart::kHarmonic);
      CHECK(pt.sum_lhs == s.first.residue());
      CHECK(pt.sum_rhs == s.second.residue());
      CHECK(pt.weighted_lhs == w.first.residue());
      CHECK(pt.weighted_rhs == w.second.residue());
      CHECK(pt.harmonic_lhs == h.first.residue());
      CHECK(pt.harmonic_rhs == h.second.residue());
    }
  }
}

TEST_CASE("cong1.7 pins and sweep") {
  FpPair p50 = eval_cong_1_7(5, 0);
  CHECK(p50.first.residue() == 3);
  CHECK(p50.second.residue() == 3);
  CHECK(eval_cong_1_7(7, 0).first == eval_cong_1_7(7, 0).second);
  CHECK(eval_cong_1_7(5, 1).first == eval_cong_1_7(5, 1).second);
  for (std::uint64_t p : primes_in_range(2, 53)) {
    for (long d = 0; d < long(p); ++d) {
      FpPair pr = eval_cong_1_7(p, d);
      CHECK(pr.first == pr.second);
    }
  }
}

TEST_CASE("harmonic_constants pins") {
  auto c0 = harmonic_constants(0);
  CHECK(c0.first == make_rational(3, 2));
  CHECK(c0.second == make_rational(-3, 2));
  auto c3 = harmonic_constants(3);
  CHECK(c3.first == make_rational(-47, 24));
  CHECK(c3.second == make_rational(207, 24));
  auto c4 = harmonic_constants(4);
  CHECK(c4.first == make_rational(-497, 60));
  CHECK(c4.second == make_rational(1503, 60));
  // class values A+B and A-B
  CHECK(c4.first + c4.second == make_rational(503, 30));
  CHECK(c4.first - c4.second == make_rational(-100, 3));
  auto c5 = harmonic_constants(5);
  CHECK(c5.first == make_rational(-443, 15));
  CHECK(c5.second == make_rational(759, 10));
  auto c6 = harmonic_constants(6);
  CHECK(c6.first == make_rational(-7139, 70));
  CHECK(c6.second == make_rational(16743, 70));
}

TEST_CASE("harm.trunc holds for 5 <= p <= 61, d <= min(10, p-2)") {
  for (std::uint64_t p : primes_in_range(5, 61)) {
    for (long d = 0; d <= std::min(10L, long(p) - 2); ++d) {
      FpPair pr = eval_harmonic_truncated(p, d);
      CHECK(pr.first == pr.second);
    }
  }
  FpPair edge = eval_harmonic_truncated(5, 3);  // p - d = 2: one term
  CHECK(edge.first == edge.second);
}

TEST_CASE("f_eps pins") {
  CHECK(f_eps(0, Sign3{0}) == 1);
  CHECK(f_eps(0, Sign3{1}) == -2);
  CHECK(f_eps(1, Sign3{-1}) == 1);
  CHECK(f_eps(1, Sign3{0}) == -1);
  CHECK(f_eps(2, Sign3{1}) == make_rational(2, 3));
  CHECK(f_eps(2, Sign3{-1}) == make_rational(-2, 3));
  CHECK(f_eps(3, Sign3{0}) == make_rational(5, 9));
  CHECK(f_eps(4, Sign3{1}) == 0);
  CHECK(f_eps(5, Sign3{-1}) == make_rational(-35, 81));
}

TEST_CASE("cong1.15 pins and sweep") {
  const std::vector<std::tuple<std::uint64_t, long, long>> pins = {
      {5, 0, 0}, {7, 1, 1}, {11, 3, 2}};
  for (const auto& [p, d, r] : pins) {
    FpPair pr = eval_cong_1_15(p, d, r);
    CHECK(pr.first == pr.second);
  }
  for (std::uint64_t p : primes_in_range(2, 37)) {
    for (long d = 0; d <= std::min(6L, long(p) - 1); ++d) {
      for (long r = 0; r <= std::min(6L, long(p) - 1); ++r) {
        FpPair pr = eval_cong_1_15(p, d, r);
        CHECK(pr.first == pr.second);
      }
    }
  }
}

TEST_CASE("cong1.16/1.17/1.18 pins and sweep") {
  for (int r = 0; r <= 2; ++r) {
    FpPair pr = eval_moment_sum(5, 0, r);
    CHECK(pr.first == pr.second);
  }
  CHECK(eval_moment_sum(5, 0, 0).first.residue() == 3);
  CHECK(eval_moment_sum(5, 0, 1).first.residue() == 1);
  CHECK(eval_moment_sum(5, 0, 2).first.residue() == 3);
  for (std::uint64_t p : primes_in_range(2, 61)) {
    for (long d = 0; d < long(p); ++d) {
      for (int r = 0; r <= 2; ++r) {
        FpPair pr = eval_moment_sum(p, d, r);
        CHECK(pr.first == pr.second);
      }
    }
  }
}

TEST_CASE("d0.threecase constants and sweep") {
  CHECK(d0_threecase_constant(7, 0) == 1);
  CHECK(d0_threecase_constant(13, 4) == make_rational(13, 27));
  CHECK(d0_threecase_constant(11, 5) == make_rational(-35, 81));
  for (std::uint64_t p : primes_in_range(2, 47)) {
    for (long r = 0; r <= std::min(8L, long(p) - 1); ++r) {
      FpPair pr = eval_d0_threecase(p, r);
      CHECK(pr.first == pr.second);
    }
  }
}

TEST_CASE("the d0 constant is the matching f_eps value") {
  for (std::uint64_t p : primes_in_range(5, 43)) {
    for (long r = 0; r <= std::min(7L, long(p) - 1); ++r) {
      Rational direct = d0_threecase_constant(p, r);
      Rational via_f = f_eps(r, legendre3(static_cast<long long>(p) - r - 1));
      CHECK(direct == via_f);
    }
  }
}

TEST_CASE("eq4.1 pin and sweep") {
  FpPair pin = eval_eq41(17, 2);
  CHECK(pin.first.residue() == 5);
  CHECK(pin.second.residue() == 5);
  for (std::uint64_t p : primes_in_range(11, 79)) {
    for (long r = 1; 4 * r + 7 <= long(p); ++r) {
      FpPair pr = eval_eq41(p, r);
      CHECK(pr.first == pr.second);
    }
  }
}

TEST_CASE("fg_constants pins") {
  CHECK(fg_constants(0, 0, 1) == 0);
  CHECK(fg_constants(0, 0, 2) == -3);
  CHECK(fg_constants(0, 2, 1) == make_rational(-2, 3));
  CHECK(fg_constants(0, 2, 2) == make_rational(-1, 3));
  CHECK(fg_constants(1, 1, 1) == -2);
  CHECK(fg_constants(1, 1, 2) == 2);
  CHECK(fg_constants(3, 2, 1) == make_rational(70, 3));
  CHECK(fg_constants(3, 2, 2) == make_rational(-28, 3));
  CHECK(fg_constants(8, 8, 1) == make_rational(Integer("3048911767"),
                                               Integer(81)));
}

TEST_CASE("fg.eval pins and sweep") {
  FpPair a = eval_fg(5, 0, 2);
  CHECK(a.first.residue() == 3);
  CHECK(a.second.residue() == 3);
  FpPair b = eval_fg(7, 0, 2);
  CHECK(b.first.residue() == 4);
  CHECK(b.second.residue() == 4);
  const std::vector<std::tuple<std::uint64_t, long, long>> pins = {
      {13, 4, 0}, {11, 4, 0}, {11, 2, 1}};
  for (const auto& [p, d, r] : pins) {
    FpPair pr = eval_fg(p, d, r);
    CHECK(pr.first == pr.second);
  }
  for (std::uint64_t p : primes_in_range(5, 101)) {
    if (p == 3) continue;
    for (long d = 0; d <= std::min(4L, long(p) - 1); ++d) {
      for (long r = 0; r <= std::min(4L, long(p) - 1); ++r) {
        if (long(p) <= std::max(d, r)) continue;
        FpPair pr = eval_fg(p, d, r);
        CHECK(pr.first == pr.second);
      }
    }
  }
  // smallest admissible prime right above max{d, r, 3}
  CHECK(eval_fg(5, 4, 0).first == eval_fg(5, 4, 0).second);
  CHECK(eval_fg(5, 0, 4).first == eval_fg(5, 0, 4).second);
  CHECK(eval_fg(7, 5, 6).first == eval_fg(7, 5, 6).second);
}

TEST_CASE("cong1.14 pins and rejection") {
  FpPair a = catalan_shift(5, 1);
  CHECK(a.first.residue() == 2);
  CHECK(a.second.residue() == 2);
  FpPair b = catalan_shift(5, 0);
  CHECK(b.first.residue() == 2);
  CHECK(b.second.residue() == 2);
  CHECK_THROWS_AS(catalan_shift(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(catalan_shift(5, -1), std::invalid_argument);
  for (std::uint64_t p : primes_in_range(2, 97)) {
    for (long k = 0; k <= long(p) - 2; ++k) {
      FpPair pr = catalan_shift(p, k);
      CHECK(pr.first == pr.second);
    }
  }
}

TEST_CASE("wolst.p2 / wolst.p3 pins and sweep") {
  auto w5 = wolstenholme_check(5);
  CHECK(w5.first == 2);
  CHECK(w5.second == 1);
  auto w3 = wolstenholme_check(3);
  CHECK(w3.first == 2);   // binom(6,3) = 20 = 2 (mod 9)
  CHECK(w3.second == 10);  // binom(5,2) = 10 (mod 27): p = 3 is excluded
  auto w2 = wolstenholme_check(2);
  CHECK(w2.first == 2);
  for (std::uint64_t p : primes_in_range(5, 499)) {
    auto [c2, c3] = wolstenholme_check(p);
    CHECK(c2 == 2);
    CHECK(c3 == 1);
  }
}

TEST_CASE("lemma.negrow and lemma.shift sweeps") {
  for (std::uint64_t p : primes_in_range(2, 53)) {
    for (long k = 0; k < long(p); ++k) {
      FpPair nr = eval_lemma_negrow(p, k);
      CHECK(nr.first == nr.second);
      for (long r = 0; r < long(p); r += 3) {
        FpPair sa = eval_lemma_shift(p, k, r, 0);
        CHECK(sa.first == sa.second);
        FpPair sb = eval_lemma_shift(p, k, r, 1);
        CHECK(sb.first == sb.second);
      }
    }
  }
}

TEST_CASE("s.p2 pin and sweep") {
  auto pin = eval_s_p2(7, 1);
  CHECK(pin.first == 28);
  CHECK(pin.second == 28);
  for (std::uint64_t p : primes_in_range(5, 43)) {
    for (long d = 0; d < long(p); ++d) {
      auto [lhs, rhs] = eval_s_p2(p, d);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("altsum.p2 and binom.p2 sweeps") {
  for (std::uint64_t p : primes_in_range(5, 97)) {
    auto [lhs, rhs] = eval_altsum_p2(p);
    CHECK(lhs == 1);
    CHECK(rhs == 1);
  }
  for (std::uint64_t p : primes_in_range(2, 61)) {
    for (long k = 1; k < long(p); ++k) {
      auto [lhs, rhs] = eval_binom_p2(p, k);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("eq5.1 and eq5.2 sweeps") {
  for (std::uint64_t p : primes_in_range(2, 61)) {
    for (long d = 0; d < long(p); ++d) {
      FpPair a = eval_eq5(p, d, 1);
      CHECK(a.first == a.second);
      FpPair b = eval_eq5(p, d, 2);
      CHECK(b.first == b.second);
    }
  }
}
