#include "catlab/suites.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "catlab/exact.hpp"
#include "catlab/identities.hpp"
#include "catlab/modp.hpp"
#include "catlab/primes.hpp"
#include "catlab/series.hpp"

namespace catlab {

namespace {

std::string int_str(const Integer& v) { return to_string(v); }
std::string rat_str(const Rational& v) { return to_string(v); }
std::string u64_str(std::uint64_t v) { return std::to_string(v); }

// Batched row cache for cong1.4/5/6: items for one prime arrive
// contiguously, so a single-slot thread_local memo keyed by (p, d_hi) is
// enough.
const std::vector<CentralRowPoint>& central_row_memo(std::uint64_t p, long d_hi) {
  thread_local std::uint64_t memo_p = 0;
  thread_local long memo_d = -1;
  thread_local std::vector<CentralRowPoint> memo;
  if (memo_p != p || memo_d != d_hi) {
    memo = central_row_sweep(p, d_hi);
    memo_p = p;
    memo_d = d_hi;
  }
  return memo;
}

const BivariatePoly& kernel_memo(long l, long max_t) {
  thread_local long memo_l = -1;
  thread_local long memo_t = -1;
  thread_local BivariatePoly memo(0, 0);
  if (memo_l != l || memo_t != max_t) {
    memo = kernel_pow(l, 3 * l + 6, max_t);
    memo_l = l;
    memo_t = max_t;
  }
  return memo;
}

VerificationRecord finish(Check check, const std::array<long long, 4>& args,
                          std::string lhs, std::string rhs) {
  const std::vector<std::string>& names = check_params(check);
  std::vector<std::pair<std::string, long long>> params;
  params.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    params.emplace_back(names[i], args[i]);
  }
  return make_record(check_id(check), std::move(params), std::move(lhs),
                     std::move(rhs));
}

VerificationRecord from_pair(Check check, const std::array<long long, 4>& args,
                             const std::pair<Integer, Integer>& sides) {
  return finish(check, args, int_str(sides.first), int_str(sides.second));
}

VerificationRecord from_fp(Check check, const std::array<long long, 4>& args,
                           const FpPair& sides) {
  return finish(check, args, u64_str(sides.first.residue()),
                u64_str(sides.second.residue()));
}

VerificationRecord evaluate_unchecked(const WorkItem& item) {
  const auto& a = item.args;
  switch (item.check) {
    case Check::kEq10:
      return from_pair(item.check, a, eval_identity_nl(a[0], a[1]));
    case Check::kEq11:
      return from_pair(item.check, a,
                       eval_identity_main_fast(a[0], a[1], a[2]));
    case Check::kEq113:
      return from_pair(item.check, a, eval_decomposition(a[0], a[1]));
    case Check::kEq119: {
      Forms119 f = eval_recurrence_1_19(a[0]);
      Rational rhs = a[1] == 0 ? f.delta0 : a[1] == 1 ? f.delta1 : f.half;
      return finish(item.check, a, rat_str(Rational(f.catalan_value)),
                    rat_str(rhs));
    }
    case Check::kEq12:
      return from_pair(item.check, a, eval_identity_shifted(a[0], a[1], 1));
    case Check::kEq120: {
      Forms120 f = eval_recurrence_1_20(a[0]);
      return finish(item.check, a, int_str(f.lhs),
                    int_str(a[1] == 1 ? f.form1 : f.form2));
    }
    case Check::kEq121: {
      Forms121 f = eval_recurrence_1_21(a[0]);
      return finish(item.check, a, rat_str(f.lhs),
                    rat_str(a[1] == 1 ? f.form1 : f.form2));
    }
    case Check::kEq13:
      return from_pair(item.check, a, eval_identity_shifted(a[0], a[1], 2));
    case Check::kRem13:
      return from_pair(item.check, a, eval_rem13(a[0], a[1]));

    case Check::kAltsumP2:
      return from_pair(item.check, a,
                       eval_altsum_p2(std::uint64_t(a[0])));
    case Check::kBinomP2:
      return from_pair(item.check, a,
                       eval_binom_p2(std::uint64_t(a[0]), a[1]));
    case Check::kCong114:
      return from_fp(item.check, a,
                     catalan_shift(std::uint64_t(a[0]), a[1]));
    case Check::kCong115:
      return from_fp(item.check, a,
                     eval_cong_1_15(std::uint64_t(a[0]), a[1], a[2]));
    case Check::kCong116:
      return from_fp(item.check, a,
                     eval_moment_sum(std::uint64_t(a[0]), a[1], 0));
    case Check::kCong117:
      return from_fp(item.check, a,
                     eval_moment_sum(std::uint64_t(a[0]), a[1], 1));
    case Check::kCong118:
      return from_fp(item.check, a,
                     eval_moment_sum(std::uint64_t(a[0]), a[1], 2));
    case Check::kCong14: {
      const CentralRowPoint& pt = central_row_memo(std::uint64_t(a[0]), a[2])[a[1]];
      return finish(item.check, a, u64_str(pt.sum_lhs), u64_str(pt.sum_rhs));
    }
    case Check::kCong15: {
      const CentralRowPoint& pt = central_row_memo(std::uint64_t(a[0]), a[2])[a[1]];
      return finish(item.check, a, u64_str(pt.weighted_lhs),
                    u64_str(pt.weighted_rhs));
    }
    case Check::kCong16: {
      const CentralRowPoint& pt = central_row_memo(std::uint64_t(a[0]), a[2])[a[1]];
      return finish(item.check, a, u64_str(pt.harmonic_lhs),
                    u64_str(pt.harmonic_rhs));
    }
    case Check::kCong17:
      return from_fp(item.check, a,
                     eval_cong_1_7(std::uint64_t(a[0]), a[1]));
    case Check::kD0Threecase:
      return from_fp(item.check, a,
                     eval_d0_threecase(std::uint64_t(a[0]), a[1]));
    case Check::kEq41:
      return from_fp(item.check, a,
                     eval_eq41(std::uint64_t(a[0]), a[1]));
    case Check::kEq51:
      return from_fp(item.check, a,
                     eval_eq5(std::uint64_t(a[0]), a[1], 1));
    case Check::kEq52:
      return from_fp(item.check, a,
                     eval_eq5(std::uint64_t(a[0]), a[1], 2));
    case Check::kLemmaNegrow:
      return from_fp(item.check, a,
                     eval_lemma_negrow(std::uint64_t(a[0]), a[1]));
    case Check::kLemmaShiftA:
      return from_fp(item.check, a,
                     eval_lemma_shift(std::uint64_t(a[0]), a[1], a[2], 0));
    case Check::kLemmaShiftB:
      return from_fp(item.check, a,
                     eval_lemma_shift(std::uint64_t(a[0]), a[1], a[2], 1));
    case Check::kSP2:
      return from_pair(item.check, a,
                       eval_s_p2(std::uint64_t(a[0]), a[1]));
    case Check::kWolstP2:
      return finish(item.check, a,
                    int_str(wolstenholme_check(std::uint64_t(a[0])).first),
                    "2");
    case Check::kWolstP3:
      return finish(item.check, a,
                    int_str(wolstenholme_check(std::uint64_t(a[0])).second),
                    "1");

    case Check::kSeriesLhs: {
      const BivariatePoly& pow = kernel_memo(a[0], a[3]);
      auto sides = eval_identity_main(a[0], a[1], a[2]);
      return finish(item.check, a, int_str(coeff(pow, a[1], a[2])),
                    int_str(sides.first));
    }
    case Check::kSeriesRhs: {
      const BivariatePoly& pow = kernel_memo(a[0], a[3]);
      auto sides = eval_identity_main(a[0], a[1], a[2]);
      return finish(item.check, a, int_str(coeff(pow, a[1], a[2])),
                    int_str(sides.second));
    }

    case Check::kFgEval:
      return from_fp(item.check, a,
                     eval_fg(std::uint64_t(a[2]), a[0], a[1]));
    case Check::kHarmTrunc:
      return from_fp(item.check, a,
                     eval_harmonic_truncated(std::uint64_t(a[1]), a[0]));

    case Check::kCoreCatalan: {
      Integer direct = binom_int(Integer(long(2 * a[0])), a[0]);
      mpz_divexact_ui(direct.get_mpz_t(), direct.get_mpz_t(),
                      unsigned(a[0] + 1));
      return finish(item.check, a, int_str(catalan(a[0])), int_str(direct));
    }
    case Check::kCoreChu: {
      Integer lhs = 0;
      for (long j = 0; j <= a[2]; ++j) {
        lhs += binom_int(Integer(long(a[0])), j) *
               binom_int(Integer(long(a[1])), a[2] - j);
      }
      return finish(item.check, a, int_str(lhs),
                    int_str(binom_int(Integer(long(a[0] + a[1])), a[2])));
    }
    case Check::kCoreNegation: {
      Integer lhs = binom_int(Integer(long(-a[0])), a[1]);
      Integer rhs = binom_int(Integer(long(a[0] + a[1] - 1)), a[1]);
      if (a[1] % 2 != 0) rhs = -rhs;
      return finish(item.check, a, int_str(lhs), int_str(rhs));
    }
    case Check::kCorePascal:
      return finish(item.check, a,
                    int_str(binom_int(Integer(long(a[0])), a[1])),
                    int_str(binom_int(Integer(long(a[0] - 1)), a[1] - 1) +
                            binom_int(Integer(long(a[0] - 1)), a[1])));
    case Check::kCoreRat:
      return finish(item.check, a,
                    rat_str(binom_rat(Rational(long(a[0])), a[1])),
                    rat_str(Rational(binom_int(Integer(long(a[0])), a[1]))));
    case Check::kCoreTelescope: {
      Integer lhs = catalan(a[0]);
      for (long j = 1; j <= a[0] + 1; ++j) lhs += gen_catalan(a[0], j);
      return finish(item.check, a, int_str(lhs), "0");
    }
    case Check::kLucasGrid: {
      std::uint64_t p = std::uint64_t(a[0]);
      long n = a[1];
      long long mismatches = 0;
      for (long k = -1; k <= n + 1; ++k) {
        std::uint64_t fast = binom_mod(std::uint64_t(n), k, p).residue();
        std::uint64_t exact =
            fp_from_integer(binom_int(Integer(n), k), p).residue();
        if (fast != exact) ++mismatches;
      }
      return finish(item.check, a, std::to_string(mismatches), "0");
    }
  }
  throw std::logic_error("unknown check");
}

void push(std::vector<WorkItem>& items, Check check, long long a0,
          long long a1 = 0, long long a2 = 0, long long a3 = 0) {
  items.push_back(WorkItem{check, {a0, a1, a2, a3}});
}

}  // namespace

const char* check_id(Check check) {
  switch (check) {
    case Check::kEq10: return "eq1.0";
    case Check::kEq11: return "eq1.1";
    case Check::kEq113: return "eq1.13";
    case Check::kEq119: return "eq1.19";
    case Check::kEq12: return "eq1.2";
    case Check::kEq120: return "eq1.20";
    case Check::kEq121: return "eq1.21";
    case Check::kEq13: return "eq1.3";
    case Check::kRem13: return "rem1.3";
    case Check::kAltsumP2: return "altsum.p2";
    case Check::kBinomP2: return "binom.p2";
    case Check::kCong114: return "cong1.14";
    case Check::kCong115: return "cong1.15";
    case Check::kCong116: return "cong1.16";
    case Check::kCong117: return "cong1.17";
    case Check::kCong118: return "cong1.18";
    case Check::kCong14: return "cong1.4";
    case Check::kCong15: return "cong1.5";
    case Check::kCong16: return "cong1.6";
    case Check::kCong17: return "cong1.7";
    case Check::kD0Threecase: return "d0.threecase";
    case Check::kEq41: return "eq4.1";
    case Check::kEq51: return "eq5.1";
    case Check::kEq52: return "eq5.2";
    case Check::kLemmaNegrow: return "lemma.negrow";
    case Check::kLemmaShiftA: return "lemma.shift.a";
    case Check::kLemmaShiftB: return "lemma.shift.b";
    case Check::kSP2: return "s.p2";
    case Check::kWolstP2: return "wolst.p2";
    case Check::kWolstP3: return "wolst.p3";
    case Check::kSeriesLhs: return "series.lhs";
    case Check::kSeriesRhs: return "series.rhs";
    case Check::kFgEval: return "fg.eval";
    case Check::kHarmTrunc: return "harm.trunc";
    case Check::kCoreCatalan: return "core.catalan";
    case Check::kCoreChu: return "core.chu";
    case Check::kCoreNegation: return "core.negation";
    case Check::kCorePascal: return "core.pascal";
    case Check::kCoreRat: return "core.rat";
    case Check::kCoreTelescope: return "core.telescope";
    case Check::kLucasGrid: return "lucas.grid";
  }
  return "unknown";
}

const std::vector<std::string>& check_params(Check check) {
  static const std::vector<std::string> lm = {"l", "m"};
  static const std::vector<std::string> lmn = {"l", "m", "n"};
  static const std::vector<std::string> dk = {"d", "k"};
  static const std::vector<std::string> dform = {"d", "form"};
  static const std::vector<std::string> dj = {"d", "j"};
  static const std::vector<std::string> p = {"p"};
  static const std::vector<std::string> pk = {"p", "k"};
  static const std::vector<std::string> pd = {"p", "d"};
  static const std::vector<std::string> pr = {"p", "r"};
  static const std::vector<std::string> pdr = {"p", "d", "r"};
  static const std::vector<std::string> pkr = {"p", "k", "r"};
  static const std::vector<std::string> drp = {"d", "r", "p"};
  static const std::vector<std::string> dp = {"d", "p"};
  static const std::vector<std::string> n = {"n"};
  static const std::vector<std::string> abn = {"a", "b", "n"};
  static const std::vector<std::string> xk = {"x", "k"};
  static const std::vector<std::string> d = {"d"};
  static const std::vector<std::string> pn = {"p", "n"};
  switch (check) {
    case Check::kEq10:
    case Check::kEq12:
    case Check::kEq13: return lm;
    case Check::kEq11:
    case Check::kSeriesLhs:
    case Check::kSeriesRhs: return lmn;
    case Check::kEq113: return dk;
    case Check::kEq119:
    case Check::kEq120:
    case Check::kEq121: return dform;
    case Check::kRem13: return dj;
    case Check::kAltsumP2:
    case Check::kWolstP2:
    case Check::kWolstP3: return p;
    case Check::kBinomP2:
    case Check::kCong114:
    case Check::kLemmaNegrow: return pk;
    case Check::kCong115: return pdr;
    case Check::kCong116:
    case Check::kCong117:
    case Check::kCong118:
    case Check::kCong14:
    case Check::kCong15:
    case Check::kCong16:
    case Check::kCong17:
    case Check::kEq51:
    case Check::kEq52:
    case Check::kSP2: return pd;
    case Check::kD0Threecase:
    case Check::kEq41: return pr;
    case Check::kLemmaShiftA:
    case Check::kLemmaShiftB: return pkr;
    case Check::kFgEval: return drp;
    case Check::kHarmTrunc: return dp;
    case Check::kCoreCatalan: return n;
    case Check::kCoreChu: return abn;
    case Check::kCoreNegation:
    case Check::kCorePascal:
    case Check::kCoreRat: return xk;
    case Check::kCoreTelescope: return d;
    case Check::kLucasGrid: return pn;
  }
  return d;
}

std::optional<Suite> suite_from_string(const std::string& name) {
  if (name == "identities") return Suite::kIdentities;
  if (name == "congruences") return Suite::kCongruences;
  if (name == "series") return Suite::kSeries;
  if (name == "fg") return Suite::kFg;
  if (name == "harmonic") return Suite::kHarmonic;
  if (name == "oracle") return Suite::kOracle;
  return std::nullopt;
}

std::vector<std::uint64_t> sweep_primes(const SweepBounds& bounds) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_in_range(bounds.p_min, bounds.p_max)) {
    int cls = p == 3 ? 3 : int(p % 3);
    if (bounds.classes.count(cls) != 0) out.push_back(p);
  }
  return out;
}

std::vector<WorkItem> identity_items(const SweepBounds& b) {
  std::vector<WorkItem> items;
  for (long l = 0; l <= b.l_max; ++l)
    for (long m = 0; m <= b.m_max; ++m) push(items, Check::kEq10, l, m);
  for (long l = 0; l <= b.l_max; ++l)
    for (long m = 0; m <= b.m_max; ++m)
      for (long n = 0; n <= b.n_max; ++n) push(items, Check::kEq11, l, m, n);
  for (long d = 0; d <= b.d_max; ++d)
    for (long k = 0; k <= b.d_max; ++k) push(items, Check::kEq113, d, k);
  for (long d = 0; d <= b.d_max; ++d)
    for (long form = 0; form <= 2; ++form) push(items, Check::kEq119, d, form);
  for (long l = 0; l <= b.l_max; ++l)
    for (long m = 0; m <= b.m_max; ++m) push(items, Check::kEq12, l, m);
  for (long d = 0; d <= b.d_max; ++d)
    for (long form = 1; form <= 2; ++form) push(items, Check::kEq120, d, form);
  for (long d = 0; d <= b.d_max; ++d)
    for (long form = 1; form <= 2; ++form) push(items, Check::kEq121, d, form);
  for (long l = 0; l <= b.l_max; ++l)
    for (long m = 0; m <= b.m_max; ++m) push(items, Check::kEq13, l, m);
  for (long d = 0; d <= b.d_max; ++d)
    for (long j = 1; j <= d + 1; ++j) push(items, Check::kRem13, d, j);
  return items;
}

std::vector<WorkItem> series_items(const SweepBounds& b) {
  std::vector<WorkItem> items;
  for (long l = 0; l <= b.l_max; ++l)
    for (long m = 0; m <= 3 * l + 6; ++m)
      for (long n = 0; n <= b.n_max; ++n)
        push(items, Check::kSeriesLhs, l, m, n, b.n_max);
  for (long l = 0; l <= b.l_max; ++l)
    for (long m = 0; m <= 3 * l + 6; ++m)
      for (long n = 0; n <= b.n_max; ++n)
        push(items, Check::kSeriesRhs, l, m, n, b.n_max);
  return items;
}

std::vector<WorkItem> congruence_items(const SweepBounds& b) {
  static const std::set<Check> all = {
      Check::kAltsumP2,    Check::kBinomP2,     Check::kCong114,
      Check::kCong115,     Check::kCong116,     Check::kCong117,
      Check::kCong118,     Check::kCong14,      Check::kCong15,
      Check::kCong16,      Check::kCong17,      Check::kD0Threecase,
      Check::kEq41,        Check::kEq51,        Check::kEq52,
      Check::kLemmaNegrow, Check::kLemmaShiftA, Check::kLemmaShiftB,
      Check::kSP2,         Check::kWolstP2,     Check::kWolstP3};
  return congruence_items(b, all);
}

std::vector<WorkItem> congruence_items(const SweepBounds& b,
                                       const std::set<Check>& families) {
  std::vector<WorkItem> items;
  std::vector<std::uint64_t> primes = sweep_primes(b);
  auto want = [&families](Check check) { return families.count(check) != 0; };

  if (want(Check::kAltsumP2))
    for (std::uint64_t p : primes)
      if (p >= 5) push(items, Check::kAltsumP2, (long long)p);
  if (want(Check::kBinomP2))
    for (std::uint64_t p : primes)
      for (long long k = 1; k < (long long)p; ++k)
        push(items, Check::kBinomP2, (long long)p, k);
  if (want(Check::kCong114))
    for (std::uint64_t p : primes)
      for (long long k = 0;
           k <= std::min<long long>(b.d_max, (long long)p - 2); ++k)
        push(items, Check::kCong114, (long long)p, k);
  if (want(Check::kCong115))
    for (std::uint64_t p : primes)
      for (long long d = 0;
           d <= std::min<long long>(b.d_max, (long long)p - 1); ++d)
        for (long long r = 0;
             r <= std::min<long long>(b.r_max, (long long)p - 1); ++r)
          push(items, Check::kCong115, (long long)p, d, r);
  for (Check check : {Check::kCong116, Check::kCong117, Check::kCong118}) {
    if (!want(check)) continue;
    for (std::uint64_t p : primes)
      for (long long d = 0;
           d <= std::min<long long>(b.d_max, (long long)p - 1); ++d)
        push(items, check, (long long)p, d);
  }
  for (Check check : {Check::kCong14, Check::kCong15, Check::kCong16}) {
    if (!want(check)) continue;
    for (std::uint64_t p : primes) {
      long long d_hi = std::min<long long>(b.d_max, (long long)p);
      for (long long d = 0; d <= d_hi; ++d)
        push(items, check, (long long)p, d, d_hi);
    }
  }
  if (want(Check::kCong17))
    for (std::uint64_t p : primes)
      for (long long d = 0;
           d <= std::min<long long>(b.d_max, (long long)p - 1); ++d)
        push(items, Check::kCong17, (long long)p, d);
  if (want(Check::kD0Threecase))
    for (std::uint64_t p : primes)
      for (long long r = 0;
           r <= std::min<long long>(b.r_max, (long long)p - 1); ++r)
        push(items, Check::kD0Threecase, (long long)p, r);
  if (want(Check::kEq41))
    for (std::uint64_t p : primes)
      for (long long r = 1;
           r <= std::min<long long>(b.r_max, ((long long)p - 7) / 4); ++r)
        push(items, Check::kEq41, (long long)p, r);
  for (Check check : {Check::kEq51, Check::kEq52}) {
    if (!want(check)) continue;
    for (std::uint64_t p : primes)
      for (long long d = 0;
           d <= std::min<long long>(b.d_max, (long long)p - 1); ++d)
        push(items, check, (long long)p, d);
  }
  if (want(Check::kLemmaNegrow))
    for (std::uint64_t p : primes)
      for (long long k = 0;
           k <= std::min<long long>(b.d_max, (long long)p - 1); ++k)
        push(items, Check::kLemmaNegrow, (long long)p, k);
  for (Check check : {Check::kLemmaShiftA, Check::kLemmaShiftB}) {
    if (!want(check)) continue;
    for (std::uint64_t p : primes)
      for (long long k = 0;
           k <= std::min<long long>(b.d_max, (long long)p - 1); ++k)
        for (long long r = 0;
             r <= std::min<long long>(b.r_max, (long long)p - 1); ++r)
          push(items, check, (long long)p, k, r);
  }
  if (want(Check::kSP2))
    for (std::uint64_t p : primes) {
      if (p < 5) continue;
      for (long long d = 0;
           d <= std::min<long long>(b.d_max, (long long)p - 1); ++d)
        push(items, Check::kSP2, (long long)p, d);
    }
  if (want(Check::kWolstP2))
    for (std::uint64_t p : primes) push(items, Check::kWolstP2, (long long)p);
  if (want(Check::kWolstP3))
    for (std::uint64_t p : primes)
      if (p >= 5) push(items, Check::kWolstP3, (long long)p);
  return items;
}

std::vector<WorkItem> fg_items(const SweepBounds& b) {
  std::vector<WorkItem> items;
  std::set<int> classes;
  for (int cls : b.classes)
    if (cls == 1 || cls == 2) classes.insert(cls);
  for (long long d = 0; d <= b.d_max; ++d)
    for (long long r = 0; r <= b.r_max; ++r) {
      std::uint64_t floor = std::uint64_t(std::max(d, std::max(r, 3LL))) + 1;
      std::uint64_t lo = std::max<std::uint64_t>(b.p_min, floor);
      for (std::uint64_t p : primes_in_range(lo, b.p_max))
        if (classes.count(int(p % 3)) != 0)
          push(items, Check::kFgEval, d, r, (long long)p);
    }
  return items;
}

std::vector<WorkItem> harmonic_items(const SweepBounds& b) {
  std::vector<WorkItem> items;
  for (long long d = 0; d <= b.d_max; ++d) {
    std::uint64_t lo =
        std::max<std::uint64_t>(5, std::max<std::uint64_t>(
                                       b.p_min, std::uint64_t(d) + 2));
    for (std::uint64_t p : primes_in_range(lo, b.p_max)) {
      int cls = int(p % 3);
      if (b.classes.count(cls) != 0) push(items, Check::kHarmTrunc, d,
                                          (long long)p);
    }
  }
  return items;
}

std::vector<WorkItem> oracle_items(const SweepBounds& b) {
  std::vector<WorkItem> items;
  for (long n = 0; n <= b.m_max; ++n) push(items, Check::kCoreCatalan, n);
  for (long aa = 0; aa <= b.l_max; ++aa)
    for (long bb = 0; bb <= b.l_max; ++bb)
      for (long n = 0; n <= b.n_max; ++n)
        push(items, Check::kCoreChu, aa, bb, n);
  for (long x = 0; x <= b.m_max; ++x)
    for (long k = 0; k <= b.l_max; ++k)
      push(items, Check::kCoreNegation, x, k);
  for (long x = -b.m_max; x <= b.m_max; ++x)
    for (long k = 0; k <= b.l_max; ++k) push(items, Check::kCorePascal, x, k);
  for (long x = -b.m_max; x <= b.m_max; ++x)
    for (long k = 0; k <= b.l_max; ++k) push(items, Check::kCoreRat, x, k);
  for (long d = 0; d <= b.d_max; ++d) push(items, Check::kCoreTelescope, d);
  for (std::uint64_t p : sweep_primes(b))
    for (long n = 0; n <= b.m_max; ++n)
      push(items, Check::kLucasGrid, (long long)p, n);
  return items;
}

std::vector<WorkItem> suite_items(Suite suite, const SweepBounds& bounds) {
  switch (suite) {
    case Suite::kIdentities: return identity_items(bounds);
    case Suite::kCongruences: return congruence_items(bounds);
    case Suite::kSeries: return series_items(bounds);
    case Suite::kFg: return fg_items(bounds);
    case Suite::kHarmonic: return harmonic_items(bounds);
    case Suite::kOracle: return oracle_items(bounds);
  }
  throw std::logic_error("unknown suite");
}

VerificationRecord evaluate_item(const WorkItem& item) {
  try {
    return evaluate_unchecked(item);
  } catch (const DenominatorDivisible&) {
    VerificationRecord rec =
        finish(item.check, item.args, "undefined(denominator-divisible)",
               "defined");
    return rec;
  }
}

VerificationRecord corrupt_rhs(VerificationRecord rec) {
  Rational bumped = rational_from_string(rec.rhs) + 1;
  rec.rhs = to_string(bumped);
  rec.pass = rec.lhs == rec.rhs;
  return rec;
}

}  // namespace catlab
