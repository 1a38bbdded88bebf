#ifndef CATLAB_SUITES_HPP
#define CATLAB_SUITES_HPP

// Work-item builders for the six sweep suites and the single-item evaluator.
// Builders emit items already sorted by (check id, params), row-major in the
// parameter loops, so the runner's index order is the report order.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catlab/report.hpp"

namespace catlab {

enum class Check {
  // identities
  kEq10, kEq11, kEq113, kEq119, kEq12, kEq120, kEq121, kEq13, kRem13,
  // congruences
  kAltsumP2, kBinomP2, kCong114, kCong115, kCong116, kCong117, kCong118,
  kCong14, kCong15, kCong16, kCong17, kD0Threecase, kEq41, kEq51, kEq52,
  kLemmaNegrow, kLemmaShiftA, kLemmaShiftB, kSP2, kWolstP2, kWolstP3,
  // series
  kSeriesLhs, kSeriesRhs,
  // fg / harmonic
  kFgEval, kHarmTrunc,
  // oracle (self-checks)
  kCoreCatalan, kCoreChu, kCoreNegation, kCorePascal, kCoreRat,
  kCoreTelescope, kLucasGrid,
};

const char* check_id(Check check);
// Parameter names for a check, in record order (e.g. kEq11 -> {l, m, n}).
const std::vector<std::string>& check_params(Check check);

struct WorkItem {
  Check check;
  std::array<long long, 4> args{};  // check_params(check).size() entries used
};

struct SweepBounds {
  long l_max = 10;
  long m_max = 30;
  long n_max = 10;
  long d_max = 10;
  long r_max = 6;
  std::uint64_t p_min = 2;
  std::uint64_t p_max = 100;
  // 1 and 2 select primes by residue mod 3; 3 selects the literal prime 3.
  std::set<int> classes = {1, 2};
};

enum class Suite { kIdentities, kCongruences, kSeries, kFg, kHarmonic, kOracle };
std::optional<Suite> suite_from_string(const std::string& name);

std::vector<WorkItem> identity_items(const SweepBounds& bounds);
std::vector<WorkItem> series_items(const SweepBounds& bounds);
std::vector<WorkItem> congruence_items(const SweepBounds& bounds);
// Restricts the congruence catalog to the given families (for targeted runs).
std::vector<WorkItem> congruence_items(const SweepBounds& bounds,
                                       const std::set<Check>& families);
std::vector<WorkItem> fg_items(const SweepBounds& bounds);
std::vector<WorkItem> harmonic_items(const SweepBounds& bounds);
std::vector<WorkItem> oracle_items(const SweepBounds& bounds);
std::vector<WorkItem> suite_items(Suite suite, const SweepBounds& bounds);

// Pure; safe to call concurrently. Uses thread-local memos for per-prime /
// per-kernel shared state (values identical regardless of thread layout).
VerificationRecord evaluate_item(const WorkItem& item);

// Test hook backing the exit-code contract: bumps rhs by 1 (re-parsed as a
// canonical rational) and recomputes pass, so exactly the tampered records
// fail.
VerificationRecord corrupt_rhs(VerificationRecord rec);

// The primes selected by [p_min, p_max] and the class set, ascending.
std::vector<std::uint64_t> sweep_primes(const SweepBounds& bounds);

}  // namespace catlab

#endif  // CATLAB_SUITES_HPP
