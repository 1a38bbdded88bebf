#ifndef CATLAB_REPORT_HPP
#define CATLAB_REPORT_HPP

// Verification records, their canonical JSON/CSV serialization, and the
// order-preserving parallel runner. Output is byte-identical for any job
// count: work is evaluated in fixed-size chunks claimed by workers, buffered,
// and emitted strictly in index order from a single thread.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace catlab {

struct VerificationRecord {
  std::string check;
  std::vector<std::pair<std::string, long long>> params;
  std::string lhs;
  std::string rhs;
  bool pass = false;  // invariant: pass == (lhs == rhs)
};

VerificationRecord make_record(
    std::string check, std::vector<std::pair<std::string, long long>> params,
    std::string lhs, std::string rhs);

enum class ReportFormat { kJson, kCsv };

// {"check":"eq1.1","params":{"l":1,"m":2,"n":0},"lhs":"-1","rhs":"-1","pass":true}
std::string record_json(const VerificationRecord& rec);
// eq1.1,l=1 m=2 n=0,-1,-1,true
std::string record_csv(const VerificationRecord& rec);
std::string record_line(const VerificationRecord& rec, ReportFormat format);
std::string csv_header();

// Footer: on failure the failing records are re-emitted in order, then one
// summary line; CSV footer lines are '#'-prefixed.
std::string summary_line(std::uint64_t total, std::uint64_t failed,
                         ReportFormat format);
std::string failed_footer_line(const VerificationRecord& rec,
                               ReportFormat format);

struct RunResult {
  std::uint64_t total = 0;
  std::uint64_t failed = 0;
};

// Evaluates indices 0..count-1 with `eval` (pure; called from worker threads)
// and hands every record to `emit` in ascending index order from the calling
// thread. In-flight memory stays bounded by a fixed chunk window.
RunResult run_work(std::size_t count, int jobs,
                   const std::function<VerificationRecord(std::size_t)>& eval,
                   const std::function<void(const VerificationRecord&)>& emit);

}  // namespace catlab

#endif  // CATLAB_REPORT_HPP
