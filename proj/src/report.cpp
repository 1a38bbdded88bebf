#include "catlab/report.hpp"

#include <condition_variable>
#include <mutex>
#include <thread>

namespace catlab {

VerificationRecord make_record(
    std::string check, std::vector<std::pair<std::string, long long>> params,
    std::string lhs, std::string rhs) {
  VerificationRecord rec;
  rec.check = std::move(check);
  rec.params = std::move(params);
  rec.lhs = std::move(lhs);
  rec.rhs = std::move(rhs);
  rec.pass = rec.lhs == rec.rhs;
  return rec;
}

std::string record_json(const VerificationRecord& rec) {
  std::string out = "{\"check\":\"" + rec.check + "\",\"params\":{";
  bool first = true;
  for (const auto& [name, value] : rec.params) {
    if (!first) out += ",";
    first = false;
    out += "\"" + name + "\":" + std::to_string(value);
  }
  out += "},\"lhs\":\"" + rec.lhs + "\",\"rhs\":\"" + rec.rhs + "\",\"pass\":";
  out += rec.pass ? "true" : "false";
  out += "}";
  return out;
}

std::string record_csv(const VerificationRecord& rec) {
  std::string params;
  for (const auto& [name, value] : rec.params) {
    if (!params.empty()) params += " ";
    params += name + "=" + std::to_string(value);
  }
  return rec.check + "," + params + "," + rec.lhs + "," + rec.rhs + "," +
         (rec.pass ? "true" : "false");
}

std::string csv_header() { return "check,params,lhs,rhs,pass"; }

std::string record_line(const VerificationRecord& rec, ReportFormat format) {
  return format == ReportFormat::kJson ? record_json(rec) : record_csv(rec);
}

std::string summary_line(std::uint64_t total, std::uint64_t failed,
                         ReportFormat format) {
  if (format == ReportFormat::kJson) {
    return "{\"total\":" + std::to_string(total) +
           ",\"failed\":" + std::to_string(failed) + "}";
  }
  return "# total=" + std::to_string(total) +
         " failed=" + std::to_string(failed);
}

std::string failed_footer_line(const VerificationRecord& rec,
                               ReportFormat format) {
  if (format == ReportFormat::kJson) return record_json(rec);
  return "# FAIL " + record_csv(rec);
}

RunResult run_work(std::size_t count, int jobs,
                   const std::function<VerificationRecord(std::size_t)>& eval,
                   const std::function<void(const VerificationRecord&)>& emit) {
  RunResult res;
  if (count == 0) return res;
  if (jobs < 1) jobs = 1;
  constexpr std::size_t kChunk = 512;
  std::size_t n_chunks = (count + kChunk - 1) / kChunk;

  auto tally = [&res, &emit](const VerificationRecord& rec) {
    ++res.total;
    if (!rec.pass) ++res.failed;
    emit(rec);
  };

  if (jobs == 1 || n_chunks == 1) {
    for (std::size_t i = 0; i < count; ++i) tally(eval(i));
    return res;
  }

  std::mutex mu;
  std::condition_variable chunk_done, window_open;
  std::vector<std::vector<VerificationRecord>> results(n_chunks);
  std::vector<char> done(n_chunks, 0);
  std::size_t next_chunk = 0;
  std::size_t emit_floor = 0;  // chunks below this are already emitted
  const std::size_t window = std::size_t(jobs) * 4;

  auto worker = [&]() {
    for (;;) {
      std::size_t c;
      {
        std::unique_lock<std::mutex> lk(mu);
        window_open.wait(lk, [&] {
          return next_chunk >= n_chunks || next_chunk < emit_floor + window;
        });
        if (next_chunk >= n_chunks) return;
        c = next_chunk++;
      }
      std::size_t lo = c * kChunk;
      std::size_t hi = std::min(count, lo + kChunk);
      std::vector<VerificationRecord> recs;
      recs.reserve(hi - lo);
      for (std::size_t i = lo; i < hi; ++i) recs.push_back(eval(i));
      {
        std::lock_guard<std::mutex> lk(mu);
        results[c] = std::move(recs);
        done[c] = 1;
      }
      chunk_done.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(std::size_t(jobs));
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);

  for (std::size_t c = 0; c < n_chunks; ++c) {
    std::vector<VerificationRecord> recs;
    {
      std::unique_lock<std::mutex> lk(mu);
      chunk_done.wait(lk, [&] { return done[c] != 0; });
      recs = std::move(results[c]);
      emit_floor = c + 1;
    }
    window_open.notify_all();
    for (const VerificationRecord& rec : recs) tally(rec);
  }
  for (std::thread& t : pool) t.join();
  return res;
}

}  // namespace catlab
