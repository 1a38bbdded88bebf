#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catlab/exact.hpp"
#include "catlab/modp.hpp"
#include "catlab/primes.hpp"
#include "catlab/report.hpp"
#include "catlab/suites.hpp"

namespace {

using catlab::Integer;
using catlab::Rational;
using catlab::ReportFormat;
using catlab::RunResult;
using catlab::SweepBounds;
using catlab::VerificationRecord;
using catlab::WorkItem;

int default_jobs() {
  const char* env = std::getenv("CATLAB_JOBS");
  if (env == nullptr) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

bool parse_classes(const std::string& text, std::set<int>& out) {
  out.clear();
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return false;
    if (cur != "1" && cur != "2" && cur != "3") return true;
    out.insert(cur[0] - '0');
    cur.clear();
    return false;
  };
  for (char c : text) {
    if (c == ',') {
      if (flush()) return false;
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else if (c != ' ') {
      return false;
    }
  }
  if (flush()) return false;
  return !out.empty();
}

bool parse_format(const std::string& text, ReportFormat& fmt) {
  if (text == "json") {
    fmt = ReportFormat::kJson;
    return true;
  }
  if (text == "csv") {
    fmt = ReportFormat::kCsv;
    return true;
  }
  return false;
}

// "CHECK:EVERY" -> corrupt every EVERY-th record of that check family.
bool parse_corrupt(const std::string& text, std::string& check,
                   long long& every) {
  std::size_t pos = text.rfind(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 >= text.size()) {
    return false;
  }
  check = text.substr(0, pos);
  try {
    every = std::stoll(text.substr(pos + 1));
  } catch (...) {
    return false;
  }
  return every >= 1;
}

int run_items(const std::vector<WorkItem>& items, ReportFormat fmt,
              const std::string& out_path, int jobs,
              const std::string& corrupt_spec) {
  std::string corrupt_check;
  long long corrupt_every = 0;
  std::vector<char> corrupt_flag;
  if (!corrupt_spec.empty()) {
    if (!parse_corrupt(corrupt_spec, corrupt_check, corrupt_every)) {
      std::cerr << "invalid --corrupt spec: " << corrupt_spec << "\n";
      return 2;
    }
    corrupt_flag.assign(items.size(), 0);
    std::map<std::string, long long> seen;
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::string id = catlab::check_id(items[i].check);
      if (id != corrupt_check) continue;
      long long ordinal = ++seen[id];
      if (ordinal % corrupt_every == 0) corrupt_flag[i] = 1;
    }
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    out = &file;
  }

  if (fmt == ReportFormat::kCsv) *out << catlab::csv_header() << "\n";
  std::vector<VerificationRecord> fails;
  auto eval = [&](std::size_t i) {
    VerificationRecord rec = catlab::evaluate_item(items[i]);
    if (!corrupt_flag.empty() && corrupt_flag[i] != 0) {
      rec = catlab::corrupt_rhs(std::move(rec));
    }
    return rec;
  };
  auto emit = [&](const VerificationRecord& rec) {
    *out << catlab::record_line(rec, fmt) << "\n";
    if (!rec.pass) fails.push_back(rec);
  };
  RunResult rr = catlab::run_work(items.size(), jobs, eval, emit);
  for (const VerificationRecord& rec : fails) {
    *out << catlab::failed_footer_line(rec, fmt) << "\n";
  }
  *out << catlab::summary_line(rr.total, rr.failed, fmt) << "\n";
  out->flush();
  return rr.failed == 0 ? 0 : 1;
}

struct SweepFlags {
  SweepBounds bounds;
  std::string classes = "1,2";
  std::string format = "json";
  std::string out;
  int jobs = default_jobs();
  std::string corrupt;
};

void add_output_flags(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--format", f.format, "Report format: json or csv");
  cmd->add_option("--out", f.out, "Write the report to this file");
  cmd->add_option("--jobs", f.jobs,
                  "Worker threads (default: CATLAB_JOBS env or 1)");
  cmd->add_option("--corrupt", f.corrupt,
                  "Tamper hook, CHECK:EVERY (testing only)")
      ->group("");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "catlab: exact and modular verification sweeps for the Catalan "
      "congruence catalog (see README.md for check ids)"};
  app.require_subcommand(1);

  SweepFlags vf;
  std::string suite_name;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a sweep suite and report one record per check instance");
  verify->add_option("--suite", suite_name,
                     "identities | congruences | series | fg | harmonic | "
                     "oracle")
      ->required();
  verify->add_option("--l-max", vf.bounds.l_max, "Max kernel power l");
  verify->add_option("--m-max", vf.bounds.m_max, "Max first index m");
  verify->add_option("--n-max", vf.bounds.n_max, "Max second index n");
  verify->add_option("--d-max", vf.bounds.d_max, "Max shift d");
  verify->add_option("--r-max", vf.bounds.r_max, "Max weight power r");
  verify->add_option("--p-min", vf.bounds.p_min, "Smallest prime to include");
  verify->add_option("--p-max", vf.bounds.p_max, "Largest prime to include");
  verify->add_option("--classes", vf.classes,
                     "Prime classes mod 3 to include, e.g. 1,2 or 1,2,3");
  add_output_flags(verify, vf);

  SweepFlags sf;
  CLI::App* series = app.add_subcommand(
      "series-check",
      "Compare kernel power coefficients against both identity sides");
  series->add_option("--l-max", sf.bounds.l_max, "Max kernel power l");
  series->add_option("--n-max", sf.bounds.n_max, "Max second index n");
  add_output_flags(series, sf);

  long long fg_d = 0, fg_r = 0;
  CLI::App* fg = app.add_subcommand(
      "fg", "Print the class constants F(d,r) and G(d,r) as one JSON record");
  fg->add_option("d", fg_d, "Shift d")->required();
  fg->add_option("r", fg_r, "Weight power r")->required();

  long long or_p = 0, or_d = 0, or_r = 0;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Print the weighted shifted-Catalan sum residue mod p");
  oracle->add_option("p", or_p, "Prime modulus")->required();
  oracle->add_option("d", or_d, "Shift d")->required();
  oracle->add_option("r", or_r, "Weight power r")->required();

  std::string table_what;
  long long table_d_max = 10, table_r_max = 6;
  std::string table_out;
  CLI::App* table = app.add_subcommand(
      "table", "Emit a CSV table of class constants (fg) or A/B pairs "
               "(harmonic)");
  table->add_option("what", table_what, "fg | harmonic")->required();
  table->add_option("--d-max", table_d_max, "Max shift d (negative: none)");
  table->add_option("--r-max", table_r_max, "Max weight power r (fg only)");
  table->add_option("--out", table_out, "Write the table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed()) {
    auto suite = catlab::suite_from_string(suite_name);
    if (!suite) {
      std::cerr << "unknown suite: " << suite_name << "\n";
      return 2;
    }
    if (!parse_classes(vf.classes, vf.bounds.classes)) {
      std::cerr << "invalid --classes: " << vf.classes << "\n";
      return 2;
    }
    if (*suite == catlab::Suite::kFg) {
      bool any = vf.bounds.classes.count(1) != 0 ||
                 vf.bounds.classes.count(2) != 0;
      if (!any) {
        std::cerr << "fg suite needs class 1 or 2\n";
        return 2;
      }
    }
    ReportFormat fmt;
    if (!parse_format(vf.format, fmt)) {
      std::cerr << "invalid --format: " << vf.format << "\n";
      return 2;
    }
    if (vf.jobs < 1) {
      std::cerr << "--jobs must be at least 1\n";
      return 2;
    }
    std::vector<WorkItem> items = catlab::suite_items(*suite, vf.bounds);
    return run_items(items, fmt, vf.out, vf.jobs, vf.corrupt);
  }

  if (series->parsed()) {
    ReportFormat fmt;
    if (!parse_format(sf.format, fmt)) {
      std::cerr << "invalid --format: " << sf.format << "\n";
      return 2;
    }
    if (sf.jobs < 1) {
      std::cerr << "--jobs must be at least 1\n";
      return 2;
    }
    std::vector<WorkItem> items = catlab::series_items(sf.bounds);
    return run_items(items, fmt, sf.out, sf.jobs, sf.corrupt);
  }

  if (fg->parsed()) {
    if (fg_d < 0 || fg_r < 0) {
      std::cerr << "d and r must be nonnegative\n";
      return 2;
    }
    Rational f = catlab::fg_constants(fg_d, fg_r, 1);
    Rational g = catlab::fg_constants(fg_d, fg_r, 2);
    std::cout << "{\"d\":" << fg_d << ",\"r\":" << fg_r << ",\"F\":\""
              << catlab::to_string(f) << "\",\"G\":\"" << catlab::to_string(g)
              << "\"}\n";
    return 0;
  }

  if (oracle->parsed()) {
    if (or_d < 0 || or_r < 0) {
      std::cerr << "d and r must be nonnegative\n";
      return 2;
    }
    if (or_p < 2 || !catlab::is_prime(std::uint64_t(or_p))) {
      std::cerr << "p must be prime\n";
      return 2;
    }
    std::uint64_t p = std::uint64_t(or_p);
    std::vector<Integer> cats = catlab::catalan_upto(or_p - 1 + or_d);
    Integer sum = 0;
    for (long long k = 1; k < or_p; ++k) {
      Integer weight;
      mpz_ui_pow_ui(weight.get_mpz_t(), unsigned(k), unsigned(or_r));
      sum += weight * cats[std::size_t(k + or_d)];
    }
    std::cout << catlab::fp_from_integer(sum, p).residue() << "\n";
    return 0;
  }

  if (table->parsed()) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!table_out.empty()) {
      file.open(table_out);
      if (!file) {
        std::cerr << "cannot open output file: " << table_out << "\n";
        return 2;
      }
      out = &file;
    }
    if (table_what == "fg") {
      *out << "d,r,F,G\n";
      for (long long d = 0; d <= table_d_max; ++d)
        for (long long r = 0; r <= table_r_max; ++r) {
          *out << d << "," << r << ","
               << catlab::to_string(catlab::fg_constants(d, r, 1)) << ","
               << catlab::to_string(catlab::fg_constants(d, r, 2)) << "\n";
        }
    } else if (table_what == "harmonic") {
      *out << "d,A,B\n";
      for (long long d = 0; d <= table_d_max; ++d) {
        auto [a, b] = catlab::harmonic_constants(d);
        *out << d << "," << catlab::to_string(a) << ","
             << catlab::to_string(b) << "\n";
      }
    } else {
      std::cerr << "table kind must be fg or harmonic\n";
      return 2;
    }
    out->flush();
    return 0;
  }

  return 2;
}
