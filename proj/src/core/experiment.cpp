#include "core/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <thread>

#include <json.hpp>

namespace fptlct {

std::string to_string(WarningKind kind) {
  switch (kind) {
    case WarningKind::Degenerate:
      return "degenerate";
    case WarningKind::Capacity:
      return "capacity";
    case WarningKind::OutOfBudget:
      return "out-of-budget";
  }
  return "unknown";
}

namespace {

struct PrimeOutcome {
  std::vector<SweepRecord> records;
  std::vector<SweepWarning> warnings;
};

PrimeOutcome run_prime(const IntegerIdeal& ideal, std::uint32_t p, const SweepOptions& options) {
  PrimeOutcome out;
  const std::uint32_t e_max = max_exponent_below(p, options.q_max);
  if (e_max == 0) {
    out.warnings.push_back({p, 0, WarningKind::OutOfBudget,
                            "p = " + std::to_string(p) + " exceeds q_max = " + std::to_string(options.q_max)});
    return out;
  }
  Ideal reduced(Ambient{ideal.n(), p});
  try {
    reduced = reduce_mod_p(ideal, p);
  } catch (const DegenerateReductionError& err) {
    out.warnings.push_back({p, 0, WarningKind::Degenerate, err.what()});
    return out;
  }

  const std::uint64_t mu = generator_count(reduced);
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto record = [&](std::uint32_t e, std::uint64_t v) {
    const FptEnclosure enc = enclosure_from_nu({PrimePower(p, e), v, mu});
    std::uint64_t ms = 0;
    if (options.timing) {
      ms = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
    }
    out.records.push_back({p, e, v, enc.low, enc.high, ms});
  };

  try {
    nu_sequence(reduced, e_max, options.frobenius, record);
  } catch (const CapacityError& err) {
    // Keep the levels that finished and record the failure once.
    const auto failed_e = static_cast<std::uint32_t>(out.records.size() + 1);
    out.warnings.push_back({p, failed_e, WarningKind::Capacity, err.what()});
  }
  return out;
}

}  // namespace

SweepResult sweep(const IntegerIdeal& ideal, const std::vector<std::uint32_t>& primes, const SweepOptions& options) {
  const std::set<std::uint32_t> distinct(primes.begin(), primes.end());
  if (distinct.size() != primes.size()) throw DomainError("sweep primes must be distinct");
  for (auto p : distinct) {
    if (!exact::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  }
  if (options.q_max < 2) throw DomainError("q_max must be at least 2");

  const std::vector<std::uint32_t> work(distinct.begin(), distinct.end());
  std::vector<PrimeOutcome> outcomes(work.size());
  std::vector<std::exception_ptr> failures(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        outcomes[i] = run_prime(ideal, work[i], options);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(work.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  // Rethrow the failure of the smallest prime, independent of scheduling.
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  SweepResult result;
  for (auto& o : outcomes) {
    result.records.insert(result.records.end(), o.records.begin(), o.records.end());
    result.warnings.insert(result.warnings.end(), o.warnings.begin(), o.warnings.end());
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const SweepRecord& a, const SweepRecord& b) { return std::tie(a.p, a.e) < std::tie(b.p, b.e); });
  std::sort(result.warnings.begin(), result.warnings.end(),
            [](const SweepWarning& a, const SweepWarning& b) { return std::tie(a.p, a.e) < std::tie(b.p, b.e); });
  return result;
}

ConvergenceReport convergence_report(std::vector<SweepRecord> records, std::optional<Rational> target,
                                     std::vector<SweepWarning> warnings) {
  if (records.empty()) throw DomainError("empty report");
  std::sort(records.begin(), records.end(),
            [](const SweepRecord& a, const SweepRecord& b) { return std::tie(a.p, a.e) < std::tie(b.p, b.e); });

  ConvergenceReport report;
  report.target_lct = target;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].p == records[i - 1].p && records[i].low < records[i - 1].low) report.monotone_ok = false;
  }
  if (target) {
    Rational gap = *target - records.front().low;
    bool below = true;
    for (const auto& r : records) {
      gap = max(gap, *target - r.low);
      if (r.low > *target) below = false;
    }
    report.max_gap = gap;
    report.below_lct_ok = below;

    // Last record of each prime carries its largest e.
    std::map<std::uint32_t, const SweepRecord*> deepest;
    for (const auto& r : records) deepest[r.p] = &r;
    const SweepRecord& small = *deepest.begin()->second;
    const SweepRecord& large = *deepest.rbegin()->second;
    const Rational widths = (small.high - small.low) + (large.high - large.low);
    report.trend_ok = (*target - large.low) <= (*target - small.low) + widths;
  }
  report.records = std::move(records);
  report.warnings = std::move(warnings);
  return report;
}

int report_exit_code(const ConvergenceReport& report) {
  if (!report.monotone_ok || report.below_lct_ok == false) return 3;
  const bool capacity = std::any_of(report.warnings.begin(), report.warnings.end(),
                                    [](const SweepWarning& w) { return w.kind == WarningKind::Capacity; });
  return capacity ? 2 : 0;
}

std::string render(const ConvergenceReport& report, Format format) {
  if (format == Format::Csv) {
    std::string out = "p,e,nu,low,high,elapsed_ms\n";
    for (const auto& r : report.records) {
      out += std::to_string(r.p) + "," + std::to_string(r.e) + "," + std::to_string(r.nu) + "," +
             r.low.to_string() + "," + r.high.to_string() + "," + std::to_string(r.elapsed_ms) + "\n";
    }
    return out;
  }
  nlohmann::ordered_json doc;
  if (report.target_lct) doc["target_lct"] = report.target_lct->to_string();
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    doc["records"].push_back({{"p", r.p},
                              {"e", r.e},
                              {"nu", r.nu},
                              {"low", r.low.to_string()},
                              {"high", r.high.to_string()},
                              {"elapsed_ms", r.elapsed_ms}});
  }
  doc["warnings"] = nlohmann::ordered_json::array();
  for (const auto& w : report.warnings) {
    doc["warnings"].push_back({{"p", w.p}, {"e", w.e}, {"kind", to_string(w.kind)}, {"message", w.message}});
  }
  if (report.max_gap) doc["max_gap"] = report.max_gap->to_string();
  doc["monotone_ok"] = report.monotone_ok;
  if (report.below_lct_ok) doc["below_lct_ok"] = *report.below_lct_ok;
  if (report.trend_ok) doc["trend_ok"] = *report.trend_ok;
  return doc.dump(2) + "\n";
}

void emit(const ConvergenceReport& report, Format format, const std::string& path) {
  const std::string text = render(report, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t k = std::max<std::uint32_t>(lo, 2); k <= hi; ++k) {
    if (exact::is_prime(k)) out.push_back(static_cast<std::uint32_t>(k));
  }
  return out;
}

}  // namespace fptlct
