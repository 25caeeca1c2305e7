#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/exact.hpp"
#include "core/frobenius.hpp"
#include "core/reduction.hpp"

namespace fptlct {

struct SweepRecord {
  std::uint32_t p;
  std::uint32_t e;
  std::uint64_t nu;
  Rational low;
  Rational high;
  std::uint64_t elapsed_ms;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

enum class WarningKind { Degenerate, Capacity, OutOfBudget };

struct SweepWarning {
  std::uint32_t p;
  std::uint32_t e;  // 0 when the whole prime was skipped
  WarningKind kind;
  std::string message;

  friend bool operator==(const SweepWarning&, const SweepWarning&) = default;
};

std::string to_string(WarningKind kind);

struct SweepOptions {
  std::uint64_t q_max = 10000;
  unsigned jobs = 1;
  // Off by default so reports are byte-stable; elapsed_ms is then 0.
  bool timing = false;
  FrobeniusOptions frobenius;
};

struct SweepResult {
  std::vector<SweepRecord> records;  // sorted by (p, e)
  std::vector<SweepWarning> warnings;  // sorted by (p, e)
};

// One record per (p, e) for e = 1 .. largest e with p^e <= q_max.
// Degenerate primes and capacity failures become warnings.
SweepResult sweep(const IntegerIdeal& ideal, const std::vector<std::uint32_t>& primes, const SweepOptions& options);

struct ConvergenceReport {
  std::optional<Rational> target_lct;
  std::vector<SweepRecord> records;
  std::vector<SweepWarning> warnings;
  std::optional<Rational> max_gap;  // max of target - low
  bool monotone_ok = true;
  std::optional<bool> below_lct_ok;
  // Gap at the largest prime <= gap at the smallest prime plus both widths,
  // each prime represented by its largest e.
  std::optional<bool> trend_ok;
};

ConvergenceReport convergence_report(std::vector<SweepRecord> records, std::optional<Rational> target,
                                     std::vector<SweepWarning> warnings = {});

// 3 if a hard invariant failed, 2 if only capacity warnings occurred, else 0.
int report_exit_code(const ConvergenceReport& report);

enum class Format { Csv, Json };

std::string render(const ConvergenceReport& report, Format format);
void emit(const ConvergenceReport& report, Format format, const std::string& path);

// Primes in [lo, hi], ascending.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

}  // namespace fptlct
