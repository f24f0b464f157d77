#pragma once

// Scanning a numbered space of independent test cases. The serial loop is
// the reference; the OpenMP kernel must produce the same summary.

#include <cstdint>
#include <limits>
#include <optional>

namespace clonal {

enum class Execution { Serial, Parallel };

struct CaseOutcome {
  bool pass = true;
  bool note = false;  // informational flag carried alongside pass/fail
};

struct ScanSummary {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::uint64_t notes = 0;
  std::optional<std::uint64_t> first_failure;
  std::optional<std::uint64_t> first_note;

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

namespace detail {

template <class Check>
CaseOutcome run_case(Check& check, std::uint64_t i) {
  try {
    return check(i);
  } catch (...) {
    // An exception inside a check is a failure of that case.
    return {false, false};
  }
}

}  // namespace detail

template <class Check>
ScanSummary scan_serial(std::uint64_t count, Check&& check) {
  ScanSummary s;
  s.cases = count;
  for (std::uint64_t i = 0; i < count; ++i) {
    CaseOutcome o = detail::run_case(check, i);
    if (!o.pass) {
      ++s.failures;
      if (!s.first_failure) s.first_failure = i;
    }
    if (o.note) {
      ++s.notes;
      if (!s.first_note) s.first_note = i;
    }
  }
  return s;
}

template <class Check>
ScanSummary scan_parallel(std::uint64_t count, Check&& check) {
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t failures = 0, notes = 0, first_failure = none, first_note = none;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : failures, notes) reduction(min : first_failure, first_note)
  for (std::int64_t j = 0; j < n; ++j) {
    const auto i = static_cast<std::uint64_t>(j);
    CaseOutcome o = detail::run_case(check, i);
    if (!o.pass) {
      ++failures;
      if (i < first_failure) first_failure = i;
    }
    if (o.note) {
      ++notes;
      if (i < first_note) first_note = i;
    }
  }
  ScanSummary s;
  s.cases = count;
  s.failures = failures;
  s.notes = notes;
  if (first_failure != none) s.first_failure = first_failure;
  if (first_note != none) s.first_note = first_note;
  return s;
}

template <class Check>
ScanSummary scan(Execution exec, std::uint64_t count, Check&& check) {
  return exec == Execution::Serial ? scan_serial(count, check) : scan_parallel(count, check);
}

}  // namespace clonal
