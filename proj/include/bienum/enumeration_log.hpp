#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bienum/bifront.hpp"
#include "bienum/oracle.hpp"
#include "bienum/point.hpp"

namespace bienum {

/// One emission of an enumeration run: the point, the cumulative oracle
/// effort spent when it appeared, and an optional monotonic timestamp.
/// Counters are relative to the start of the run, not the oracle's lifetime.
struct EmitEvent {
  std::uint64_t index = 0;  // 1-based emission index
  Point point;
  OracleCallCounts calls;
  std::uint64_t t_mono_ns = 0;  // 0 unless timing was requested
};

using EmitFn = std::function<void(const EmitEvent&)>;

/// Trace of a full enumeration run.  Timestamps are informational; every
/// delay assertion in this library uses the call counters.
struct EnumerationLog {
  std::vector<EmitEvent> events;
  OracleCallCounts total_calls;
  std::uint64_t loop_iterations = 0;

  /// Largest number of lex calls in any inter-emission gap, including the
  /// gap before the first emission and the tail after the last one.
  std::uint64_t max_interemission_lex() const {
    std::uint64_t worst = 0;
    std::uint64_t prev = 0;
    for (const EmitEvent& ev : events) {
      worst = std::max(worst, ev.calls.lex - prev);
      prev = ev.calls.lex;
    }
    worst = std::max(worst, total_calls.lex - prev);
    return worst;
  }
};

struct EnumerationResult {
  BiFront front;
  EnumerationLog log;
};

namespace detail {

/// Shared per-run bookkeeping: snapshots the oracle counters at start so
/// events report run-relative effort, stamps events, and forwards them to
/// the caller's callback.
class RunRecorder {
 public:
  RunRecorder(const OracleCallCounts& live, EmitFn on_emit, bool record_time)
      : live_(live),
        baseline_(live),
        on_emit_(std::move(on_emit)),
        record_time_(record_time),
        start_(std::chrono::steady_clock::now()) {}

  OracleCallCounts relative_calls() const {
    return OracleCallCounts{live_.ws - baseline_.ws, live_.lex - baseline_.lex,
                            live_.eps - baseline_.eps};
  }

  void emit(EnumerationLog& log, const Point& y) {
    EmitEvent ev;
    ev.index = log.events.size() + 1;
    ev.point = y;
    ev.calls = relative_calls();
    if (record_time_) {
      const auto now = std::chrono::steady_clock::now();
      ev.t_mono_ns = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(now - start_)
              .count());
    }
    log.events.push_back(ev);
    if (on_emit_) {
      on_emit_(log.events.back());
    }
  }

  void finish(EnumerationLog& log) const { log.total_calls = relative_calls(); }

 private:
  const OracleCallCounts& live_;
  OracleCallCounts baseline_;
  EmitFn on_emit_;
  bool record_time_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

}  // namespace bienum
