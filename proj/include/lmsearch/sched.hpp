#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <memory>

#include "lmsearch/common.hpp"

namespace lmsearch {

// Largest power of two dividing j (integer sequence A6519), computed as
// ((j XOR (j-1)) + 1) / 2. Requires 1 <= j < 2^63.
inline std::uint64_t a6519(std::uint64_t j) {
  if (j == 0 || j >= (std::uint64_t{1} << 63)) throw std::invalid_argument("a6519: j out of range");
  return ((j ^ (j - 1)) + 1) >> 1;
}

// The exponent k with a6519(j) == 2^k.
inline unsigned a6519_log2(std::uint64_t j) {
  return static_cast<unsigned>(std::countr_zero(a6519(j)));
}

// Exhaustively checks, for every j <= max_j and every k <= log2(max_j), that
// a6519(j) == 2^k exactly when j/2^k is an odd integer, and that the number
// of such j is floor((max_j/2^k + 1) / 2).
bool verify_sched_index(std::uint64_t max_j);

enum class StepStatus : std::uint8_t { kRunning, kHalted, kSolution };

// Outcome of granting a program some step allowance. steps_used <= allowance;
// a program that halts or solves may consume fewer steps than offered.
struct StepResult {
  std::uint64_t steps_used = 0;
  StepStatus status = StepStatus::kRunning;
};

// A deterministic resumable program. State persists between run() calls;
// halted or solved programs are never resumed.
class Program {
 public:
  virtual ~Program() = default;
  virtual StepResult run(std::uint64_t allowance) = 0;
};

// Lazily supplies program k; returning nullptr means no such program exists.
using ProgramFactory = std::function<std::unique_ptr<Program>(unsigned k)>;

struct ScheduleResult {
  bool solved = false;
  unsigned solver_index = 0;       // index k of the program that solved
  std::uint64_t total_steps = 0;   // steps actually consumed by all programs
  std::uint64_t blocks = 0;        // blocks (UDS) or segments (UBS) dispatched
};

// Observers used by tests; called for every dispatched block/segment.
using UdsObserver = std::function<void(std::uint64_t j, unsigned k)>;
using UbsObserver = std::function<void(unsigned k, std::uint64_t n, std::uint64_t key)>;

// Uniform Doubling Scheduler: block j runs program k = log2(a6519(j)) for
// 2^k steps. Stops at the first solution or after max_blocks blocks.
ScheduleResult uds_run(const ProgramFactory& factory, std::uint64_t max_blocks,
                       const UdsObserver& observer = nullptr);

// Segment cost table T(k, n) for the Uniform Budgeted Scheduler, with
// T(k, 0) = 0. Must be strictly increasing in n for fixed k and nondecreasing
// in k for n = 1; ubs_run validates this on the values it touches.
struct SegmentCostTable {
  std::function<std::uint64_t(unsigned k, std::uint64_t n)> cost;
  std::uint64_t operator()(unsigned k, std::uint64_t n) const { return n == 0 ? 0 : cost(k, n); }
};

// Uniform Budgeted Scheduler: keeps segment nodes (k, n) in a min-priority
// queue keyed by T(k, n) (ties: smaller k, then smaller n) and runs program k
// for T(k, n) - T(k, n-1) steps per extracted segment. Programs are indexed
// from k = 1. Returns with solved == false when the queue empties (every
// program halted without a solution) or after max_segments segments.
ScheduleResult ubs_run(const ProgramFactory& factory, const SegmentCostTable& table,
                       std::uint64_t max_segments, const UbsObserver& observer = nullptr);

}  // namespace lmsearch
