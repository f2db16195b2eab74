#pragma once

#include <cstdint>
#include <vector>

#include "lmsearch/common.hpp"

namespace lmsearch {

enum class ResultKind : std::uint8_t { kSolution, kNone, kBudgetExceeded };

// Which branch of the threshold-selection logic produced a call's theta.
enum class CallPhase : std::uint8_t { kInitial, kDoubled, kHalved };

// One deepening call made by a solver.
struct CallRecord {
  Cost theta = 0;
  Budget budget = kUnlimited;
  ResultKind result = ResultKind::kNone;
  std::uint64_t n_used = 0;
  Cost theta_minus = kNegInf;
  Cost theta_plus = kInf;

  std::uint64_t index = 0;     // call number, or block index j for the ZZZ solvers
  std::uint32_t iteration = 0; // iteration/program index k where meaningful
  CallPhase phase = CallPhase::kInitial;

  // Bracket state at the time of the call (Zoomer and optimized ZZZ only).
  Cost lower = kNegInf;
  Cost upper = kInf;
  Cost up_min = kNegInf;
};

struct RunTrace {
  std::vector<CallRecord> calls;
  std::uint64_t total_expansions = 0;
};

// Appends the record and accounts its expansions. Rejects records whose
// bounds are inconsistent (requires theta_minus <= theta < theta_plus).
void count_expansion(RunTrace& trace, const CallRecord& record);

}  // namespace lmsearch
