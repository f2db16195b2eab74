#pragma once

#include <cstdint>

#include "lmsearch/domain.hpp"
#include "lmsearch/trace.hpp"

namespace lmsearch {

// Result of one budgeted depth-first pass.
//
//   result == kSolution       an optimal descendant solution within the bound
//   result == kNone           no solution with f <= theta exists below start
//   result == kBudgetExceeded the expansion budget ran out
//
// theta_minus is the maximum cost (<= theta) among expanded nodes, including
// the node at which an exhausted budget stopped the search; theta_plus is the
// minimum cost among visited nodes whose cost exceeded the current bound.
struct DeepeningOutcome {
  ResultKind result = ResultKind::kNone;
  SearchNode solution{};       // valid only when result == kSolution
  std::uint64_t n_used = 0;
  Cost theta_minus = kNegInf;
  Cost theta_plus = kInf;
};

// Receives the f-value of every visited node whose cost exceeded the bound
// (the fringe). Used by IDA*_CR to pick its next threshold.
class FringeSink {
 public:
  virtual void on_fringe(Cost f) = 0;

 protected:
  ~FringeSink() = default;
};

struct DeepeningLimits {
  std::size_t max_stack_depth = 1'000'000;
};

// Depth-first search from start with cost bound theta and an expansion
// budget, with branch-and-bound tightening of the bound when a solution is
// found. Children are explored left to right in the domain's order; a node is
// counted as expanded exactly when its children are generated. Throws
// DepthLimitError if the explored path outgrows limits.max_stack_depth.
DeepeningOutcome deepening(const Domain& domain, const SearchNode& start, Cost theta,
                           Budget budget, FringeSink* fringe = nullptr,
                           const DeepeningLimits& limits = {});

}  // namespace lmsearch
