#include "lmsearch/deepening.hpp"

#include <vector>

namespace lmsearch {

DeepeningOutcome deepening(const Domain& domain, const SearchNode& start, Cost theta,
                           Budget budget, FringeSink* fringe, const DeepeningLimits& limits) {
  Cost bound = theta;
  bool have_best = false;
  SearchNode best{};
  std::uint64_t n_used = 0;
  Cost tminus = kNegInf;
  Cost tplus = kInf;

  // Explicit DFS stack; frames index into a shared child arena so that memory
  // stays linear in the search depth.
  struct Frame {
    std::size_t begin;
    std::size_t end;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::vector<SearchNode> arena;

  // Returns true when the budget ran out at the visited node.
  auto visit = [&](const SearchNode& node) -> bool {
    Cost c = node.f;
    if (c > bound) {
      if (c < tplus) tplus = c;
      if (fringe != nullptr) fringe->on_fringe(c);
      return false;
    }
    if (domain.is_goal(node)) {
      if (c > tminus) tminus = c;
      if (!have_best || c < best.f) {
        have_best = true;
        best = node;
        bound = c;  // branch and bound
      }
      return false;
    }
    if (budget != kUnlimited && n_used >= budget) {
      if (c > tminus) tminus = c;
      return true;
    }
    // Node expansion.
    ++n_used;
    if (c > tminus) tminus = c;
    if (stack.size() >= limits.max_stack_depth)
      throw DepthLimitError("deepening: explored path exceeds the stack depth limit");
    std::size_t begin = arena.size();
    domain.children(node, arena);
    stack.push_back(Frame{begin, arena.size(), begin});
    return false;
  };

  bool exceeded = visit(start);
  while (!exceeded && !stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.end) {
      arena.resize(top.begin);
      stack.pop_back();
      continue;
    }
    SearchNode child = arena[top.next++];
    exceeded = visit(child);
  }

  DeepeningOutcome out;
  out.n_used = n_used;
  out.theta_minus = tminus;
  out.theta_plus = tplus;
  if (exceeded) {
    out.result = ResultKind::kBudgetExceeded;
  } else if (have_best) {
    out.result = ResultKind::kSolution;
    out.solution = best;
  } else {
    out.result = ResultKind::kNone;
  }
  return out;
}

}  // namespace lmsearch
