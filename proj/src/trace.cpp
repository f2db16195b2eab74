#include "lmsearch/trace.hpp"

#include <stdexcept>

namespace lmsearch {

void count_expansion(RunTrace& trace, const CallRecord& record) {
  if (!(record.theta_minus <= record.theta))
    throw std::invalid_argument("count_expansion: theta_minus exceeds theta");
  // Branch-and-bound tightening can pull theta_plus below the entry theta on
  // calls that returned a solution; all other results must bracket theta.
  if (record.result != ResultKind::kSolution && !(record.theta < record.theta_plus))
    throw std::invalid_argument("count_expansion: theta_plus must exceed theta");
  trace.calls.push_back(record);
  trace.total_expansions += record.n_used;
}

}  // namespace lmsearch
