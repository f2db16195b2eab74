#include "lmsearch/sched.hpp"

#include <queue>
#include <tuple>
#include <vector>

namespace lmsearch {

bool verify_sched_index(std::uint64_t max_j) {
  if (max_j == 0) return false;
  unsigned max_k = 0;
  while ((std::uint64_t{1} << (max_k + 1)) <= max_j) ++max_k;

  std::vector<std::uint64_t> counts(max_k + 1, 0);
  for (std::uint64_t j = 1; j <= max_j; ++j) {
    std::uint64_t a = a6519(j);
    if ((a & (a - 1)) != 0) return false;  // must be a power of two
    if (j % a != 0) return false;          // must divide j
    unsigned k = static_cast<unsigned>(std::countr_zero(a));
    // a6519(j) == 2^k iff j / 2^k is odd.
    if ((j >> k) % 2 != 1) return false;
    for (unsigned kk = 0; kk <= max_k; ++kk) {
      bool claimed = (j % (std::uint64_t{1} << kk) == 0) && ((j >> kk) % 2 == 1);
      if (claimed != (kk == k)) return false;
    }
    counts[k] += 1;
  }
  for (unsigned k = 0; k <= max_k; ++k) {
    std::uint64_t expected = (max_j / (std::uint64_t{1} << k) + 1) / 2;
    if (counts[k] != expected) return false;
  }
  return true;
}

namespace {

struct Slot {
  std::unique_ptr<Program> program;
  bool finished = false;  // halted or solved; never resumed
};

}  // namespace

ScheduleResult uds_run(const ProgramFactory& factory, std::uint64_t max_blocks,
                       const UdsObserver& observer) {
  ScheduleResult result;
  std::vector<Slot> slots;

  for (std::uint64_t j = 1; max_blocks == 0 || j <= max_blocks; ++j) {
    unsigned k = a6519_log2(j);
    if (k >= slots.size()) slots.resize(k + 1);
    Slot& slot = slots[k];
    if (slot.program == nullptr && !slot.finished) {
      slot.program = factory(k);
      if (slot.program == nullptr) slot.finished = true;
    }
    result.blocks += 1;
    if (observer) observer(j, k);
    if (slot.finished) continue;

    StepResult step = slot.program->run(std::uint64_t{1} << k);
    result.total_steps += step.steps_used;
    if (step.status == StepStatus::kSolution) {
      result.solved = true;
      result.solver_index = k;
      return result;
    }
    if (step.status == StepStatus::kHalted) {
      slot.finished = true;
      slot.program.reset();
    }
  }
  return result;
}

ScheduleResult ubs_run(const ProgramFactory& factory, const SegmentCostTable& table,
                       std::uint64_t max_segments, const UbsObserver& observer) {
  ScheduleResult result;

  // (key, k, n); smallest key first, ties by smaller k then smaller n.
  using Entry = std::tuple<std::uint64_t, unsigned, std::uint64_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  std::vector<Slot> slots;

  auto slot_for = [&](unsigned k) -> Slot& {
    if (k >= slots.size()) slots.resize(k + 1);
    return slots[k];
  };

  auto push_segment = [&](unsigned k, std::uint64_t n) {
    std::uint64_t key = table(k, n);
    std::uint64_t prev = table(k, n - 1);
    if (!(key > prev)) throw std::invalid_argument("ubs_run: T(k, n) must be strictly increasing in n");
    if (n == 1 && k >= 2) {
      std::uint64_t below = table(k - 1, 1);
      if (key < below) throw std::invalid_argument("ubs_run: T(k, 1) must be nondecreasing in k");
    }
    queue.emplace(key, k, n);
  };

  push_segment(1, 1);
  std::uint64_t last_key = 0;
  while (!queue.empty()) {
    if (max_segments != 0 && result.blocks >= max_segments) return result;
    auto [key, k, n] = queue.top();
    queue.pop();
    if (key < last_key) throw std::logic_error("ubs_run: extraction keys regressed");
    last_key = key;

    result.blocks += 1;
    if (observer) observer(k, n, key);

    Slot& slot = slot_for(k);
    bool exists = true;
    if (n == 1 && slot.program == nullptr && !slot.finished) {
      slot.program = factory(k);
      if (slot.program == nullptr) {
        slot.finished = true;
        exists = false;  // end of the program family; stop chaining
      }
    }

    bool halted = slot.finished;
    if (!slot.finished) {
      StepResult step = slot.program->run(table(k, n) - table(k, n - 1));
      result.total_steps += step.steps_used;
      if (step.status == StepStatus::kSolution) {
        result.solved = true;
        result.solver_index = k;
        return result;
      }
      if (step.status == StepStatus::kHalted) {
        slot.finished = true;
        slot.program.reset();
        halted = true;
      }
    }
    if (!halted) push_segment(k, n + 1);
    if (n == 1 && exists) push_segment(k + 1, 1);
  }
  return result;
}

}  // namespace lmsearch
