#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lmsearch/common.hpp"

namespace lmsearch {

// One node of the search tree: an opaque domain state plus its f-cost.
// f is nondecreasing from parent to child for every Domain in this library.
struct SearchNode {
  std::array<std::uint64_t, 2> state{0, 0};
  Cost f = 0;
  std::uint32_t depth = 0;
};

// Immutable search-tree contract. Instances are safely shareable read-only
// across concurrent searches; children() and is_goal() are pure functions of
// the node state and must produce children in a fixed, repeatable order.
class Domain {
 public:
  virtual ~Domain() = default;

  virtual SearchNode root() const = 0;

  // Appends the children of n to out (does not clear it).
  virtual void children(const SearchNode& n, std::vector<SearchNode>& out) const = 0;

  virtual bool is_goal(const SearchNode& n) const = 0;

  // Upper bound on the number of children of any node.
  virtual unsigned branching_bound() const = 0;

  // Costs are stored as integers scaled by this factor; reports divide by it.
  virtual double cost_scale() const { return 1.0; }

  // Canonical one-line instance form "domain:<name>;seed:<u64>;params:<k=v,...>".
  virtual std::string describe() const { return "domain:anonymous;seed:0;params:"; }
};

using DomainPtr = std::shared_ptr<const Domain>;

// View of a domain with every f shifted by a constant. Child ordering and the
// goal predicate are untouched, so deepening expands nodes in the same order.
class ShiftedDomain final : public Domain {
 public:
  ShiftedDomain(DomainPtr inner, Cost shift) : inner_(std::move(inner)), shift_(shift) {}

  SearchNode root() const override {
    SearchNode n = inner_->root();
    n.f += shift_;
    return n;
  }

  void children(const SearchNode& n, std::vector<SearchNode>& out) const override {
    SearchNode un = n;
    un.f -= shift_;
    std::size_t first = out.size();
    inner_->children(un, out);
    for (std::size_t i = first; i < out.size(); ++i) out[i].f += shift_;
  }

  bool is_goal(const SearchNode& n) const override {
    SearchNode un = n;
    un.f -= shift_;
    return inner_->is_goal(un);
  }

  unsigned branching_bound() const override { return inner_->branching_bound(); }
  double cost_scale() const override { return inner_->cost_scale(); }
  std::string describe() const override { return inner_->describe(); }
  Cost shift() const { return shift_; }

 private:
  DomainPtr inner_;
  Cost shift_;
};

// Translates costs so that f(root) becomes exactly 1: f' = f + 1 - f(root).
// The node-expansion order of deepening is invariant under this translation.
DomainPtr normalize_root_cost(DomainPtr domain);

}  // namespace lmsearch
