#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lmsearch/domain.hpp"

namespace lmsearch {

// Structural knobs for instance generation. The defaults match the reference
// setups; dmax/qmax exist so test suites can keep instances oracle-sized.
struct GenOptions {
  unsigned trunks = 3;           // coconut: number of trunks b (2..8)
  std::uint32_t depth_max = 10000;  // chain d / coconut D upper bound
  std::uint32_t q_max = 20;      // coconut branch-depth clamp
  std::uint32_t scramble = 30;   // tiles: random blank moves from the goal
  std::uint32_t pancakes = 10;   // pancake stack size (2..16)
  bool random_costs = false;     // tiles/pancake: random operator costs, h = 0
};

// Seeded single-instance constructors. Structure is sampled from the seed;
// describe() emits the resolved parameters so instances round-trip through
// their canonical line.
DomainPtr make_chain(std::uint64_t seed, const GenOptions& opt = {});
DomainPtr make_chain_fixed(std::uint64_t seed, std::uint32_t depth);
DomainPtr make_coconut(std::uint64_t seed, const GenOptions& opt = {});
// Explicit coconut shape; q <= 31 and pos < b^q. Rejects b < 2.
DomainPtr make_coconut_fixed(std::uint64_t seed, unsigned b, std::uint32_t trunk_depth,
                             std::uint32_t q, unsigned coconut_trunk, std::uint64_t pos);
DomainPtr make_tiles(std::uint64_t seed, const GenOptions& opt = {});
DomainPtr make_pancake(std::uint64_t seed, const GenOptions& opt = {});

// Parses the canonical one-line form "domain:<name>;seed:<u64>;params:<k=v,...>".
// Unknown domain names or malformed lines raise std::invalid_argument.
DomainPtr parse_instance(const std::string& line);

// Uniform per-operator costs in [1, 10000], one fixed cost per operator label.
std::vector<std::uint32_t> sample_operator_costs(unsigned count, std::uint64_t seed);

}  // namespace lmsearch
