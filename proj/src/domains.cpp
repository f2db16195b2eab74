#include "lmsearch/domains.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lmsearch {

namespace {

constexpr std::uint64_t kBoardSalt = 0xB0A4D5EEDull;
constexpr std::uint64_t kCostSalt = 0xC0575EEDull;

std::string format_line(const char* name, std::uint64_t seed, const std::string& params) {
  std::ostringstream os;
  os << "domain:" << name << ";seed:" << seed << ";params:" << params;
  return os.str();
}

// ---------------------------------------------------------------------------
// Chain: branching factor 1, f(root) = 1, f grows by 1 per edge, goal at d+1.
// ---------------------------------------------------------------------------

class ChainDomain final : public Domain {
 public:
  ChainDomain(std::uint64_t seed, std::uint32_t depth) : seed_(seed), depth_(depth) {}

  SearchNode root() const override { return SearchNode{{0, 0}, 1.0, 0}; }

  void children(const SearchNode& n, std::vector<SearchNode>& out) const override {
    std::uint64_t i = n.state[0];
    if (i < depth_) out.push_back(SearchNode{{i + 1, 0}, n.f + 1.0, n.depth + 1});
  }

  bool is_goal(const SearchNode& n) const override { return n.state[0] == depth_; }
  unsigned branching_bound() const override { return 1; }

  std::string describe() const override {
    return format_line("chain", seed_, "d=" + std::to_string(depth_));
  }

 private:
  std::uint64_t seed_;
  std::uint32_t depth_;
};

// ---------------------------------------------------------------------------
// Coconut: b trunks of height D; the searcher starts below the coconut trunk
// and every trunk node also offers (b-1) expensive jumps onto the sibling
// trunks, whose subtrees act as decoys. Costs are stored x10 so that branch
// steps (0.1) stay integral: climb = 10, jump = 20*D, branch step = 1.
// The coconut hangs in the start trunk's branch tree at depth q, position pos.
// ---------------------------------------------------------------------------

enum CoconutKind : std::uint64_t { kCocoRoot = 0, kCocoTrunk = 1, kCocoBranch = 2 };

class CoconutDomain final : public Domain {
 public:
  CoconutDomain(std::uint64_t seed, unsigned b, std::uint32_t depth, std::uint32_t q,
                unsigned trunk, std::uint64_t pos)
      : seed_(seed), b_(b), depth_(depth), q_(q), trunk_(trunk), pos_(pos) {
    if (b_ < 2) throw std::invalid_argument("coconut: need at least 2 trunks");
    if (b_ > 8) throw std::invalid_argument("coconut: at most 8 trunks supported");
    if (trunk_ >= b_) throw std::invalid_argument("coconut: coconut trunk out of range");
    if (q_ > 31) throw std::invalid_argument("coconut: branch depth too large");
    if (depth_ == 0 || depth_ > 1000000) throw std::invalid_argument("coconut: bad trunk depth");
    std::uint64_t span = 1;
    for (std::uint32_t i = 0; i < q_; ++i) span *= b_;
    if (pos_ >= span) throw std::invalid_argument("coconut: branch position out of range");
  }

  SearchNode root() const override { return SearchNode{{pack(kCocoRoot, 0, 0, 0), 0}, 10.0, 0}; }

  void children(const SearchNode& n, std::vector<SearchNode>& out) const override {
    auto [kind, trunk, height, bdepth] = unpack(n.state[0]);
    switch (kind) {
      case kCocoRoot:
        // The ground touches only the trunk the searcher stands under.
        out.push_back(SearchNode{{pack(kCocoTrunk, trunk_, 1, 0), 0}, n.f + 10.0, n.depth + 1});
        break;
      case kCocoTrunk:
        if (height < depth_) {
          out.push_back(SearchNode{{pack(kCocoTrunk, trunk, height + 1, 0), 0}, n.f + 10.0, n.depth + 1});
          for (unsigned v = 0; v < b_; ++v) {
            if (v == trunk) continue;
            out.push_back(
                SearchNode{{pack(kCocoTrunk, v, height, 0), 0}, n.f + 20.0 * depth_, n.depth + 1});
          }
        } else {
          for (unsigned i = 0; i < b_; ++i)
            out.push_back(SearchNode{{pack(kCocoBranch, trunk, 0, 1), i}, n.f + 1.0, n.depth + 1});
        }
        break;
      case kCocoBranch:
      default:
        for (unsigned i = 0; i < b_; ++i)
          out.push_back(SearchNode{{pack(kCocoBranch, trunk, 0, bdepth + 1), n.state[1] * b_ + i},
                                   n.f + 1.0, n.depth + 1});
        break;
    }
  }

  bool is_goal(const SearchNode& n) const override {
    auto [kind, trunk, height, bdepth] = unpack(n.state[0]);
    if (q_ == 0) return kind == kCocoTrunk && trunk == trunk_ && height == depth_;
    return kind == kCocoBranch && trunk == trunk_ && bdepth == q_ && n.state[1] == pos_;
  }

  unsigned branching_bound() const override { return b_; }
  double cost_scale() const override { return 10.0; }

  std::string describe() const override {
    std::ostringstream os;
    os << "b=" << b_ << ",D=" << depth_ << ",q=" << q_ << ",t=" << trunk_ << ",pos=" << pos_;
    return format_line("coconut", seed_, os.str());
  }

  // Cost of the coconut itself: D climbs plus q branch steps from the root.
  Cost goal_cost() const { return 10.0 + 10.0 * depth_ + 1.0 * q_; }

 private:
  static std::uint64_t pack(std::uint64_t kind, std::uint64_t trunk, std::uint64_t height,
                            std::uint64_t bdepth) {
    return kind | (trunk << 2) | (height << 6) | (bdepth << 32);
  }
  static std::tuple<std::uint64_t, unsigned, std::uint32_t, std::uint32_t> unpack(std::uint64_t s) {
    return {s & 0x3, static_cast<unsigned>((s >> 2) & 0xF),
            static_cast<std::uint32_t>((s >> 6) & 0x3FFFFFF),
            static_cast<std::uint32_t>(s >> 32)};
  }

  std::uint64_t seed_;
  unsigned b_;
  std::uint32_t depth_;
  std::uint32_t q_;
  unsigned trunk_;
  std::uint64_t pos_;
};

// ---------------------------------------------------------------------------
// 8-puzzle, Manhattan-distance heuristic (or h = 0 with random operator
// costs). Board packed 4 bits per cell, blank pos and last move alongside.
// Tree search with the immediate undo move excluded.
// ---------------------------------------------------------------------------

class TilesDomain final : public Domain {
 public:
  static constexpr int kNoOp = 7;
  // Blank moves: up, down, left, right.
  static constexpr int kDelta[4] = {-3, 3, -1, 1};
  static constexpr int kInverse[4] = {1, 0, 3, 2};

  TilesDomain(std::uint64_t seed, std::uint32_t scramble, bool random_costs)
      : seed_(seed), scramble_(scramble), random_costs_(random_costs) {
    if (random_costs_) {
      op_costs_ = sample_operator_costs(4, seed ^ kCostSalt);
    } else {
      op_costs_.assign(4, 1);
    }
    start_ = scrambled_board(seed ^ kBoardSalt, scramble);
  }

  SearchNode root() const override {
    Cost h = random_costs_ ? 0.0 : manhattan(start_);
    return SearchNode{{start_, 0}, h, 0};
  }

  void children(const SearchNode& n, std::vector<SearchNode>& out) const override {
    std::uint64_t board = n.state[0];
    int blank = blank_of(board);
    int last = last_op(board);
    Cost g = random_costs_ ? n.f : n.f - manhattan(board);
    for (int op = 0; op < 4; ++op) {
      if (last != kNoOp && op == kInverse[last]) continue;
      if (!legal(blank, op)) continue;
      std::uint64_t next = apply(board, blank, op);
      Cost f = g + op_costs_[op] + (random_costs_ ? 0.0 : manhattan(next));
      out.push_back(SearchNode{{next, 0}, f, n.depth + 1});
    }
  }

  bool is_goal(const SearchNode& n) const override { return cells_of(n.state[0]) == kGoalCells; }
  unsigned branching_bound() const override { return 4; }

  std::string describe() const override {
    std::ostringstream os;
    os << "scramble=" << scramble_ << ",rc=" << (random_costs_ ? 1 : 0);
    return format_line("tiles", seed_, os.str());
  }

 private:
  // Goal: tiles 1..8 in cells 0..7, blank in cell 8.
  static constexpr std::uint64_t kGoalCells = 0x087654321ull;

  static std::uint64_t cells_of(std::uint64_t board) { return board & 0xFFFFFFFFFull; }
  static int blank_of(std::uint64_t board) { return static_cast<int>((board >> 36) & 0xF); }
  static int last_op(std::uint64_t board) { return static_cast<int>((board >> 40) & 0x7); }
  static int cell(std::uint64_t board, int i) { return static_cast<int>((board >> (4 * i)) & 0xF); }

  static bool legal(int blank, int op) {
    switch (op) {
      case 0: return blank >= 3;
      case 1: return blank < 6;
      case 2: return blank % 3 != 0;
      default: return blank % 3 != 2;
    }
  }

  static std::uint64_t apply(std::uint64_t board, int blank, int op) {
    int from = blank + kDelta[op];  // tile slides from here into the blank
    std::uint64_t tile = (board >> (4 * from)) & 0xF;
    std::uint64_t cells = cells_of(board);
    cells &= ~(0xFull << (4 * from));
    cells &= ~(0xFull << (4 * blank));
    cells |= tile << (4 * blank);
    return cells | (static_cast<std::uint64_t>(from) << 36)
                 | (static_cast<std::uint64_t>(op) << 40);
  }

  static Cost manhattan(std::uint64_t board) {
    int total = 0;
    for (int i = 0; i < 9; ++i) {
      int v = cell(board, i);
      if (v == 0) continue;
      int goal = v - 1;
      total += std::abs(i / 3 - goal / 3) + std::abs(i % 3 - goal % 3);
    }
    return total;
  }

  static std::uint64_t scrambled_board(std::uint64_t seed, std::uint32_t moves) {
    std::uint64_t board = kGoalCells | (std::uint64_t{8} << 36)
                        | (std::uint64_t{kNoOp} << 40);
    DetRng rng(seed);
    for (std::uint32_t m = 0; m < moves; ++m) {
      int ops[4];
      int count = 0;
      int blank = blank_of(board);
      int last = last_op(board);
      for (int op = 0; op < 4; ++op) {
        if (last != kNoOp && op == kInverse[last]) continue;
        if (legal(blank, op)) ops[count++] = op;
      }
      board = apply(board, blank, ops[rng.below(count)]);
    }
    // Clear the scramble's move memory so the root has no excluded child.
    return cells_of(board) | (static_cast<std::uint64_t>(blank_of(board)) << 36)
                           | (std::uint64_t{kNoOp} << 40);
  }

  std::uint64_t seed_;
  std::uint32_t scramble_;
  bool random_costs_;
  std::vector<std::uint32_t> op_costs_;
  std::uint64_t start_;
};

// ---------------------------------------------------------------------------
// Pancake puzzle with the gap heuristic (or h = 0 under random flip costs).
// Stack packed 4 bits per position; repeating the previous flip is excluded.
// ---------------------------------------------------------------------------

class PancakeDomain final : public Domain {
 public:
  PancakeDomain(std::uint64_t seed, unsigned n, bool random_costs)
      : seed_(seed), n_(n), random_costs_(random_costs) {
    if (n_ < 2 || n_ > 15) throw std::invalid_argument("pancake: size must be in [2, 15]");
    if (random_costs_) {
      op_costs_ = sample_operator_costs(n_ - 1, seed ^ kCostSalt);
    } else {
      op_costs_.assign(n_ - 1, 1);
    }
    DetRng rng(seed ^ kBoardSalt);
    std::vector<unsigned> perm(n_);
    for (unsigned i = 0; i < n_; ++i) perm[i] = i;
    for (unsigned i = n_ - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    start_ = 0;
    for (unsigned i = 0; i < n_; ++i) start_ |= static_cast<std::uint64_t>(perm[i]) << (4 * i);
    start_ |= std::uint64_t{0} << 60;  // no previous flip
  }

  SearchNode root() const override {
    Cost h = random_costs_ ? 0.0 : gap(start_);
    return SearchNode{{start_, 0}, h, 0};
  }

  void children(const SearchNode& n, std::vector<SearchNode>& out) const override {
    std::uint64_t stack = n.state[0];
    unsigned last = last_flip(stack);
    Cost g = random_costs_ ? n.f : n.f - gap(stack);
    for (unsigned s = 2; s <= n_; ++s) {
      if (s == last) continue;
      std::uint64_t next = flip(stack, s);
      Cost f = g + op_costs_[s - 2] + (random_costs_ ? 0.0 : gap(next));
      out.push_back(SearchNode{{next, 0}, f, n.depth + 1});
    }
  }

  bool is_goal(const SearchNode& n) const override {
    std::uint64_t v = n.state[0];
    for (unsigned i = 0; i < n_; ++i)
      if (((v >> (4 * i)) & 0xF) != i) return false;
    return true;
  }

  unsigned branching_bound() const override { return n_ - 1; }

  std::string describe() const override {
    std::ostringstream os;
    os << "n=" << n_ << ",rc=" << (random_costs_ ? 1 : 0);
    return format_line("pancake", seed_, os.str());
  }

 private:
  static unsigned last_flip(std::uint64_t stack) { return static_cast<unsigned>(stack >> 60); }

  std::uint64_t flip(std::uint64_t stack, unsigned s) const {
    std::uint64_t out = stack & ~((std::uint64_t{1} << (4 * n_)) - 1) & 0x0FFFFFFFFFFFFFFFull;
    for (unsigned i = 0; i < n_; ++i) {
      unsigned src = i < s ? s - 1 - i : i;
      std::uint64_t v = (stack >> (4 * src)) & 0xF;
      out |= v << (4 * i);
    }
    return out | (static_cast<std::uint64_t>(s) << 60);
  }

  // Number of adjacent pairs (including the plate below) whose values are not
  // consecutive.
  Cost gap(std::uint64_t stack) const {
    int gaps = 0;
    for (unsigned i = 0; i < n_; ++i) {
      int a = static_cast<int>((stack >> (4 * i)) & 0xF);
      int b = i + 1 < n_ ? static_cast<int>((stack >> (4 * (i + 1))) & 0xF) : static_cast<int>(n_);
      if (std::abs(a - b) != 1) ++gaps;
    }
    return gaps;
  }

  std::uint64_t seed_;
  unsigned n_;
  bool random_costs_;
  std::vector<std::uint32_t> op_costs_;
  std::uint64_t start_;
};

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) {
      std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("instance params: expected k=v, got '" + item + "'");
      out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string("instance line: bad ") + what + " '" + s + "'");
  return std::stoull(s);
}

std::uint64_t get_u64(const std::map<std::string, std::string>& params, const char* key,
                      std::uint64_t fallback, bool* found = nullptr) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (found) *found = false;
    return fallback;
  }
  if (found) *found = true;
  return parse_u64(it->second, key);
}

}  // namespace

std::vector<std::uint32_t> sample_operator_costs(unsigned count, std::uint64_t seed) {
  DetRng rng(seed);
  std::vector<std::uint32_t> costs(count);
  for (unsigned i = 0; i < count; ++i)
    costs[i] = static_cast<std::uint32_t>(rng.between(1, 10000));
  return costs;
}

DomainPtr make_chain_fixed(std::uint64_t seed, std::uint32_t depth) {
  if (depth == 0) throw std::invalid_argument("chain: depth must be positive");
  return std::make_shared<ChainDomain>(seed, depth);
}

DomainPtr make_chain(std::uint64_t seed, const GenOptions& opt) {
  DetRng rng(seed);
  auto depth = static_cast<std::uint32_t>(rng.between(1, std::max<std::uint32_t>(1, opt.depth_max)));
  return make_chain_fixed(seed, depth);
}

DomainPtr make_coconut_fixed(std::uint64_t seed, unsigned b, std::uint32_t trunk_depth,
                             std::uint32_t q, unsigned coconut_trunk, std::uint64_t pos) {
  return std::make_shared<CoconutDomain>(seed, b, trunk_depth, q, coconut_trunk, pos);
}

DomainPtr make_coconut(std::uint64_t seed, const GenOptions& opt) {
  if (opt.trunks < 2) throw std::invalid_argument("coconut: need at least 2 trunks");
  DetRng rng(seed);
  auto depth = static_cast<std::uint32_t>(rng.between(1, std::max<std::uint32_t>(1, opt.depth_max)));
  auto trunk = static_cast<unsigned>(rng.below(opt.trunks));
  auto q = static_cast<std::uint32_t>(rng.geometric_quarter(std::min<std::uint32_t>(opt.q_max, 20)));
  std::uint64_t span = 1;
  for (std::uint32_t i = 0; i < q; ++i) span *= opt.trunks;
  std::uint64_t pos = q == 0 ? 0 : rng.below(span);
  return make_coconut_fixed(seed, opt.trunks, depth, q, trunk, pos);
}

DomainPtr make_tiles(std::uint64_t seed, const GenOptions& opt) {
  return std::make_shared<TilesDomain>(seed, opt.scramble, opt.random_costs);
}

DomainPtr make_pancake(std::uint64_t seed, const GenOptions& opt) {
  return std::make_shared<PancakeDomain>(seed, opt.pancakes, opt.random_costs);
}

DomainPtr parse_instance(const std::string& line) {
  std::string domain, seed_text, params_text;
  std::size_t p1 = line.find(';');
  std::size_t p2 = p1 == std::string::npos ? std::string::npos : line.find(';', p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw std::invalid_argument("instance line: expected 'domain:...;seed:...;params:...'");
  auto field = [&](std::size_t begin, std::size_t end, const char* prefix) {
    std::string part = line.substr(begin, end - begin);
    std::string pre = std::string(prefix) + ":";
    if (part.rfind(pre, 0) != 0)
      throw std::invalid_argument("instance line: expected '" + pre + "', got '" + part + "'");
    return part.substr(pre.size());
  };
  domain = field(0, p1, "domain");
  seed_text = field(p1 + 1, p2, "seed");
  params_text = field(p2 + 1, line.size(), "params");

  std::uint64_t seed = parse_u64(seed_text, "seed");
  auto params = parse_params(params_text);

  if (domain == "chain") {
    bool have_d = false;
    auto d = static_cast<std::uint32_t>(get_u64(params, "d", 0, &have_d));
    return have_d ? make_chain_fixed(seed, d) : make_chain(seed);
  }
  if (domain == "coconut") {
    GenOptions opt;
    opt.trunks = static_cast<unsigned>(get_u64(params, "b", 3));
    bool have_depth = false, have_q = false, have_t = false, have_pos = false;
    auto depth = static_cast<std::uint32_t>(get_u64(params, "D", 0, &have_depth));
    auto q = static_cast<std::uint32_t>(get_u64(params, "q", 0, &have_q));
    auto trunk = static_cast<unsigned>(get_u64(params, "t", 0, &have_t));
    std::uint64_t pos = get_u64(params, "pos", 0, &have_pos);
    if (have_depth && have_q && have_t)
      return make_coconut_fixed(seed, opt.trunks, depth, q, trunk, have_pos ? pos : 0);
    if (have_depth || have_q || have_t || have_pos)
      throw std::invalid_argument("coconut instance: give all of D,q,t,pos or none");
    return make_coconut(seed, opt);
  }
  if (domain == "tiles") {
    GenOptions opt;
    opt.scramble = static_cast<std::uint32_t>(get_u64(params, "scramble", 30));
    opt.random_costs = get_u64(params, "rc", 0) != 0;
    return make_tiles(seed, opt);
  }
  if (domain == "pancake") {
    GenOptions opt;
    opt.pancakes = static_cast<std::uint32_t>(get_u64(params, "n", 10));
    opt.random_costs = get_u64(params, "rc", 0) != 0;
    return make_pancake(seed, opt);
  }
  throw std::invalid_argument("instance line: unknown domain '" + domain + "'");
}

DomainPtr normalize_root_cost(DomainPtr domain) {
  Cost f0 = domain->root().f;
  return std::make_shared<ShiftedDomain>(std::move(domain), 1.0 - f0);
}

}  // namespace lmsearch
