#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace lmsearch {

// Path costs are doubles, but every built-in domain emits integer edge costs
// (Coconut is stored x10), so sums and midpoints of the values the solvers
// touch are exact dyadic rationals and may be compared with ==.
using Cost = double;

inline constexpr Cost kInf = std::numeric_limits<Cost>::infinity();
inline constexpr Cost kNegInf = -std::numeric_limits<Cost>::infinity();

// Expansion budgets. kUnlimited plays the role of an infinite budget.
using Budget = std::uint64_t;
inline constexpr Budget kUnlimited = ~std::uint64_t{0};

// Thrown when the explicit DFS stack outgrows its configured limit.
class DepthLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when the oracle enumeration outgrows its node cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kUnlimited / b) return kUnlimited;
  return a * b;
}

// Budget for iteration k of the budgeted solvers: n0 * 2^k, saturating.
inline Budget iteration_budget(std::uint64_t n0, unsigned k) {
  if (k >= 64) return kUnlimited;
  return saturating_mul(n0, std::uint64_t{1} << k);
}

// ceil(log2(x)) with a 2^-40 relative guard so that exact powers of two do
// not round up from float noise. x must be positive and finite.
inline std::int64_t guarded_ceil_log2(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("guarded_ceil_log2: x must be positive and finite");
  double v = std::log2(x);
  double guard = std::ldexp(std::fmax(1.0, std::fabs(v)), -40);
  return static_cast<std::int64_t>(std::ceil(v - guard));
}

// max(0, ceil(log2(x)))
inline std::int64_t guarded_ceil_log2_pos(double x) {
  std::int64_t v = guarded_ceil_log2(x);
  return v > 0 ? v : 0;
}

// Exact ceil(log2(num/den)) for positive integers: smallest k with den*2^k >= num.
inline unsigned int_ceil_log2_ratio(std::uint64_t num, std::uint64_t den) {
  if (num == 0 || den == 0) throw std::invalid_argument("int_ceil_log2_ratio: arguments must be positive");
  unsigned k = 0;
  std::uint64_t v = den;
  while (v < num) {
    v = saturating_mul(v, 2);
    ++k;
  }
  return k;
}

// Deterministic splitmix64 stream; used everywhere instead of the standard
// distributions so that instances are reproducible across platforms.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; n must be positive.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("DetRng::below: n must be positive");
    std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform in [lo, hi] inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw std::invalid_argument("DetRng::between: empty range");
    return lo + below(hi - lo + 1);
  }

  // Number of failures before the first success with success probability 1/4.
  std::uint64_t geometric_quarter(std::uint64_t clamp) {
    std::uint64_t q = 0;
    while (q < clamp && below(4) != 0) ++q;
    return q;
  }

 private:
  std::uint64_t state_;
};

// Per-instance sub-seed derivation for generators.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  DetRng rng(base ^ (0xD1B54A32D192ED03ull * (index + 1)));
  return rng.next_u64();
}

}  // namespace lmsearch
