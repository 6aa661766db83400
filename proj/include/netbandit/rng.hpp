#ifndef NETBANDIT_RNG_HPP
#define NETBANDIT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace netbandit {

/// Episode RNG. Wraps mt19937_64 behind fixed, platform-stable draw rules so
/// replays are bit-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Modulo bias is irrelevant at bandit scales;
  /// determinism is what matters.
  int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 gen_;
};

/// Index of the maximum value, ties broken uniformly. Consumes exactly one
/// draw per call, so traces replay regardless of tie-set size.
int argmax_tiebreak(const std::vector<double>& values, Rng& rng);

}  // namespace netbandit

#endif  // NETBANDIT_RNG_HPP
