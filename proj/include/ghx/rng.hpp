#pragma once

#include <cmath>
#include <cstdint>

namespace ghx {

/// Counter-based generator. The state is a counter advanced by a fixed odd
/// increment; every output is the splitmix64 finalizer of the counter, so a
/// stream is a pure function of (seed, draw index). Campaign sample i uses
/// stream(seed, i), which makes parallel campaigns reproducible no matter how
/// work is scheduled.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : state_(seed) {}

  /// Substream `index` of the campaign keyed by `seed`.
  static CounterRng stream(std::uint64_t seed, std::uint64_t index) {
    return CounterRng(mix(seed ^ mix(index + kGamma)));
  }

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; the paired draw is cached.
  double next_gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(t);
    has_cached_ = true;
    return r * std::cos(t);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace ghx
