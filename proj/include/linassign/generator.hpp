#pragma once

#include <cstdint>
#include <string_view>

#include "linassign/core.hpp"

namespace linassign {

/**
 * @brief The splitmix64 generator (Steele, Lea, Vigna). Fixed
 * algorithm, no platform-dependent state: a given seed produces the
 * same stream everywhere, so generated instances double as
 * cross-implementation test vectors.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound) by modulo reduction. The bias is
  /// irrelevant at our bounds and the result is platform-stable.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

enum class Distribution { kUniform, kClustered };

Distribution parse_distribution(std::string_view name);  // "uniform" | "clustered"
std::string_view distribution_name(Distribution d);

/// Deterministic instance generation: coordinates in [0, range].
/// Uniform mode draws each point independently; clustered mode draws
/// cluster centers uniformly, then points around a random center with
/// spread max(1, range/64). Throws Error(kBadParameter) on invalid
/// sizes or range.
Instance generate_instance(std::uint64_t seed, int size_s, int size_t_, Coord range,
                           Distribution dist);

}  // namespace linassign
