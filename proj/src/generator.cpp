#include "linassign/generator.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace linassign {
namespace {

std::vector<Coord> draw_points(SplitMix64& rng, int count, Coord range, Distribution dist,
                               const std::vector<Coord>& centers, Coord spread) {
  std::vector<Coord> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (dist == Distribution::kUniform) {
      points.push_back(static_cast<Coord>(rng.next_below(static_cast<std::uint64_t>(range) + 1)));
    } else {
      const Coord center = centers[rng.next_below(centers.size())];
      const Coord offset =
          static_cast<Coord>(rng.next_below(static_cast<std::uint64_t>(2 * spread + 1))) - spread;
      points.push_back(std::clamp<Coord>(center + offset, 0, range));
    }
  }
  return points;
}

}  // namespace

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform") return Distribution::kUniform;
  if (name == "clustered") return Distribution::kClustered;
  throw Error(Errc::kBadParameter, "unknown distribution '" + std::string(name) + "'");
}

std::string_view distribution_name(Distribution d) {
  return d == Distribution::kUniform ? "uniform" : "clustered";
}

Instance generate_instance(std::uint64_t seed, int size_s, int size_t_, Coord range,
                           Distribution dist) {
  if (size_t_ < 1 || size_s < size_t_) {
    throw Error(Errc::kBadParameter, "generator requires size_s >= size_t >= 1");
  }
  if (range < 0 || range > kCoordBound) {
    throw Error(Errc::kBadParameter, "range must be in [0, 2^47 - 1]");
  }
  SplitMix64 rng(seed);

  std::vector<Coord> centers;
  Coord spread = 0;
  if (dist == Distribution::kClustered) {
    const int cluster_count = std::max(1, (size_s + size_t_) / 32);
    spread = std::max<Coord>(1, range / 64);
    centers.reserve(static_cast<std::size_t>(cluster_count));
    for (int i = 0; i < cluster_count; ++i) {
      centers.push_back(static_cast<Coord>(rng.next_below(static_cast<std::uint64_t>(range) + 1)));
    }
  }

  // S points first, then T points, from the one stream.
  std::vector<Coord> s = draw_points(rng, size_s, range, dist, centers, spread);
  std::vector<Coord> t = draw_points(rng, size_t_, range, dist, centers, spread);
  return Instance::make(std::move(s), std::move(t));
}

}  // namespace linassign
