#pragma once

#include <cmath>
#include <random>
#include <vector>

namespace prc::testing {

// Fan triangulation around the origin with Heron's formula on each triangle.
// Side lengths come from the law of cosines, so this shares no code path with
// the adjacent-product formula or the Cartesian shoelace sum.
inline double HeronFanArea(const std::vector<double>& values) {
  const std::size_t n = values.size();
  const double angle = 2.0 * 3.14159265358979323846 / static_cast<double>(n);
  double area = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = values[i];
    const double b = values[(i + 1) % n];
    const double c = std::sqrt(std::max(0.0, a * a + b * b - 2.0 * a * b * std::cos(angle)));
    const double s = (a + b + c) / 2.0;
    area += std::sqrt(std::max(0.0, s * (s - a) * (s - b) * (s - c)));
  }
  return area;
}

inline std::vector<double> RandomProfile(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(n);
  for (auto& v : values) v = unit(rng);
  return values;
}

}  // namespace prc::testing
