#include "prc/smop.hpp"

#include <cmath>
#include <string>

#include "prc/error.hpp"

namespace prc {
namespace {

void CheckProfile(std::span<const double> values) {
  if (values.size() < 3)
    throw Error(ErrorCode::kDegenerateProfile, "radar area needs at least 3 axes, got " + std::to_string(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0)
      throw Error(ErrorCode::kInvalidProfile, "value " + std::to_string(i + 1) + " is negative or not finite");
  }
}

}  // namespace

double SmopArea(std::span<const double> values) {
  CheckProfile(values);
  const std::size_t n = values.size();
  double adjacent = 0.0;
  for (std::size_t i = 0; i < n; ++i) adjacent += values[i] * values[(i + 1) % n];
  return adjacent * std::sin(2.0 * kPi / static_cast<double>(n)) / 2.0;
}

double ShoelaceArea(std::span<const Point2> vertices) {
  const std::size_t n = vertices.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return std::abs(twice) / 2.0;
}

double SmopShoelaceOracle(std::span<const double> values) {
  CheckProfile(values);
  const std::size_t n = values.size();
  std::vector<Point2> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
    vertices.push_back({values[i] * std::cos(theta), values[i] * std::sin(theta)});
  }
  return ShoelaceArea(vertices);
}

double SmopUpperBound(int n) {
  if (n < 3) throw Error(ErrorCode::kDegenerateProfile, "n = " + std::to_string(n));
  return static_cast<double>(n) / 2.0 * std::sin(2.0 * kPi / n);
}

std::vector<Point2> RadarVertices(std::span<const double> values, double start_angle, Winding winding) {
  const double direction = winding == Winding::kClockwise ? -1.0 : 1.0;
  const std::size_t n = values.size();
  std::vector<Point2> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = start_angle + direction * 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
    vertices.push_back({values[i] * std::cos(theta), values[i] * std::sin(theta)});
  }
  return vertices;
}

}  // namespace prc
