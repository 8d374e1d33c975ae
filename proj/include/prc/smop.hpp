#pragma once

#include <span>
#include <vector>

namespace prc {

inline constexpr double kPi = 3.14159265358979323846;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

enum class Winding { kClockwise, kCounterClockwise };

// Surface Measure of Overall Performance: area of the radar polygon whose
// i-th vertex lies at radius values[i] on the i-th of n equally spaced axes,
//   (sum_i P_i * P_{i+1 mod n}) * sin(2*pi/n) / 2.
// Throws kDegenerateProfile for n < 3, kInvalidProfile for negative or
// non-finite values.
double SmopArea(std::span<const double> values);

// Independent route: polygon vertices in Cartesian coordinates, shoelace area.
double SmopShoelaceOracle(std::span<const double> values);

// Shoelace area of an arbitrary closed polygon (absolute value).
double ShoelaceArea(std::span<const Point2> vertices);

// Largest attainable area for n axes with values in [0, 1].
double SmopUpperBound(int n);

// Vertex i sits at start_angle +/- 2*pi*i/n with radius values[i]. Defaults
// give the usual radar layout: first axis up, proceeding clockwise.
std::vector<Point2> RadarVertices(std::span<const double> values,
                                  double start_angle = kPi / 2,
                                  Winding winding = Winding::kClockwise);

}  // namespace prc
