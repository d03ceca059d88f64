#ifndef DECOC_ROAD_HPP
#define DECOC_ROAD_HPP

#include <algorithm>
#include <cmath>

#include "decoc/errors.hpp"

namespace decoc {

/// Straight multi-lane road. Lane 0 spans y in [0, lane_width); lane k's
/// center sits at (k + 1/2) * lane_width.
struct RoadModel {
  int lane_count = 2;
  double lane_width = 3.5;  // m
  double length = 150.0;    // m

  double width() const { return lane_count * lane_width; }
  double lane_center(int k) const { return (k + 0.5) * lane_width; }
};

/// floor(y / lane_width) with the half-open convention (y == k*lane_width
/// belongs to lane k); the index is clamped so the top road edge maps to the
/// last lane. Throws OffRoad outside [0, width].
int lane_index(double y, const RoadModel& road);

/// lane_index after clamping y into the road corridor; never throws.
int lane_index_clamped(double y, const RoadModel& road);

}  // namespace decoc

#endif  // DECOC_ROAD_HPP
