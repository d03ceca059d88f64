#include "decoc/road.hpp"

#include "decoc/format.hpp"

namespace decoc {

int lane_index(double y, const RoadModel& road) {
  if (y < 0.0 || y > road.width()) {
    throw OffRoad("y=" + format_double(y) + " outside road [0, " +
                  format_double(road.width()) + "]");
  }
  const int k = static_cast<int>(std::floor(y / road.lane_width));
  return std::clamp(k, 0, road.lane_count - 1);
}

int lane_index_clamped(double y, const RoadModel& road) {
  const double yc = std::clamp(y, 0.0, road.width());
  const int k = static_cast<int>(std::floor(yc / road.lane_width));
  return std::clamp(k, 0, road.lane_count - 1);
}

}  // namespace decoc
