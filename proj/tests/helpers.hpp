// Shared fixture loading and small builders for the test suites.
#pragma once

#include <string>
#include <vector>

#include "geometry.hpp"
#include "io.hpp"

namespace tropc::testing {

inline std::string fixture(const std::string& relative) {
  return std::string(FIXTURES_DIR) + "/" + relative;
}

inline LatticePolygon load_polygon(const std::string& dir) {
  return polygon_from_json(load_json_file(fixture(dir + "/polygon.json")));
}

inline BoundaryData load_beta(const std::string& dir, const LatticePolygon& poly) {
  return BoundaryData::validate(poly,
                                beta_map_from_json(load_json_file(fixture(dir + "/beta.json")), poly));
}

inline LatticePolygon rectangle(Int width, Int height) {
  return LatticePolygon({{0, 0}, {width, 0}, {width, height}, {0, height}});
}

// Boundary data for a rectangle from the four partitions (bottom, top, left,
// right), each given as a plain part list.
inline BoundaryData rectangle_beta(const LatticePolygon& rect, const std::vector<Int>& bottom,
                                   const std::vector<Int>& top, const std::vector<Int>& left,
                                   const std::vector<Int>& right) {
  std::map<std::size_t, std::vector<Int>> raw;
  raw[rect.named_edge("bottom")] = partition_to_beta(bottom);
  raw[rect.named_edge("top")] = partition_to_beta(top);
  raw[rect.named_edge("left")] = partition_to_beta(left);
  raw[rect.named_edge("right")] = partition_to_beta(right);
  return BoundaryData::validate(rect, raw);
}

inline Partition parts(std::vector<Int> p) {
  Partition out{std::move(p)};
  out.check();
  return out;
}

}  // namespace tropc::testing
