// Lambda-increasing lattice paths: validation, turn classification,
// beta-initial detection and enumeration.
#pragma once

#include <functional>
#include <vector>

#include "geometry.hpp"

namespace tropc {

using PathPoints = std::vector<LatticePoint>;

struct LatticePath {
  PathPoints points;

  std::size_t length() const { return points.empty() ? 0 : points.size() - 1; }
  LatticePoint step(std::size_t j) const { return points[j] - points[j - 1]; }

  // Throws InvalidInput unless the path is lambda-increasing and all points
  // lie in the polygon.
  void validate(const LatticePolygon& poly) const;
};

bool is_lambda_increasing(const PathPoints& points);

enum class Turn { Left, Right, Straight };

// Turn at the interior point k (1 <= k <= n-1), by the sign of the
// determinant of the adjacent steps.
Turn turn_direction(const PathPoints& points, std::size_t k);

// True iff the path traces exactly the boundary arc of the given side from
// lambda-min to lambda-max, and on each edge the multiset of step lattice
// lengths matches beta_e. A step crossing a polygon vertex is rejected.
bool is_beta_initial(const PathPoints& points, const LatticePolygon& poly,
                     const BoundaryData& beta, Side side);

// Enumerates all lambda-increasing paths of the given length from lambda-min
// to lambda-max over the lattice points of the polygon, in lexicographic
// order of the lambda-sorted point sequence.
//
// prefix_filter, when set, is called on every partial point sequence; return
// false to prune the whole subtree.
void enumerate_paths(const LatticePolygon& poly, Int length,
                     const std::function<void(const PathPoints&)>& yield,
                     const std::function<bool(const PathPoints&)>& prefix_filter = {});

std::vector<PathPoints> all_paths(const LatticePolygon& poly, Int length);

}  // namespace tropc
