#include "paths.hpp"

#include <algorithm>
#include <map>

namespace tropc {

void LatticePath::validate(const LatticePolygon& poly) const {
  if (points.size() < 2) throw Error(Errc::InvalidInput, "path needs at least 2 points");
  if (!is_lambda_increasing(points))
    throw Error(Errc::InvalidInput, "path is not lambda-increasing");
  for (const auto& p : points)
    if (!poly.contains(p))
      throw Error(Errc::InvalidInput, "path point (" + std::to_string(p.x) + "," +
                                          std::to_string(p.y) + ") lies outside the polygon");
}

bool is_lambda_increasing(const PathPoints& points) {
  for (std::size_t j = 1; j < points.size(); ++j)
    if (!lambda_less(points[j - 1], points[j])) return false;
  return true;
}

Turn turn_direction(const PathPoints& points, std::size_t k) {
  Int d = cross(points[k] - points[k - 1], points[k + 1] - points[k]);
  if (d > 0) return Turn::Left;
  if (d < 0) return Turn::Right;
  return Turn::Straight;
}

bool is_beta_initial(const PathPoints& points, const LatticePolygon& poly,
                     const BoundaryData& beta, Side side) {
  const auto& arc = poly.side_edges(side);
  if (points.empty() || points.front() != poly.lambda_min() ||
      points.back() != poly.lambda_max())
    return false;

  // Walk the arc edge by edge, collecting per-edge step lengths.
  std::size_t ei = 0;
  std::map<std::size_t, std::vector<Int>> lengths;  // edge index -> step sizes
  auto on_oriented = [](const OrientedEdge& e, const LatticePoint& p) {
    if (cross(e.to - e.from, p - e.from) != 0) return false;
    return std::min(e.from.x, e.to.x) <= p.x && p.x <= std::max(e.from.x, e.to.x) &&
           std::min(e.from.y, e.to.y) <= p.y && p.y <= std::max(e.from.y, e.to.y);
  };
  for (std::size_t j = 1; j < points.size(); ++j) {
    const LatticePoint& a = points[j - 1];
    const LatticePoint& b = points[j];
    // Advance past fully traversed edges; a step must lie on a single edge.
    while (ei < arc.size() && a == arc[ei].to) ++ei;
    if (ei >= arc.size()) return false;
    if (!on_oriented(arc[ei], a) || !on_oriented(arc[ei], b)) return false;
    LatticePoint d = b - a;
    lengths[arc[ei].index].push_back(gcd_ll(d.x, d.y));
  }

  // Every edge of the side must be covered with the prescribed multiset.
  for (const auto& e : arc) {
    auto it = lengths.find(e.index);
    std::vector<Int> got = it == lengths.end() ? std::vector<Int>{} : it->second;
    std::vector<Int> want;
    const auto& be = beta.edge_beta(e.index);
    for (std::size_t k = 0; k < be.size(); ++k)
      for (Int c = 0; c < be[k]; ++c) want.push_back(Int(k + 1));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) return false;
  }
  return true;
}

namespace {

void enumerate_rec(const std::vector<LatticePoint>& pts, std::size_t next, Int remaining,
                   PathPoints& current,
                   const std::function<void(const PathPoints&)>& yield,
                   const std::function<bool(const PathPoints&)>& prefix_filter) {
  if (remaining == 0) {
    yield(current);
    return;
  }
  // Need `remaining - 1` interior points plus the endpoint from pts[next..].
  for (std::size_t i = next; i + std::size_t(remaining) <= pts.size(); ++i) {
    bool last = (remaining == 1);
    if (last && i + 1 != pts.size()) continue;  // final step must land on q
    current.push_back(pts[i]);
    if (!prefix_filter || prefix_filter(current))
      enumerate_rec(pts, i + 1, remaining - 1, current, yield, prefix_filter);
    current.pop_back();
  }
}

}  // namespace

void enumerate_paths(const LatticePolygon& poly, Int length,
                     const std::function<void(const PathPoints&)>& yield,
                     const std::function<bool(const PathPoints&)>& prefix_filter) {
  if (length < 1) throw Error(Errc::InvalidInput, "path length must be >= 1");
  const auto& pts = poly.lattice_points();
  PathPoints current{pts.front()};
  if (prefix_filter && !prefix_filter(current)) return;
  enumerate_rec(pts, 1, length, current, yield, prefix_filter);
}

std::vector<PathPoints> all_paths(const LatticePolygon& poly, Int length) {
  std::vector<PathPoints> out;
  enumerate_paths(poly, length, [&](const PathPoints& p) { out.push_back(p); });
  return out;
}

}  // namespace tropc
