#include "geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tropc {

Int gcd_ll(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return std::gcd(a, b);
}

Ordering lambda_compare(const LatticePoint& p, const LatticePoint& q) {
  if (p.x != q.x) return p.x < q.x ? Ordering::Less : Ordering::Greater;
  if (p.y != q.y) return p.y > q.y ? Ordering::Less : Ordering::Greater;
  return Ordering::Equal;
}

LatticePolygon::LatticePolygon(std::vector<LatticePoint> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3)
    throw Error(Errc::InvalidInput, "polygon needs at least 3 vertices");

  // Normalize to counterclockwise orientation.
  Int twice_area = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    twice_area += cross(a, b);
  }
  if (twice_area == 0)
    throw Error(Errc::InvalidInput, "degenerate polygon (zero area)");
  if (twice_area < 0) std::reverse(vertices_.begin(), vertices_.end());

  // Strict convexity, no three consecutive vertices collinear.
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint e1 = vertices_[(i + 1) % n] - vertices_[i];
    LatticePoint e2 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
    if (cross(e1, e2) <= 0)
      throw Error(Errc::InvalidInput,
                  "polygon is not strictly convex at vertex " +
                      std::to_string((i + 1) % n));
  }

  // Canonical start: lexicographically smallest vertex.
  auto start = std::min_element(vertices_.begin(), vertices_.end());
  std::rotate(vertices_.begin(), start, vertices_.end());

  // Lattice points, lambda-sorted.
  Int xmin = vertices_[0].x, xmax = vertices_[0].x;
  Int ymin = vertices_[0].y, ymax = vertices_[0].y;
  for (const auto& v : vertices_) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  for (Int x = xmin; x <= xmax; ++x)
    for (Int y = ymax; y >= ymin; --y)  // lambda order within a column
      if (contains({x, y})) points_.push_back({x, y});

  lambda_min_ = points_.front();
  lambda_max_ = points_.back();

  // Locate the extremal vertices; lambda extremes of a lattice polygon are
  // vertices thanks to the irrational-slope tie break.
  std::size_t ip = 0, iq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == lambda_min_) ip = i;
    if (vertices_[i] == lambda_max_) iq = i;
  }

  // Counterclockwise arc from p to q.
  for (std::size_t i = ip; i != iq; i = (i + 1) % n)
    negative_side_.push_back({i, vertices_[i], vertices_[(i + 1) % n]});
  // Clockwise arc from p to q (edges traversed against their ccw direction).
  for (std::size_t i = ip; i != iq; i = (i + n - 1) % n) {
    std::size_t e = (i + n - 1) % n;
    positive_side_.push_back({e, vertices_[i], vertices_[e]});
  }
}

std::pair<LatticePoint, LatticePoint> LatticePolygon::edge(std::size_t i) const {
  return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
}

Int LatticePolygon::edge_lattice_length(std::size_t i) const {
  auto [a, b] = edge(i);
  LatticePoint d = b - a;
  return gcd_ll(d.x, d.y);
}

bool LatticePolygon::contains(const LatticePoint& p) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint e = vertices_[(i + 1) % n] - vertices_[i];
    if (cross(e, p - vertices_[i]) < 0) return false;
  }
  return true;
}

bool LatticePolygon::on_edge(const LatticePoint& p, std::size_t i) const {
  auto [a, b] = edge(i);
  if (cross(b - a, p - a) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool LatticePolygon::is_axis_aligned_rectangle() const {
  if (vertices_.size() != 4) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    LatticePoint d = vertices_[(i + 1) % 4] - vertices_[i];
    if (d.x != 0 && d.y != 0) return false;
  }
  return true;
}

std::size_t LatticePolygon::named_edge(const std::string& name) const {
  if (!is_axis_aligned_rectangle())
    throw Error(Errc::InvalidInput,
                "edge name '" + name + "' only valid for axis-aligned rectangles");
  for (std::size_t i = 0; i < 4; ++i) {
    auto [a, b] = edge(i);
    if (name == "bottom" && a.y == b.y && a.y < vertices_[2].y) return i;
    if (name == "top" && a.y == b.y && a.y > vertices_[0].y) return i;
    if (name == "left" && a.x == b.x && a.x < vertices_[2].x) return i;
    if (name == "right" && a.x == b.x && a.x > vertices_[0].x) return i;
  }
  throw Error(Errc::InvalidInput, "unknown edge name '" + name + "'");
}

std::pair<LatticePoint, LatticePoint> extremal_points(const LatticePolygon& poly) {
  return {poly.lambda_min(), poly.lambda_max()};
}

std::vector<Int> partition_to_beta(const std::vector<Int>& partition) {
  std::vector<Int> beta;
  for (Int part : partition) {
    if (part <= 0) throw Error(Errc::InvalidInput, "partition entries must be positive");
    if ((std::size_t)part > beta.size()) beta.resize(part, 0);
    ++beta[part - 1];
  }
  return beta;
}

BoundaryData BoundaryData::validate(const LatticePolygon& poly,
                                    const std::map<std::size_t, std::vector<Int>>& raw) {
  BoundaryData data;
  data.beta_.resize(poly.edge_count());
  for (std::size_t e = 0; e < poly.edge_count(); ++e) {
    auto it = raw.find(e);
    if (it == raw.end())
      throw Error(Errc::MissingEdge, "no beta sequence for edge " + std::to_string(e));
    Int ibeta = 0;
    for (std::size_t k = 0; k < it->second.size(); ++k) {
      if (it->second[k] < 0)
        throw Error(Errc::InvalidInput, "beta entries must be nonnegative");
      ibeta += Int(k + 1) * it->second[k];
      data.total_steps_ += it->second[k];
    }
    if (ibeta != poly.edge_lattice_length(e))
      throw Error(Errc::MismatchedEdgeLength,
                  "edge " + std::to_string(e) + ": I(beta) = " + std::to_string(ibeta) +
                      " but lattice length is " +
                      std::to_string(poly.edge_lattice_length(e)));
    data.beta_[e] = it->second;
    while (!data.beta_[e].empty() && data.beta_[e].back() == 0) data.beta_[e].pop_back();
  }
  if (raw.size() != poly.edge_count())
    throw Error(Errc::InvalidInput, "beta map has entries for nonexistent edges");
  return data;
}

Int BoundaryData::edge_step_count(std::size_t e) const {
  Int total = 0;
  for (Int b : beta_.at(e)) total += b;
  return total;
}

Int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), Int(0)); }

bool Partition::is_transverse() const {
  return std::all_of(parts.begin(), parts.end(), [](Int p) { return p == 1; });
}

Int Partition::automorphisms() const {
  Int aut = 1, run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
    aut *= run;
  }
  return aut;
}

void Partition::check() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw Error(Errc::InvalidInput, "partition entries must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw Error(Errc::InvalidInput, "partition must be nonincreasing");
  }
}

Partition parse_partition(const std::string& comma_separated) {
  Partition p;
  std::stringstream ss(comma_separated);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    p.parts.push_back(std::stoll(tok));
  }
  std::sort(p.parts.rbegin(), p.parts.rend());
  p.check();
  return p;
}

void TangencyProfile::validate() const {
  mu1.check();
  mu2.check();
  nu1.check();
  nu2.check();
  if (mu1.sum() != mu2.sum())
    throw Error(Errc::ProfileMismatch, "mu1 and mu2 must partition the same number");
  if (nu1.sum() != nu2.sum())
    throw Error(Errc::ProfileMismatch, "nu1 and nu2 must partition the same number");
  if (mu1.parts.empty() || nu1.parts.empty())
    throw Error(Errc::ProfileMismatch, "profile partitions must be nonempty");
}

}  // namespace tropc
