// Lattice polygons, the lambda order, boundary sides and step-size data.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropc {

using Int = long long;

// Error codes shared across the library. The CLI maps InvalidInput-style
// codes to exit 2, Disagreement to 1 and Internal to 3.
enum class Errc {
  InvalidInput,
  MismatchedEdgeLength,
  MissingEdge,
  ProfileMismatch,
  UnsupportedProfile,
  InvalidPermutationLength,
  HypothesisNotMet,
  NotDecreasing,
  NonzeroSum,
  SizeMismatch,
  InfeasibleCounts,
  OnWall,
  InsufficientSamples,
  FitFailed,
  Disagreement,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct LatticePoint {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  return {a.x + b.x, a.y + b.y};
}
inline LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  return {a.x - b.x, a.y - b.y};
}

// 2x2 determinant of the two vectors.
inline Int cross(const LatticePoint& a, const LatticePoint& b) {
  return a.x * b.y - a.y * b.x;
}

Int gcd_ll(Int a, Int b);

enum class Ordering { Less, Equal, Greater };

// Total order realizing lambda(x,y) = x - eps*y for infinitesimal eps > 0.
// The irrational eps is eliminated: compare x first, then larger y is smaller.
Ordering lambda_compare(const LatticePoint& p, const LatticePoint& q);

inline bool lambda_less(const LatticePoint& p, const LatticePoint& q) {
  return lambda_compare(p, q) == Ordering::Less;
}

enum class Side { Positive, Negative };

// An edge of the polygon traversed in a specific direction along one side.
struct OrientedEdge {
  std::size_t index;  // counterclockwise edge index in the polygon
  LatticePoint from;
  LatticePoint to;
};

// Convex lattice polygon. Vertices may be given in arbitrary cyclic order;
// they are normalized to counterclockwise order starting at the
// lexicographically smallest vertex, so edge indices are deterministic.
class LatticePolygon {
 public:
  explicit LatticePolygon(std::vector<LatticePoint> vertices);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t edge_count() const { return vertices_.size(); }
  std::pair<LatticePoint, LatticePoint> edge(std::size_t i) const;
  Int edge_lattice_length(std::size_t i) const;

  bool contains(const LatticePoint& p) const;
  // True if p lies on the closed segment of edge i.
  bool on_edge(const LatticePoint& p, std::size_t i) const;

  // All lattice points of the polygon, sorted by the lambda order.
  const std::vector<LatticePoint>& lattice_points() const { return points_; }

  // The unique lambda-min and lambda-max points of the polygon.
  LatticePoint lambda_min() const { return lambda_min_; }
  LatticePoint lambda_max() const { return lambda_max_; }

  // Edges from lambda_min to lambda_max: Positive = clockwise arc,
  // Negative = counterclockwise arc.
  const std::vector<OrientedEdge>& side_edges(Side s) const {
    return s == Side::Positive ? positive_side_ : negative_side_;
  }

  bool is_axis_aligned_rectangle() const;
  // Maps left/right/top/bottom to the edge index; rectangles only.
  std::size_t named_edge(const std::string& name) const;

 private:
  std::vector<LatticePoint> vertices_;
  std::vector<LatticePoint> points_;
  LatticePoint lambda_min_, lambda_max_;
  std::vector<OrientedEdge> positive_side_, negative_side_;
};

std::pair<LatticePoint, LatticePoint> extremal_points(const LatticePolygon& poly);

// beta(k) = number of parts of the partition equal to k.
std::vector<Int> partition_to_beta(const std::vector<Int>& partition);

// Per-edge step-size multiplicities validated against the polygon.
class BoundaryData {
 public:
  // raw maps edge index -> beta sequence (1-based sizes). Throws
  // MissingEdge / MismatchedEdgeLength on invalid data.
  static BoundaryData validate(const LatticePolygon& poly,
                               const std::map<std::size_t, std::vector<Int>>& raw);

  const std::vector<Int>& edge_beta(std::size_t e) const { return beta_.at(e); }
  Int edge_step_count(std::size_t e) const;  // |beta_e|
  Int total_steps() const { return total_steps_; }  // |beta-bar|

 private:
  std::vector<std::vector<Int>> beta_;
  Int total_steps_ = 0;
};

// A partition: nonincreasing sequence of positive integers.
struct Partition {
  std::vector<Int> parts;

  Int sum() const;
  std::size_t length() const { return parts.size(); }
  bool is_transverse() const;  // all parts equal to 1
  // |Aut|: product of factorials of part multiplicities.
  Int automorphisms() const;
  void check() const;  // positive, nonincreasing
};

Partition parse_partition(const std::string& comma_separated);

// Contact orders with the four boundary divisors of P1 x P1.
struct TangencyProfile {
  Partition mu1, mu2;  // partitions of the width (0- and infinity-section)
  Partition nu1, nu2;  // partitions of the height (0- and infinity-fiber)

  Int width() const { return mu1.sum(); }
  Int height() const { return nu1.sum(); }
  std::size_t point_count() const {
    return mu1.length() + mu2.length() + nu1.length() + nu2.length() - 1;
  }
  void validate() const;  // throws ProfileMismatch
};

}  // namespace tropc
