// The recursive lattice-path multiplicity: cut-corner / complete-parallelogram
// recursion on either side, permutation-driven turn selection, and the
// zero-multiplicity pruning predicates for rectangles.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>

#include "paths.hpp"

namespace tropc {

using BigInt = mpz_class;

// gmpxx has no long long overloads; route through long (LP64).
inline BigInt to_big(Int v) { return BigInt(static_cast<long>(v)); }

// Removes the interior point k; the result is lambda-increasing.
PathPoints cut_corner(const PathPoints& points, std::size_t k);

// Replaces point k by the fourth parallelogram vertex. Returns nullopt when
// the new point leaves the polygon (that branch contributes 0).
std::optional<PathPoints> complete_parallelogram(const PathPoints& points, std::size_t k,
                                                 const LatticePolygon& poly);

struct TurnStrategy {
  enum class Kind { First, AnyHeuristic, Sigma };
  Kind kind = Kind::First;
  std::vector<int> sigma;  // 1-based values, sigma[i-1] = sigma(i), only for Kind::Sigma

  static TurnStrategy first() { return {}; }
  static TurnStrategy any_heuristic() { return {Kind::AnyHeuristic, {}}; }
  static TurnStrategy permuted(std::vector<int> s) { return {Kind::Sigma, std::move(s)}; }
};

// Evaluates path multiplicities against a fixed polygon and boundary data.
// First/AnyHeuristic evaluations share one memo cache per side (values are
// strategy independent; the invariance test suite covers that assumption).
// Sigma evaluations bypass the cache so the invariance check stays honest.
class MultiplicityEngine {
 public:
  MultiplicityEngine(const LatticePolygon& poly, const BoundaryData& beta)
      : poly_(poly), beta_(beta) {}

  BigInt mult_side(const PathPoints& points, Side side,
                   const TurnStrategy& strategy = TurnStrategy::first());
  BigInt mult(const PathPoints& points);

  // Negative-side multiplicity with sigma-driven turn selection; sigma must
  // be a permutation of {1,...,n-1} for an n-step path.
  BigInt mult_sigma(const PathPoints& points, const std::vector<int>& sigma);

  const LatticePolygon& polygon() const { return poly_; }
  const BoundaryData& beta() const { return beta_; }

 private:
  BigInt eval(const PathPoints& points, Side side, const TurnStrategy& strategy);

  const LatticePolygon& poly_;
  const BoundaryData& beta_;
  std::map<std::pair<PathPoints, Side>, BigInt> memo_;
};

// Twice the lattice area enclosed between the path and the boundary arc of
// the given side; the strictly decreasing measure of the recursion.
Int twice_area_to_side(const PathPoints& points, const LatticePolygon& poly, Side side);

// --- Pruning predicates (rectangles only, off by default) ---

struct PruningContext {
  // Top edge fully transverse (mu2 = (1,...,1)): no step may go more than one
  // unit right, and no down-right step may occur.
  bool no_down_right = false;
  // mu1 and nu2 each a single part: no path point may lie in the relative
  // interior of the bottom or right edge.
  bool no_boundary_interior = false;
  Int width = 0, height = 0;
};

PruningContext make_pruning_context(const LatticePolygon& poly, const BoundaryData& beta);

// Per-proposition checks; throw HypothesisNotMet if the context does not
// license them. True = the path (or prefix) is certified to have
// multiplicity zero.
bool discard_by_down_right(const PathPoints& prefix, const PruningContext& ctx);
bool discard_by_boundary_interior(const PathPoints& prefix, const PruningContext& ctx);

enum class PruneDecision { Keep, Discard };

// Conservative combination: Keep whenever no hypothesis applies. Safe on
// prefixes of paths during enumeration.
PruneDecision pruning_predicates(const PathPoints& prefix, const PruningContext& ctx);

}  // namespace tropc
