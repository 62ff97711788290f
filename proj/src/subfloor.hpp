// Subfloor diagrams: colored weighted forests on linearly ordered vertices,
// their mu-multiplicity via block fans and lattice paths, and the resulting
// curve count for P1xP1 profiles with transverse infinity-section contact.
#pragma once

#include <functional>
#include <optional>

#include "multiplicity.hpp"

namespace tropc {

enum class Color { Black, White };
enum class EndSide { Left, Right };

struct DiagramEdge {
  int i = 0, j = 0;  // 1-based vertex positions, i < j
  Int w = 1;         // expansion factor
  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

struct DiagramEnd {
  int v = 0;  // 1-based vertex position
  EndSide side = EndSide::Left;
  Int w = 1;
  friend bool operator==(const DiagramEnd&, const DiagramEnd&) = default;
};

struct SubfloorDiagram {
  int n = 0;
  std::vector<Color> colors;  // size n
  std::vector<DiagramEdge> edges;
  std::vector<DiagramEnd> ends;

  // Incoming (from the left, plus left ends) minus outgoing expansion factors.
  Int divergence(int v) const;
  std::vector<int> white_vertices() const;

  // Checks every structural requirement: forest, bipartite edges, ends on
  // black vertices with end-weight multisets nu1/nu2, black vertices of
  // valence 2 and divergence 0. Throws InvalidInput on the first violation.
  void validate(const Partition& nu1, const Partition& nu2) const;
};

// The dual polygon of the block fan {(-div,1) per vertex} + {(0,-m)}: the
// concave chain from (0,0) with steps (1,div_i), closed by the bottom edge.
// delta_plus walks every chain vertex. Returns nullopt for the degenerate
// singleton fan divs=(0). Throws NotDecreasing / NonzeroSum.
struct BlockFanData {
  LatticePolygon polygon;
  BoundaryData beta;
  PathPoints delta_plus;
};
std::optional<BlockFanData> block_fan_polygon(const std::vector<Int>& divs);

// Multiplicity of delta_plus in the block fan polygon. The singleton fan
// gives 1; a fan of two or more zero divergences spans no area and gives 0.
BigInt block_multiplicity(const std::vector<Int>& divs);

// Sum over all set partitions of the white vertices with block-size multiset
// mu1, nonincreasing divergences summing to 0 inside every block, and a tree
// quotient, of the product of block multiplicities; times the product of
// bounded-edge weights. Throws SizeMismatch unless |mu1| = #white vertices.
BigInt mu_multiplicity(const SubfloorDiagram& diagram, const Partition& mu1);

// Yields every diagram with the given end-weight data, number of white
// vertices and total vertex count, each exactly once, in a deterministic
// order. Throws InfeasibleCounts when the counts rule out any diagram.
void enumerate_subfloor_diagrams(const Partition& nu1, const Partition& nu2, int n_white,
                                 int n, const std::function<void(const SubfloorDiagram&)>& yield);

std::vector<SubfloorDiagram> all_subfloor_diagrams(const Partition& nu1, const Partition& nu2,
                                                   int n_white, int n);

// N^floor: total mu-multiplicity of all subfloor diagrams for the profile.
// Requires mu2 = (1,...,1); throws UnsupportedProfile otherwise.
BigInt n_floor(const TangencyProfile& profile);

}  // namespace tropc
