// Counting lambda-increasing paths with multiplicity, and the P1xP1 wrapper.
#pragma once

#include "multiplicity.hpp"

namespace tropc {

struct CountOptions {
  int threads = 0;     // 0 = hardware concurrency
  bool pruning = false;  // rectangle zero-multiplicity pruning during enumeration
};

// Required path length for genus g: |beta-bar| + g - 1.
Int path_length_for(const BoundaryData& beta, Int genus);

// Sum of mult(gamma) over all lambda-increasing paths of length
// |beta-bar| + g - 1 from lambda-min to lambda-max.
BigInt count_paths_with_multiplicity(const LatticePolygon& poly, const BoundaryData& beta,
                                     Int genus, const CountOptions& options = {});

// The nonzero-multiplicity paths, in enumeration order, with their values.
std::vector<std::pair<PathPoints, BigInt>> nonzero_paths(const LatticePolygon& poly,
                                                         const BoundaryData& beta, Int genus,
                                                         const CountOptions& options = {});

// Rectangle [0,|mu1|] x [0,|nu1|] for a P1xP1 tangency profile.
LatticePolygon profile_rectangle(const TangencyProfile& profile);

// bottom = mu1, top = mu2, left = nu1, right = nu2, each via partition_to_beta.
BoundaryData profile_beta(const LatticePolygon& rect, const TangencyProfile& profile);

// Tropical count of genus-g curves in P1xP1 with the given tangency profile.
// The count includes possibly-disconnected curves (a connected curve plus
// extra fiber components, when such a splitting fits the point budget); the
// connected-only count is n_floor in subfloor.hpp.
BigInt n_trop_p1p1(const TangencyProfile& profile, Int genus, const CountOptions& options = {});

}  // namespace tropc
