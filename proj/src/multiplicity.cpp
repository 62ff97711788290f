#include "multiplicity.hpp"

#include <algorithm>

namespace tropc {

PathPoints cut_corner(const PathPoints& points, std::size_t k) {
  PathPoints out;
  out.reserve(points.size() - 1);
  for (std::size_t j = 0; j < points.size(); ++j)
    if (j != k) out.push_back(points[j]);
  return out;
}

std::optional<PathPoints> complete_parallelogram(const PathPoints& points, std::size_t k,
                                                 const LatticePolygon& poly) {
  LatticePoint fourth = points[k - 1] + points[k + 1] - points[k];
  if (!poly.contains(fourth)) return std::nullopt;
  PathPoints out = points;
  out[k] = fourth;
  return out;
}

BigInt MultiplicityEngine::mult_side(const PathPoints& points, Side side,
                                     const TurnStrategy& strategy) {
  return eval(points, side, strategy);
}

BigInt MultiplicityEngine::mult(const PathPoints& points) {
  BigInt pos = eval(points, Side::Positive, TurnStrategy::first());
  if (pos == 0) return 0;
  return pos * eval(points, Side::Negative, TurnStrategy::first());
}

BigInt MultiplicityEngine::eval(const PathPoints& points, Side side,
                                const TurnStrategy& strategy) {
  auto key = std::make_pair(points, side);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  BigInt result = 0;
  if (is_beta_initial(points, poly_, beta_, side)) {
    result = 1;
  } else {
    const Turn wanted = side == Side::Positive ? Turn::Left : Turn::Right;
    std::vector<std::size_t> turns;
    for (std::size_t k = 1; k + 1 < points.size(); ++k)
      if (turn_direction(points, k) == wanted) turns.push_back(k);

    if (!turns.empty()) {
      std::size_t k = turns.front();
      if (strategy.kind == TurnStrategy::Kind::AnyHeuristic) {
        // Prefer a turn whose completion leaves the polygon: only one branch.
        for (std::size_t t : turns)
          if (!complete_parallelogram(points, t, poly_)) {
            k = t;
            break;
          }
      }
      BigInt twice_area = abs(to_big(cross(points[k] - points[k - 1], points[k + 1] - points[k])));
      result = twice_area * eval(cut_corner(points, k), side, strategy);
      if (auto completed = complete_parallelogram(points, k, poly_))
        result += eval(*completed, side, strategy);
    }
  }
  memo_.emplace(std::move(key), result);
  return result;
}

namespace {

BigInt mult_sigma_rec(const PathPoints& points, const std::vector<int>& sigma,
                      const LatticePolygon& poly, const BoundaryData& beta) {
  if (is_beta_initial(points, poly, beta, Side::Negative)) return 1;

  std::size_t best = 0;
  int best_priority = 0;
  for (std::size_t k = 1; k + 1 < points.size(); ++k)
    if (turn_direction(points, k) == Turn::Right)
      if (best == 0 || sigma[k - 1] < best_priority) {
        best = k;
        best_priority = sigma[k - 1];
      }
  if (best == 0) return 0;

  const std::size_t t = best;
  const int k = sigma[t - 1];
  BigInt twice_area = abs(to_big(cross(points[t] - points[t - 1], points[t + 1] - points[t])));

  // sigma' = del_k o sigma o delta^t: drop position t from the domain and
  // priority k from the codomain, keeping the order of everything else.
  std::vector<int> reduced;
  reduced.reserve(sigma.size() - 1);
  for (std::size_t j = 1; j <= sigma.size(); ++j) {
    if (j == t) continue;
    int v = sigma[j - 1];
    reduced.push_back(v < k ? v : v - 1);
  }

  BigInt result = twice_area * mult_sigma_rec(cut_corner(points, t), reduced, poly, beta);
  if (auto completed = complete_parallelogram(points, t, poly))
    result += mult_sigma_rec(*completed, sigma, poly, beta);
  return result;
}

}  // namespace

BigInt MultiplicityEngine::mult_sigma(const PathPoints& points, const std::vector<int>& sigma) {
  const std::size_t n = points.size() - 1;
  if (sigma.size() != n - 1)
    throw Error(Errc::InvalidPermutationLength,
                "sigma must be a permutation of {1,...," + std::to_string(n - 1) + "}");
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 1 || (std::size_t)v > sigma.size() || seen[v - 1])
      throw Error(Errc::InvalidPermutationLength, "sigma is not a permutation");
    seen[v - 1] = true;
  }
  return mult_sigma_rec(points, sigma, poly_, beta_);
}

Int twice_area_to_side(const PathPoints& points, const LatticePolygon& poly, Side side) {
  // Close the loop: path from p to q, then the side arc from q back to p.
  std::vector<LatticePoint> loop = points;
  const auto& arc = poly.side_edges(side);
  for (auto it = arc.rbegin(); it != arc.rend(); ++it) loop.push_back(it->from);
  Int twice = 0;
  for (std::size_t i = 0; i < loop.size(); ++i)
    twice += cross(loop[i], loop[(i + 1) % loop.size()]);
  return twice < 0 ? -twice : twice;
}

PruningContext make_pruning_context(const LatticePolygon& poly, const BoundaryData& beta) {
  PruningContext ctx;
  if (!poly.is_axis_aligned_rectangle()) return ctx;
  const auto& v = poly.vertices();
  ctx.width = v[2].x - v[0].x;
  ctx.height = v[2].y - v[0].y;
  const auto& top = beta.edge_beta(poly.named_edge("top"));
  ctx.no_down_right = top.size() == 1 && top[0] == ctx.width;
  ctx.no_boundary_interior = beta.edge_step_count(poly.named_edge("bottom")) == 1 &&
                             beta.edge_step_count(poly.named_edge("right")) == 1;
  return ctx;
}

bool discard_by_down_right(const PathPoints& prefix, const PruningContext& ctx) {
  if (!ctx.no_down_right)
    throw Error(Errc::HypothesisNotMet, "mu2 transverse hypothesis does not hold");
  for (std::size_t j = 1; j < prefix.size(); ++j) {
    LatticePoint d = prefix[j] - prefix[j - 1];
    if (d.x > 1) return true;
    if (d.x > 0 && d.y < 0) return true;
  }
  return false;
}

bool discard_by_boundary_interior(const PathPoints& prefix, const PruningContext& ctx) {
  if (!ctx.no_boundary_interior)
    throw Error(Errc::HypothesisNotMet, "single-part mu1/nu2 hypothesis does not hold");
  for (const auto& p : prefix) {
    if (p.y == 0 && 0 < p.x && p.x < ctx.width) return true;
    if (p.x == ctx.width && 0 < p.y && p.y < ctx.height) return true;
  }
  return false;
}

PruneDecision pruning_predicates(const PathPoints& prefix, const PruningContext& ctx) {
  if (ctx.no_down_right && discard_by_down_right(prefix, ctx)) return PruneDecision::Discard;
  if (ctx.no_boundary_interior && discard_by_boundary_interior(prefix, ctx))
    return PruneDecision::Discard;
  return PruneDecision::Keep;
}

}  // namespace tropc
