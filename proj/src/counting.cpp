#include "counting.hpp"

#include <thread>

namespace tropc {

Int path_length_for(const BoundaryData& beta, Int genus) {
  if (genus < 0) throw Error(Errc::InvalidInput, "genus must be nonnegative");
  Int length = beta.total_steps() + genus - 1;
  if (length < 1)
    throw Error(Errc::InvalidInput, "path length |beta| + g - 1 must be at least 1");
  return length;
}

namespace {

std::function<bool(const PathPoints&)> pruning_filter(const LatticePolygon& poly,
                                                      const BoundaryData& beta,
                                                      const CountOptions& options) {
  if (!options.pruning) return {};
  PruningContext ctx = make_pruning_context(poly, beta);
  if (!ctx.no_down_right && !ctx.no_boundary_interior) return {};
  return [ctx](const PathPoints& prefix) {
    return pruning_predicates(prefix, ctx) == PruneDecision::Keep;
  };
}

// Evaluates mult on each path with `threads` workers, each with its own
// engine; the output order matches the input order, so results are
// deterministic regardless of scheduling.
std::vector<BigInt> mult_all(const std::vector<PathPoints>& paths, const LatticePolygon& poly,
                             const BoundaryData& beta, int threads) {
  if (threads <= 0) threads = (int)std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, paths.empty() ? 1 : (int)paths.size());

  std::vector<BigInt> values(paths.size());
  if (threads == 1) {
    MultiplicityEngine engine(poly, beta);
    for (std::size_t i = 0; i < paths.size(); ++i) values[i] = engine.mult(paths[i]);
    return values;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t)
    workers.emplace_back([&, t] {
      MultiplicityEngine engine(poly, beta);
      for (std::size_t i = t; i < paths.size(); i += (std::size_t)threads)
        values[i] = engine.mult(paths[i]);
    });
  for (auto& w : workers) w.join();
  return values;
}

}  // namespace

BigInt count_paths_with_multiplicity(const LatticePolygon& poly, const BoundaryData& beta,
                                     Int genus, const CountOptions& options) {
  Int length = path_length_for(beta, genus);
  std::vector<PathPoints> paths;
  enumerate_paths(poly, length, [&](const PathPoints& p) { paths.push_back(p); },
                  pruning_filter(poly, beta, options));
  BigInt total = 0;
  for (const BigInt& v : mult_all(paths, poly, beta, options.threads)) total += v;
  return total;
}

std::vector<std::pair<PathPoints, BigInt>> nonzero_paths(const LatticePolygon& poly,
                                                         const BoundaryData& beta, Int genus,
                                                         const CountOptions& options) {
  Int length = path_length_for(beta, genus);
  std::vector<PathPoints> paths;
  enumerate_paths(poly, length, [&](const PathPoints& p) { paths.push_back(p); },
                  pruning_filter(poly, beta, options));
  std::vector<BigInt> values = mult_all(paths, poly, beta, options.threads);
  std::vector<std::pair<PathPoints, BigInt>> out;
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (values[i] != 0) out.emplace_back(std::move(paths[i]), std::move(values[i]));
  return out;
}

LatticePolygon profile_rectangle(const TangencyProfile& profile) {
  profile.validate();
  Int w = profile.width(), h = profile.height();
  return LatticePolygon({{0, 0}, {w, 0}, {w, h}, {0, h}});
}

BoundaryData profile_beta(const LatticePolygon& rect, const TangencyProfile& profile) {
  std::map<std::size_t, std::vector<Int>> raw;
  raw[rect.named_edge("bottom")] = partition_to_beta(profile.mu1.parts);
  raw[rect.named_edge("top")] = partition_to_beta(profile.mu2.parts);
  raw[rect.named_edge("left")] = partition_to_beta(profile.nu1.parts);
  raw[rect.named_edge("right")] = partition_to_beta(profile.nu2.parts);
  return BoundaryData::validate(rect, raw);
}

BigInt n_trop_p1p1(const TangencyProfile& profile, Int genus, const CountOptions& options) {
  LatticePolygon rect = profile_rectangle(profile);
  BoundaryData beta = profile_beta(rect, profile);
  return count_paths_with_multiplicity(rect, beta, genus, options);
}

}  // namespace tropc
