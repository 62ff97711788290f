#include "subfloor.hpp"

#include <algorithm>
#include <map>

namespace tropc {

namespace {

// Tiny union-find over at most a few dozen nodes; copied freely.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // False when x and y were already connected (a cycle).
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

std::vector<Int> sorted_weights(const std::vector<DiagramEnd>& ends, EndSide side) {
  std::vector<Int> ws;
  for (const auto& e : ends)
    if (e.side == side) ws.push_back(e.w);
  std::sort(ws.rbegin(), ws.rend());
  return ws;
}

}  // namespace

Int SubfloorDiagram::divergence(int v) const {
  Int in = 0, out = 0;
  for (const auto& e : edges) {
    if (e.j == v) in += e.w;
    if (e.i == v) out += e.w;
  }
  for (const auto& e : ends) {
    if (e.v != v) continue;
    (e.side == EndSide::Left ? in : out) += e.w;
  }
  return in - out;
}

std::vector<int> SubfloorDiagram::white_vertices() const {
  std::vector<int> ws;
  for (int v = 1; v <= n; ++v)
    if (colors[v - 1] == Color::White) ws.push_back(v);
  return ws;
}

void SubfloorDiagram::validate(const Partition& nu1, const Partition& nu2) const {
  if (n < 1 || colors.size() != (std::size_t)n)
    throw Error(Errc::InvalidInput, "diagram needs one color per vertex");
  Dsu dsu(n);
  std::vector<int> valence(n + 1, 0);
  for (const auto& e : edges) {
    if (e.i < 1 || e.j > n || e.i >= e.j)
      throw Error(Errc::InvalidInput, "edge endpoints must satisfy 1 <= i < j <= n");
    if (e.w < 1) throw Error(Errc::InvalidInput, "expansion factors must be positive");
    if (colors[e.i - 1] == colors[e.j - 1])
      throw Error(Errc::InvalidInput, "edges must join a black and a white vertex");
    if (!dsu.unite(e.i - 1, e.j - 1))
      throw Error(Errc::InvalidInput, "diagram contains a cycle");
    ++valence[e.i];
    ++valence[e.j];
  }
  for (const auto& e : ends) {
    if (e.v < 1 || e.v > n) throw Error(Errc::InvalidInput, "end attached to invalid vertex");
    if (e.w < 1) throw Error(Errc::InvalidInput, "expansion factors must be positive");
    if (colors[e.v - 1] != Color::Black)
      throw Error(Errc::InvalidInput, "ends must be adjacent to a black vertex");
    ++valence[e.v];
  }
  std::vector<Int> nu1_sorted = nu1.parts, nu2_sorted = nu2.parts;
  if (sorted_weights(ends, EndSide::Left) != nu1_sorted)
    throw Error(Errc::InvalidInput, "left end weights do not match nu1");
  if (sorted_weights(ends, EndSide::Right) != nu2_sorted)
    throw Error(Errc::InvalidInput, "right end weights do not match nu2");
  for (int v = 1; v <= n; ++v) {
    if (colors[v - 1] != Color::Black) continue;
    if (valence[v] != 2)
      throw Error(Errc::InvalidInput,
                  "black vertex " + std::to_string(v) + " must have valence 2");
    if (divergence(v) != 0)
      throw Error(Errc::InvalidInput,
                  "black vertex " + std::to_string(v) + " must have divergence 0");
  }
}

std::optional<BlockFanData> block_fan_polygon(const std::vector<Int>& divs) {
  if (divs.empty()) throw Error(Errc::InvalidInput, "empty divergence sequence");
  Int sum = 0;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    if (i > 0 && divs[i] > divs[i - 1])
      throw Error(Errc::NotDecreasing, "divergences must be nonincreasing");
    sum += divs[i];
  }
  if (sum != 0) throw Error(Errc::NonzeroSum, "divergences must sum to 0");

  const Int m = (Int)divs.size();
  if (m == 1) return std::nullopt;  // fan {(0,1),(0,-1)}: degenerate singleton
  if (divs[0] == 0)
    throw Error(Errc::InvalidInput, "zero fan of several rays spans no polygon");

  PathPoints chain{{0, 0}};
  for (Int i = 0; i < m; ++i)
    chain.push_back({i + 1, chain.back().y + divs[(std::size_t)i]});

  std::vector<LatticePoint> vertices{{0, 0}};
  for (Int i = 1; i < m; ++i)
    if (divs[(std::size_t)i] != divs[(std::size_t)(i - 1)]) vertices.push_back(chain[(std::size_t)i]);
  vertices.push_back({m, 0});
  LatticePolygon polygon(std::move(vertices));

  std::map<std::size_t, std::vector<Int>> raw;
  for (std::size_t e = 0; e < polygon.edge_count(); ++e) {
    auto [a, b] = polygon.edge(e);
    if (a.y == 0 && b.y == 0) {
      std::vector<Int> bottom((std::size_t)m, 0);
      bottom.back() = 1;  // one step of full length m
      raw[e] = bottom;
    } else {
      raw[e] = {polygon.edge_lattice_length(e)};  // unit steps along the chain
    }
  }
  BoundaryData beta = BoundaryData::validate(polygon, raw);
  return BlockFanData{std::move(polygon), std::move(beta), std::move(chain)};
}

BigInt block_multiplicity(const std::vector<Int>& divs) {
  auto fan = block_fan_polygon(divs);  // may throw for zero fans of size >= 2
  if (!fan) return 1;
  MultiplicityEngine engine(fan->polygon, fan->beta);
  return engine.mult(fan->delta_plus);
}

namespace {

struct PartitionSearch {
  const std::vector<int>& whites;
  const std::vector<Int>& divs;  // parallel to whites
  const SubfloorDiagram& diagram;
  std::map<Int, int> size_pool;
  std::vector<std::vector<int>> blocks;    // indices into whites
  std::vector<Int> capacity;
  std::map<std::vector<Int>, BigInt> block_cache;
  BigInt total = 0;

  BigInt block_value(const std::vector<Int>& block_divs) {
    auto it = block_cache.find(block_divs);
    if (it != block_cache.end()) return it->second;
    BigInt v;
    try {
      v = block_multiplicity(block_divs);
    } catch (const Error&) {
      v = 0;  // several zero divergences: no fork polygon, contributes nothing
    }
    return block_cache.emplace(block_divs, std::move(v)).first->second;
  }

  void finish() {
    std::vector<int> block_of(whites.size());
    std::vector<std::vector<Int>> block_divs(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int idx : blocks[b]) {
        block_of[(std::size_t)idx] = (int)b;
        block_divs[b].push_back(divs[(std::size_t)idx]);
      }
    // Divergences nonincreasing along the linear order, summing to zero.
    for (const auto& bd : block_divs) {
      Int sum = 0;
      for (std::size_t i = 0; i < bd.size(); ++i) {
        if (i > 0 && bd[i] > bd[i - 1]) return;
        sum += bd[i];
      }
      if (sum != 0) return;
    }
    // Identifying each block must turn the forest into a tree.
    std::map<int, int> node_of;  // vertex -> quotient node
    int next = (int)blocks.size();
    for (std::size_t i = 0; i < whites.size(); ++i) node_of[whites[i]] = block_of[i];
    for (int v = 1; v <= diagram.n; ++v)
      if (diagram.colors[v - 1] == Color::Black) node_of[v] = next++;
    Dsu dsu(next);
    int merges = 0;
    for (const auto& e : diagram.edges) {
      if (!dsu.unite(node_of[e.i], node_of[e.j])) return;  // quotient cycle
      ++merges;
    }
    if (merges != next - 1) return;  // quotient disconnected

    BigInt product = 1;
    for (const auto& bd : block_divs) {
      product *= block_value(bd);
      if (product == 0) return;
    }
    total += product;
  }

  void rec(std::size_t idx) {
    if (idx == whites.size()) {
      finish();
      return;
    }
    // Join an open block (whites are handled in ascending order, so blocks of
    // equal size stay canonically ordered and no partition repeats).
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if ((Int)blocks[b].size() == capacity[b]) continue;
      blocks[b].push_back((int)idx);
      rec(idx + 1);
      blocks[b].pop_back();
    }
    // Open a new block of each still-available size.
    for (auto& [size, count] : size_pool) {
      if (count == 0) continue;
      --count;
      blocks.push_back({(int)idx});
      capacity.push_back(size);
      rec(idx + 1);
      capacity.pop_back();
      blocks.pop_back();
      ++count;
    }
  }
};

}  // namespace

BigInt mu_multiplicity(const SubfloorDiagram& diagram, const Partition& mu1) {
  std::vector<int> whites = diagram.white_vertices();
  if (mu1.sum() != (Int)whites.size())
    throw Error(Errc::SizeMismatch, "|mu1| must equal the number of white vertices");
  std::vector<Int> divs;
  divs.reserve(whites.size());
  for (int v : whites) divs.push_back(diagram.divergence(v));

  PartitionSearch search{whites, divs, diagram, {}, {}, {}, {}, 0};
  for (Int part : mu1.parts) ++search.size_pool[part];
  search.rec(0);

  BigInt weight_product = 1;
  for (const auto& e : diagram.edges) weight_product *= to_big(e.w);
  return search.total * weight_product;
}

namespace {

struct DiagramSearch {
  int n = 0;
  Int wmax = 0;
  std::vector<Color> colors;
  std::vector<int> blacks, whites;
  std::map<Int, int> left_pool, right_pool;
  Int left_remaining = 0, right_remaining = 0;
  std::vector<DiagramEdge> edges;
  std::vector<DiagramEnd> ends;
  const std::function<void(const SubfloorDiagram&)>* yield = nullptr;

  void emit() {
    SubfloorDiagram d;
    d.n = n;
    d.colors = colors;
    d.edges = edges;
    d.ends = ends;
    std::sort(d.edges.begin(), d.edges.end(), [](const DiagramEdge& a, const DiagramEdge& b) {
      return std::tie(a.i, a.j, a.w) < std::tie(b.i, b.j, b.w);
    });
    (*yield)(d);
  }

  // Fills in the incoming and outgoing incidence of each black vertex in
  // order; the two incidences share one expansion factor.
  void rec(std::size_t bi, const Dsu& dsu) {
    if (bi == blacks.size()) {
      if (left_remaining == 0 && right_remaining == 0) emit();
      return;
    }
    Int blacks_left = (Int)(blacks.size() - bi);
    if (left_remaining > blacks_left || right_remaining > blacks_left) return;

    const int b = blacks[bi];
    auto try_out = [&](Int w, const Dsu& mid, bool used_left_end) {
      // Right end of the same weight.
      auto rit = right_pool.find(w);
      if (rit != right_pool.end() && rit->second > 0) {
        --rit->second;
        --right_remaining;
        ends.push_back({b, EndSide::Right, w});
        rec(bi + 1, mid);
        ends.pop_back();
        ++rit->second;
        ++right_remaining;
      }
      // Edge to a white vertex on the right.
      for (int u : whites) {
        if (u < b) continue;
        Dsu next = mid;
        if (!next.unite(b - 1, u - 1)) continue;
        edges.push_back({b, u, w});
        rec(bi + 1, next);
        edges.pop_back();
      }
      (void)used_left_end;
    };

    // Incoming: a left end of any still-available weight...
    for (auto& [w, count] : left_pool) {
      if (count == 0) continue;
      --count;
      --left_remaining;
      ends.push_back({b, EndSide::Left, w});
      try_out(w, dsu, true);
      ends.pop_back();
      ++count;
      ++left_remaining;
    }
    // ...or an edge from a white vertex on the left, any weight up to |nu1|.
    for (int u : whites) {
      if (u > b) break;
      for (Int w = 1; w <= wmax; ++w) {
        Dsu mid = dsu;
        if (!mid.unite(u - 1, b - 1)) break;  // independent of w
        edges.push_back({u, b, w});
        try_out(w, mid, false);
        edges.pop_back();
      }
    }
  }
};

}  // namespace

void enumerate_subfloor_diagrams(const Partition& nu1, const Partition& nu2, int n_white,
                                 int n,
                                 const std::function<void(const SubfloorDiagram&)>& yield) {
  nu1.check();
  nu2.check();
  if (n < 1) throw Error(Errc::InvalidInput, "diagram needs at least one vertex");
  const int n_black = n - n_white;
  if (n_white < 1)
    throw Error(Errc::InfeasibleCounts, "a subfloor diagram needs white vertices");
  if (n_white > n || (Int)nu1.length() > n_black || (Int)nu2.length() > n_black)
    throw Error(Errc::InfeasibleCounts, "vertex counts cannot host the required ends");

  DiagramSearch search;
  search.n = n;
  search.wmax = nu1.sum();
  search.yield = &yield;
  for (Int part : nu1.parts) ++search.left_pool[part];
  for (Int part : nu2.parts) ++search.right_pool[part];
  search.left_remaining = (Int)nu1.length();
  search.right_remaining = (Int)nu2.length();

  // Every placement of the white vertices among the n positions.
  std::vector<int> white_pos(n_white);
  for (int i = 0; i < n_white; ++i) white_pos[i] = i + 1;
  while (true) {
    search.colors.assign((std::size_t)n, Color::Black);
    for (int p : white_pos) search.colors[(std::size_t)p - 1] = Color::White;
    search.blacks.clear();
    search.whites.clear();
    for (int v = 1; v <= n; ++v)
      (search.colors[(std::size_t)v - 1] == Color::Black ? search.blacks : search.whites)
          .push_back(v);
    search.rec(0, Dsu(n));

    // Next combination in lexicographic order.
    int i = n_white - 1;
    while (i >= 0 && white_pos[(std::size_t)i] == n - (n_white - 1 - i)) --i;
    if (i < 0) break;
    ++white_pos[(std::size_t)i];
    for (int j = i + 1; j < n_white; ++j) white_pos[(std::size_t)j] = white_pos[(std::size_t)j - 1] + 1;
  }
}

std::vector<SubfloorDiagram> all_subfloor_diagrams(const Partition& nu1, const Partition& nu2,
                                                   int n_white, int n) {
  std::vector<SubfloorDiagram> out;
  enumerate_subfloor_diagrams(nu1, nu2, n_white, n,
                              [&](const SubfloorDiagram& d) { out.push_back(d); });
  return out;
}

BigInt n_floor(const TangencyProfile& profile) {
  profile.validate();
  if (!profile.mu2.is_transverse())
    throw Error(Errc::UnsupportedProfile, "subfloor counting requires mu2 = (1,...,1)");
  const int n = (int)profile.point_count();
  const int n_white = (int)profile.mu2.length();
  BigInt total = 0;
  enumerate_subfloor_diagrams(profile.nu1, profile.nu2, n_white, n,
                              [&](const SubfloorDiagram& d) {
                                total += mu_multiplicity(d, profile.mu1);
                              });
  return total;
}

}  // namespace tropc
