#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace tropc;
using namespace tropc::testing;

TEST_CASE("lambda order: examples") {
  // Smaller x wins; at equal x the larger y is lambda-smaller.
  CHECK(lambda_less({0, 5}, {0, 3}));
  CHECK(lambda_less({0, 0}, {1, 2}));
  CHECK(lambda_less({2, 5}, {2, 1}));
  CHECK(lambda_less({1, 7}, {2, 0}));
  CHECK(lambda_compare({2, 2}, {2, 2}) == Ordering::Equal);
  CHECK(lambda_compare({1, 0}, {0, 9}) == Ordering::Greater);
}

TEST_CASE("lambda order: total order on a grid") {
  std::vector<LatticePoint> grid;
  for (Int x = 0; x <= 3; ++x)
    for (Int y = 0; y <= 3; ++y) grid.push_back({x, y});

  for (const auto& a : grid)
    for (const auto& b : grid) {
      // Exactly one of <, ==, > holds, and the order is antisymmetric.
      const auto ab = lambda_compare(a, b);
      const auto ba = lambda_compare(b, a);
      if (a == b) {
        CHECK(ab == Ordering::Equal);
      } else {
        CHECK(ab != Ordering::Equal);
        CHECK((ab == Ordering::Less) == (ba == Ordering::Greater));
      }
    }

  // Transitivity.
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (const auto& c : grid)
        if (lambda_less(a, b) && lambda_less(b, c)) CHECK(lambda_less(a, c));

  // The comparator sorts; sorting twice is stable on the result.
  std::vector<LatticePoint> sorted = grid;
  std::sort(sorted.begin(), sorted.end(), lambda_less);
  CHECK(std::is_sorted(sorted.begin(), sorted.end(), lambda_less));
  CHECK(sorted.front() == LatticePoint{0, 3});
  CHECK(sorted.back() == LatticePoint{3, 0});
}

TEST_CASE("polygon normalization and lattice points") {
  // Clockwise input is normalized to counterclockwise with canonical start.
  LatticePolygon ccw({{0, 0}, {3, 0}, {3, 5}, {0, 5}});
  LatticePolygon cw({{0, 5}, {3, 5}, {3, 0}, {0, 0}});
  CHECK(ccw.vertices() == cw.vertices());
  CHECK(ccw.vertices().front() == LatticePoint{0, 0});

  CHECK(ccw.lattice_points().size() == 24);  // (3+1) * (5+1)
  CHECK(ccw.lattice_points().front() == LatticePoint{0, 5});
  CHECK(ccw.lattice_points().back() == LatticePoint{3, 0});
  CHECK(std::is_sorted(ccw.lattice_points().begin(), ccw.lattice_points().end(), lambda_less));

  CHECK(ccw.contains({1, 3}));
  CHECK(ccw.contains({3, 5}));
  CHECK_FALSE(ccw.contains({4, 0}));
  CHECK_FALSE(ccw.contains({1, -1}));

  CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}, {2, 0}}), Error);  // zero area
  // Collinear triple on the boundary is rejected.
  CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}}), Error);
  // Non-convex quadrilateral.
  CHECK_THROWS_AS(LatticePolygon({{0, 0}, {4, 0}, {1, 1}, {0, 4}}), Error);
}

TEST_CASE("extremal points") {
  auto [p1, q1] = extremal_points(load_polygon("rect3x5"));
  CHECK(p1 == LatticePoint{0, 5});
  CHECK(q1 == LatticePoint{3, 0});

  auto [p2, q2] = extremal_points(load_polygon("pentagon"));
  CHECK(p2 == LatticePoint{0, 0});
  CHECK(q2 == LatticePoint{4, 0});

  auto [p3, q3] = extremal_points(LatticePolygon({{0, 0}, {2, 0}, {0, 2}}));
  CHECK(p3 == LatticePoint{0, 2});
  CHECK(q3 == LatticePoint{2, 0});
}

TEST_CASE("boundary side partition") {
  SUBCASE("3x5 rectangle: negative = left+bottom, positive = top+right") {
    LatticePolygon rect = load_polygon("rect3x5");
    const auto& neg = rect.side_edges(Side::Negative);
    const auto& pos = rect.side_edges(Side::Positive);
    REQUIRE(neg.size() == 2);
    REQUIRE(pos.size() == 2);
    CHECK(neg[0].index == rect.named_edge("left"));
    CHECK(neg[1].index == rect.named_edge("bottom"));
    CHECK(pos[0].index == rect.named_edge("top"));
    CHECK(pos[1].index == rect.named_edge("right"));
  }

  SUBCASE("pentagon: negative = bottom edge only") {
    LatticePolygon pent = load_polygon("pentagon");
    const auto& neg = pent.side_edges(Side::Negative);
    const auto& pos = pent.side_edges(Side::Positive);
    REQUIRE(neg.size() == 1);
    CHECK(neg[0].from == LatticePoint{0, 0});
    CHECK(neg[0].to == LatticePoint{4, 0});
    REQUIRE(pos.size() == 4);
    CHECK(pos.front().from == LatticePoint{0, 0});
    CHECK(pos.back().to == LatticePoint{4, 0});
  }

  SUBCASE("both sides are arcs from lambda-min to lambda-max covering all edges") {
    for (const auto& poly : {load_polygon("rect3x5"), load_polygon("pentagon"),
                             load_polygon("unit_square"),
                             LatticePolygon({{0, 0}, {3, 1}, {2, 4}, {0, 3}})}) {
      std::vector<bool> seen(poly.edge_count(), false);
      for (Side side : {Side::Negative, Side::Positive}) {
        const auto& arc = poly.side_edges(side);
        REQUIRE_FALSE(arc.empty());
        CHECK(arc.front().from == poly.lambda_min());
        CHECK(arc.back().to == poly.lambda_max());
        for (std::size_t i = 0; i + 1 < arc.size(); ++i) CHECK(arc[i].to == arc[i + 1].from);
        for (const auto& e : arc) {
          CHECK_FALSE(seen[e.index]);
          seen[e.index] = true;
        }
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
  }
}

TEST_CASE("partition_to_beta") {
  CHECK(partition_to_beta({3}) == std::vector<Int>{0, 0, 1});
  CHECK(partition_to_beta({2, 1}) == std::vector<Int>{1, 1});
  CHECK(partition_to_beta({1, 1, 1}) == std::vector<Int>{3});
  CHECK(partition_to_beta({5, 2}) == std::vector<Int>{0, 1, 0, 0, 1});
  CHECK(partition_to_beta({}) == std::vector<Int>{});
  CHECK_THROWS_AS(partition_to_beta({2, 0}), Error);

  // Round trip: expanding beta recovers the sorted partition.
  for (std::vector<Int> parts :
       {std::vector<Int>{4, 2, 2, 1}, std::vector<Int>{5}, std::vector<Int>{1, 1}}) {
    auto beta = partition_to_beta(parts);
    std::vector<Int> expanded;
    for (std::size_t k = 0; k < beta.size(); ++k)
      for (Int c = 0; c < beta[k]; ++c) expanded.push_back(Int(k + 1));
    std::sort(expanded.rbegin(), expanded.rend());
    CHECK(expanded == parts);
  }
}

TEST_CASE("boundary data validation") {
  LatticePolygon rect = load_polygon("rect3x5");

  SUBCASE("valid fixture: |beta-bar| = 7") {
    BoundaryData beta = load_beta("rect3x5", rect);
    CHECK(beta.total_steps() == 7);
    CHECK(beta.edge_beta(rect.named_edge("bottom")) == std::vector<Int>{0, 0, 1});
    CHECK(beta.edge_beta(rect.named_edge("top")) == std::vector<Int>{3});
    CHECK(beta.edge_beta(rect.named_edge("left")) == std::vector<Int>{0, 1, 1});
    CHECK(beta.edge_step_count(rect.named_edge("left")) == 2);
    CHECK(beta.edge_step_count(rect.named_edge("right")) == 1);
  }

  SUBCASE("unit square fixture: |beta-bar| = 4") {
    LatticePolygon square = load_polygon("unit_square");
    CHECK(load_beta("unit_square", square).total_steps() == 4);
  }

  SUBCASE("I(beta) must match the lattice length") {
    std::map<std::size_t, std::vector<Int>> raw;
    raw[rect.named_edge("bottom")] = {0, 0, 1};
    raw[rect.named_edge("top")] = {3};
    raw[rect.named_edge("left")] = {1, 1};  // I = 3, edge length 5
    raw[rect.named_edge("right")] = {0, 0, 0, 0, 1};
    try {
      BoundaryData::validate(rect, raw);
      FAIL("expected MismatchedEdgeLength");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::MismatchedEdgeLength);
    }
  }

  SUBCASE("every edge needs data") {
    std::map<std::size_t, std::vector<Int>> raw;
    raw[rect.named_edge("bottom")] = {0, 0, 1};
    raw[rect.named_edge("top")] = {3};
    raw[rect.named_edge("left")] = {0, 1, 1};
    try {
      BoundaryData::validate(rect, raw);
      FAIL("expected MissingEdge");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::MissingEdge);
    }
  }

  SUBCASE("trailing zeros are trimmed") {
    std::map<std::size_t, std::vector<Int>> raw;
    raw[rect.named_edge("bottom")] = {0, 0, 1};
    raw[rect.named_edge("top")] = {3, 0, 0};
    raw[rect.named_edge("left")] = {0, 1, 1};
    raw[rect.named_edge("right")] = {0, 0, 0, 0, 1};
    BoundaryData beta = BoundaryData::validate(rect, raw);
    CHECK(beta.edge_beta(rect.named_edge("top")) == std::vector<Int>{3});
    CHECK(beta.total_steps() == 7);
  }
}

TEST_CASE("named edges") {
  LatticePolygon rect = load_polygon("rect3x5");
  CHECK(rect.edge(rect.named_edge("bottom")).first.y == 0);
  CHECK(rect.edge(rect.named_edge("top")).first.y == 5);
  CHECK(rect.edge(rect.named_edge("left")).second.x == 0);
  CHECK(rect.edge(rect.named_edge("right")).first.x == 3);
  CHECK_THROWS_AS(load_polygon("pentagon").named_edge("bottom"), Error);
  CHECK(load_polygon("pentagon").is_axis_aligned_rectangle() == false);
  CHECK(rect.is_axis_aligned_rectangle());
}

TEST_CASE("partitions") {
  Partition p = parts({3, 2, 2, 1});
  CHECK(p.sum() == 8);
  CHECK(p.length() == 4);
  CHECK_FALSE(p.is_transverse());
  CHECK(p.automorphisms() == 2);
  CHECK(parts({1, 1, 1}).is_transverse());
  CHECK(parts({1, 1, 1}).automorphisms() == 6);
  CHECK(parts({2, 2, 1}).automorphisms() == 2);
  CHECK(parts({3, 2, 1}).automorphisms() == 1);

  CHECK(parse_partition("3,1,2").parts == std::vector<Int>{3, 2, 1});
  CHECK(parse_partition("5").parts == std::vector<Int>{5});
  CHECK_THROWS_AS(parse_partition("2,0"), Error);
  CHECK_THROWS_AS((Partition{{1, 2}}).check(), Error);
}

TEST_CASE("tangency profiles") {
  TangencyProfile profile{parts({2}), parts({1, 1}), parts({2, 1}), parts({3})};
  profile.validate();
  CHECK(profile.width() == 2);
  CHECK(profile.height() == 3);
  CHECK(profile.point_count() == 5);  // 1 + 2 + 2 + 1 - 1

  TangencyProfile bad{parts({2}), parts({1, 1}), parts({2}), parts({3})};
  try {
    bad.validate();
    FAIL("expected ProfileMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ProfileMismatch);
  }
}
