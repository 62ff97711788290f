#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "subfloor.hpp"

using namespace tropc;
using namespace tropc::testing;

namespace {

SubfloorDiagram load_diagram(const std::string& name) {
  return diagram_from_json(load_json_file(fixture("diagrams/" + name + ".json")));
}

void check_error(Errc expected, const std::function<void()>& run) {
  try {
    run();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

}  // namespace

TEST_CASE("diagram structure and divergences") {
  SubfloorDiagram f1 = load_diagram("f1");
  f1.validate(parts({1}), parts({1}));
  CHECK(f1.white_vertices() == std::vector<int>{2, 3});
  CHECK(f1.divergence(1) == 0);
  CHECK(f1.divergence(2) == 1);
  CHECK(f1.divergence(3) == -1);
  CHECK(f1.divergence(4) == 0);

  SubfloorDiagram f3 = load_diagram("f3");
  f3.validate(parts({2, 1}), parts({2, 1}));
  CHECK(f3.white_vertices() == std::vector<int>{2, 4, 5, 7});
  CHECK(f3.divergence(2) == 2);
  CHECK(f3.divergence(4) == 1);
  CHECK(f3.divergence(5) == -1);
  CHECK(f3.divergence(7) == -2);
  for (int black : {1, 3, 6, 8}) CHECK(f3.divergence(black) == 0);

  SubfloorDiagram first = load_diagram("fig180_first");
  first.validate(parts({2, 1}), parts({3}));
  CHECK(first.divergence(3) == 3);
  CHECK(first.divergence(4) == -3);
}

TEST_CASE("diagram validation rejects broken structures") {
  SubfloorDiagram f1 = load_diagram("f1");

  SUBCASE("wrong end weights") {
    check_error(Errc::InvalidInput, [&] { f1.validate(parts({2}), parts({1})); });
  }
  SUBCASE("edge between two whites") {
    SubfloorDiagram d = f1;
    d.edges.push_back({2, 3, 1});
    check_error(Errc::InvalidInput, [&] { d.validate(parts({1}), parts({1})); });
  }
  SUBCASE("cycle") {
    SubfloorDiagram d = f1;
    d.colors[2] = Color::Black;  // B W B B
    d.edges = {{1, 2, 1}, {2, 3, 1}, {2, 4, 2}, {2, 4, 2}};
    check_error(Errc::InvalidInput, [&] { d.validate(parts({1}), parts({1})); });
  }
  SUBCASE("end on a white vertex") {
    SubfloorDiagram d = f1;
    d.ends[0].v = 2;
    check_error(Errc::InvalidInput, [&] { d.validate(parts({1}), parts({1})); });
  }
  SUBCASE("black vertex of wrong valence") {
    SubfloorDiagram d = f1;
    d.ends.push_back({1, EndSide::Left, 1});
    check_error(Errc::InvalidInput, [&] { d.validate(parts({1, 1}), parts({1})); });
  }
  SUBCASE("black vertex with nonzero divergence") {
    SubfloorDiagram d = f1;
    d.ends[0].w = 2;  // in 2, out 1 at vertex 1
    check_error(Errc::InvalidInput, [&] { d.validate(parts({2}), parts({1})); });
  }
  SUBCASE("nonpositive weight") {
    SubfloorDiagram d = f1;
    d.edges[0].w = 0;
    check_error(Errc::InvalidInput, [&] { d.validate(parts({1}), parts({1})); });
  }
}

TEST_CASE("block fans") {
  SUBCASE("singleton zero fan is degenerate") {
    CHECK_FALSE(block_fan_polygon({0}).has_value());
    CHECK(block_multiplicity({0}) == 1);
  }

  SUBCASE("(1,-1) spans the unit-height triangle") {
    auto fan = block_fan_polygon({1, -1});
    REQUIRE(fan.has_value());
    CHECK(fan->polygon.vertices() == std::vector<LatticePoint>{{0, 0}, {2, 0}, {1, 1}});
    CHECK(fan->delta_plus == PathPoints{{0, 0}, {1, 1}, {2, 0}});
    CHECK(block_multiplicity({1, -1}) == 2);
  }

  SUBCASE("(3,-3) spans a tall triangle of double area 6") {
    CHECK(block_multiplicity({3, -3}) == 6);
  }

  SUBCASE("(2,1,-1,-2) spans the pentagon with multiplicity 100") {
    auto fan = block_fan_polygon({2, 1, -1, -2});
    REQUIRE(fan.has_value());
    CHECK(fan->polygon.vertices() ==
          std::vector<LatticePoint>{{0, 0}, {4, 0}, {3, 2}, {2, 3}, {1, 2}});
    CHECK(fan->delta_plus == PathPoints{{0, 0}, {1, 2}, {2, 3}, {3, 2}, {4, 0}});
    CHECK(block_multiplicity({2, 1, -1, -2}) == 100);
  }

  SUBCASE("invalid divergence sequences") {
    check_error(Errc::NotDecreasing, [] { block_fan_polygon({-1, 1}); });
    check_error(Errc::NotDecreasing, [] { block_fan_polygon({2, 1, 2, -5}); });
    check_error(Errc::NonzeroSum, [] { block_fan_polygon({2, -1}); });
    check_error(Errc::InvalidInput, [] { block_fan_polygon({0, 0}); });
    check_error(Errc::InvalidInput, [] { block_fan_polygon({}); });
  }
}

TEST_CASE("mu-multiplicity of the fixture diagrams") {
  CHECK(mu_multiplicity(load_diagram("f1"), parts({2})) == 2);
  CHECK(mu_multiplicity(load_diagram("f3"), parts({4})) == 400);
  CHECK(mu_multiplicity(load_diagram("fig180_first"), parts({2})) == 36);

  // Splitting the whites of f1 into two singleton blocks leaves nonzero
  // divergences inside each block, so mu1 = (1,1) contributes nothing.
  CHECK(mu_multiplicity(load_diagram("f1"), parts({1, 1})) == 0);

  check_error(Errc::SizeMismatch,
              [] { mu_multiplicity(load_diagram("f1"), parts({1})); });
  check_error(Errc::SizeMismatch,
              [] { mu_multiplicity(load_diagram("f3"), parts({2})); });
}

TEST_CASE("diagram enumeration") {
  SUBCASE("nu = ((1),(1)): one diagram carries all the multiplicity") {
    auto diagrams = all_subfloor_diagrams(parts({1}), parts({1}), 2, 4);
    CHECK(!diagrams.empty());
    std::vector<SubfloorDiagram> nonzero;
    for (const auto& d : diagrams) {
      d.validate(parts({1}), parts({1}));
      if (mu_multiplicity(d, parts({2})) != 0) nonzero.push_back(d);
    }
    REQUIRE(nonzero.size() == 1);
    SubfloorDiagram f1 = load_diagram("f1");
    CHECK(nonzero[0].colors == f1.colors);
    CHECK(nonzero[0].edges == f1.edges);
    CHECK(nonzero[0].ends == f1.ends);
    CHECK(mu_multiplicity(nonzero[0], parts({2})) == 2);
  }

  SUBCASE("nu = ((2,1),(3)): eight contributing diagrams totaling 180") {
    auto diagrams = all_subfloor_diagrams(parts({2, 1}), parts({3}), 2, 5);
    BigInt total = 0;
    std::size_t contributing = 0;
    bool found_first = false;
    SubfloorDiagram first = load_diagram("fig180_first");
    for (const auto& d : diagrams) {
      d.validate(parts({2, 1}), parts({3}));
      BigInt m = mu_multiplicity(d, parts({2}));
      total += m;
      if (m != 0) ++contributing;
      found_first |= d.colors == first.colors && d.edges == first.edges && d.ends == first.ends;
    }
    CHECK(found_first);
    CHECK(contributing == 8);
    CHECK(total == 180);
  }

  SUBCASE("no duplicates, and every diagram validates") {
    for (auto [nu1, nu2, n_white, n] :
         {std::tuple{parts({1}), parts({1}), 2, 4}, std::tuple{parts({2, 1}), parts({3}), 2, 5},
          std::tuple{parts({2}), parts({2}), 3, 5}}) {
      auto diagrams = all_subfloor_diagrams(nu1, nu2, n_white, n);
      std::vector<std::string> keys;
      for (const auto& d : diagrams) {
        d.validate(nu1, nu2);
        keys.push_back(diagram_to_json(d).dump());
        // Conservation: black divergences vanish and the total flow is
        // |nu1| - |nu2| = 0, so the white divergences sum to zero.
        Int sum = 0;
        for (int w : d.white_vertices()) sum += d.divergence(w);
        CHECK(sum == 0);
      }
      std::sort(keys.begin(), keys.end());
      CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
    }
  }

  SUBCASE("infeasible counts") {
    check_error(Errc::InfeasibleCounts,
                [] { all_subfloor_diagrams(parts({1}), parts({1}), 0, 3); });
    check_error(Errc::InfeasibleCounts,
                [] { all_subfloor_diagrams(parts({1, 1}), parts({2}), 3, 4); });
    check_error(Errc::InfeasibleCounts,
                [] { all_subfloor_diagrams(parts({1}), parts({1}), 5, 4); });
  }
}

TEST_CASE("subfloor curve counts") {
  SUBCASE("golden values") {
    TangencyProfile p1{parts({2}), parts({1, 1}), parts({1}), parts({1})};
    CHECK(n_floor(p1) == 2);
    TangencyProfile p180{parts({2}), parts({1, 1}), parts({2, 1}), parts({3})};
    CHECK(n_floor(p180) == 180);
  }

  SUBCASE("full tangency in both fibers: N = c * x^(c+1)") {
    for (Int c : {2, 3}) {
      std::vector<Int> mu2((std::size_t)c, 1);
      for (Int x = 1; x <= (c == 2 ? 5 : 4); ++x) {
        TangencyProfile p{parts({c}), parts(mu2), parts({x}), parts({x})};
        BigInt expect = to_big(c);
        for (Int i = 0; i <= c; ++i) expect *= to_big(x);
        CHECK(n_floor(p) == expect);
      }
    }
  }

  SUBCASE("non-transverse infinity-section contact is rejected") {
    TangencyProfile p{parts({2}), parts({2}), parts({2}), parts({2})};
    check_error(Errc::UnsupportedProfile, [&] { n_floor(p); });
  }
}
