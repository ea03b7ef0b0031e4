#include "cooc/counting.hpp"

#include <random>

#include <doctest.h>

#include "cooc/matching.hpp"
#include "cooc/oracle.hpp"
#include "test_util.hpp"

using namespace cooc;
using cooctest::complete_graph;
using cooctest::half_from_segments;
using cooctest::random_graph;
using cooctest::strip_isolated;

TEST_CASE("closed forms on one aligned segment pair") {
  CHECK(count_segment_pair({3, 3}, CountingAssumption::naive) == 9);
  CHECK(count_segment_pair({3, 3}, CountingAssumption::at_most_one) == 3);
  CHECK(count_segment_pair({3, 3}, CountingAssumption::at_least_one) == 3);

  CHECK(count_segment_pair({2, 5}, CountingAssumption::naive) == 10);
  CHECK(count_segment_pair({2, 5}, CountingAssumption::at_most_one) == 2);
  CHECK(count_segment_pair({2, 5}, CountingAssumption::at_least_one) == 5);

  // An absent word co-occurs with nothing; max(0,7) is clamped.
  for (auto assumption :
       {CountingAssumption::naive, CountingAssumption::at_most_one,
        CountingAssumption::at_least_one}) {
    CHECK(count_segment_pair({0, 7}, assumption) == 0);
    CHECK(count_segment_pair({7, 0}, assumption) == 0);
  }
}

TEST_CASE("matching and covers on complete bipartite graphs") {
  const CoocGraph k33 = complete_graph(3, 3);
  const CoocGraph k23 = complete_graph(2, 3);

  CHECK(max_matching(k33) == 3);
  CHECK(max_matching(k23) == 2);
  CHECK(oracle::brute_matching(k33) == 3);
  CHECK(oracle::brute_matching(k23) == 2);

  CHECK(min_edge_cover(k33) == 3);
  CHECK(min_edge_cover(k23) == 3);
  CHECK(oracle::brute_edge_cover(k33) == 3);
  CHECK(oracle::brute_edge_cover(k23) == 3);

  CHECK(min_vertex_cover(k33) == 3);
  CHECK(min_vertex_cover(k23) == 2);
  CHECK(oracle::brute_vertex_cover(k33) == 3);
  CHECK(oracle::brute_vertex_cover(k23) == 2);
}

TEST_CASE("matching and covers on degenerate graphs") {
  const CoocGraph empty = CoocGraph::make(3, 2, {});
  CHECK(max_matching(empty) == 0);
  CHECK(min_edge_cover(empty) == 0);
  CHECK(min_vertex_cover(empty) == 0);

  const CoocGraph single = CoocGraph::make(1, 1, {{0, 0}});
  CHECK(max_matching(single) == 1);
  CHECK(min_edge_cover(single) == 1);
  CHECK(min_vertex_cover(single) == 1);

  // Path of 3 edges: a-x, x-b ... as bipartite left {a,b}, right {x,y}:
  // a-x, b-x, b-y.
  const CoocGraph path = CoocGraph::make(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  CHECK(max_matching(path) == 2);
  CHECK(min_edge_cover(path) == 2);
  CHECK(min_vertex_cover(path) == 2);
}

TEST_CASE("isolated vertices do not change matching or edge cover") {
  // Right vertex 2 is isolated; edge cover ignores it by definition here.
  const CoocGraph g = CoocGraph::make(2, 3, {{0, 0}, {1, 1}});
  CHECK(max_matching(g) == 2);
  CHECK(min_edge_cover(g) == 2);
}

TEST_CASE("production equals brute force on random graphs") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<std::uint32_t> sizes(1, 8);
  std::uniform_real_distribution<double> densities(0.05, 0.95);
  for (int iter = 0; iter < 150; ++iter) {
    const CoocGraph g = random_graph(rng, sizes(rng), sizes(rng), densities(rng));
    const std::size_t matching = max_matching(g);
    CHECK(matching == oracle::brute_matching(g));
    CHECK(min_vertex_cover(g) == oracle::brute_vertex_cover(g));

    const CoocGraph stripped = strip_isolated(g);
    if (!stripped.edges.empty()) {
      CHECK(min_edge_cover(g) == oracle::brute_edge_cover(stripped));
    }
  }
}

TEST_CASE("Koenig and Gallai identities hold on random graphs") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<std::uint32_t> sizes(1, 10);
  std::uniform_real_distribution<double> densities(0.05, 0.95);
  for (int iter = 0; iter < 200; ++iter) {
    const CoocGraph g = random_graph(rng, sizes(rng), sizes(rng), densities(rng));
    CHECK(min_vertex_cover(g) == max_matching(g));

    const CoocGraph stripped = strip_isolated(g);
    CHECK(max_matching(stripped) + min_edge_cover(stripped) ==
          stripped.left_tokens.size() + stripped.right_tokens.size());
  }
}

TEST_CASE("ordered matching matches Hopcroft-Karp sizes") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<std::uint32_t> sizes(1, 12);
  std::uniform_real_distribution<double> densities(0.05, 0.95);
  for (int iter = 0; iter < 100; ++iter) {
    const CoocGraph g = random_graph(rng, sizes(rng), sizes(rng), densities(rng));
    CHECK(hopcroft_karp(g.left_tokens.size(), g.right_tokens.size(), g.edges).size ==
          ordered_matching(g.left_tokens.size(), g.right_tokens.size(), g.edges).size);
  }
}

TEST_CASE("count_all on the 3x3 aligned block") {
  const TokenizedHalf h1 = half_from_segments({{"u", "u", "u"}});
  const TokenizedHalf h2 = half_from_segments({{"v", "v", "v"}});
  const CoocModel model =
      BoundaryModel{SegmentAlignment::load({{{0}, {0}}}, h1, h2)};

  CHECK(count_all(model, h1, h2, CountingAssumption::naive).lookup("u", "v") == 9);
  CHECK(count_all(model, h1, h2, CountingAssumption::at_most_one).lookup("u", "v") == 3);
  CHECK(count_all(model, h1, h2, CountingAssumption::at_least_one).lookup("u", "v") == 3);
}

TEST_CASE("count_all on the non-transitive chain") {
  // Two u tokens, two v tokens, distance model admitting only the 3-edge
  // path u1-v1, u2-v1, u2-v2.
  const TokenizedHalf h1 = TokenizedHalf::from_records(
      {{"u", 8, 12, 0u}, {"u", 18, 22, 0u}}, false, 100, 1);
  const TokenizedHalf h2 = TokenizedHalf::from_records(
      {{"v", 13, 17, 0u}, {"v", 23, 27, 0u}}, false, 100, 1);
  const CoocModel model = make_distance_model(
      BitextMap::load({}, BitextSpace{100, 100, AxisUnits::characters}), 8.0);

  REQUIRE(candidate_edges(model, h1, h2).size() == 3);
  CHECK(count_all(model, h1, h2, CountingAssumption::naive).lookup("u", "v") == 3);
  CHECK(count_all(model, h1, h2, CountingAssumption::at_most_one).lookup("u", "v") == 2);
  CHECK(count_all(model, h1, h2, CountingAssumption::at_least_one).lookup("u", "v") == 2);
}

TEST_CASE("count_all on an empty bitext") {
  const TokenizedHalf empty;
  const CoocModel model =
      BoundaryModel{SegmentAlignment::load({}, empty, empty)};
  CHECK(count_all(model, empty, empty, CountingAssumption::naive).empty());
}

TEST_CASE("graph path equals the per-block closed forms") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> seg_count(1, 12);
  std::uniform_int_distribution<int> seg_len(1, 10);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<std::vector<std::string>> segs1, segs2;
    const int n1 = seg_count(rng), n2 = seg_count(rng);
    for (int s = 0; s < n1; ++s) {
      std::vector<std::string> seg;
      for (int w = seg_len(rng); w > 0; --w)
        seg.push_back(cooctest::random_word(rng, 8, "a"));
      segs1.push_back(std::move(seg));
    }
    for (int s = 0; s < n2; ++s) {
      std::vector<std::string> seg;
      for (int w = seg_len(rng); w > 0; --w)
        seg.push_back(cooctest::random_word(rng, 8, "b"));
      segs2.push_back(std::move(seg));
    }
    const TokenizedHalf h1 = half_from_segments(segs1);
    const TokenizedHalf h2 = half_from_segments(segs2);
    const SegmentAlignment alignment = SegmentAlignment::load(
        cooctest::random_blocks(rng, h1.segment_count(), h2.segment_count()),
        h1, h2);
    const CoocModel model = BoundaryModel{alignment};

    for (auto assumption :
         {CountingAssumption::naive, CountingAssumption::at_most_one,
          CountingAssumption::at_least_one}) {
      const CoocTable closed = count_blocks(alignment, h1, h2, assumption);
      const CoocTable graph = count_all_graph(model, h1, h2, assumption);
      const CoocTable api = count_all(model, h1, h2, assumption);
      CHECK(closed == graph);
      CHECK(closed == api);
    }
  }
}

TEST_CASE("count sandwich: at_most_one <= at_least_one <= naive") {
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> deltas(1.0, 25.0);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<std::vector<std::string>> segs1, segs2;
    for (int s = 0; s < 10; ++s) {
      std::vector<std::string> a, b;
      for (int w = 0; w < 6; ++w) {
        a.push_back(cooctest::random_word(rng, 6, "a"));
        b.push_back(cooctest::random_word(rng, 6, "b"));
      }
      segs1.push_back(a);
      segs2.push_back(b);
    }
    const TokenizedHalf h1 = half_from_segments(segs1);
    const TokenizedHalf h2 = half_from_segments(segs2);
    const BitextSpace space{h1.length(AxisUnits::characters),
                            h2.length(AxisUnits::characters),
                            AxisUnits::characters};
    const CoocModel model = make_distance_model(
        cooctest::random_map(rng, space, 6), deltas(rng));

    const auto naive = count_all(model, h1, h2, CountingAssumption::naive).as_map();
    const auto amo = count_all(model, h1, h2, CountingAssumption::at_most_one).as_map();
    const auto alo = count_all(model, h1, h2, CountingAssumption::at_least_one).as_map();

    CHECK(naive.size() == amo.size());
    CHECK(naive.size() == alo.size());
    for (const auto& [pair, n] : naive) {
      REQUIRE(amo.count(pair) == 1);
      REQUIRE(alo.count(pair) == 1);
      CHECK(amo.at(pair) <= alo.at(pair));
      CHECK(alo.at(pair) <= n);
    }
  }
}

TEST_CASE("counts never decrease as delta grows (naive, at_most_one)") {
  std::mt19937 rng(808);
  std::uniform_real_distribution<double> deltas(0.0, 20.0);
  for (int iter = 0; iter < 15; ++iter) {
    std::vector<std::vector<std::string>> segs1, segs2;
    for (int s = 0; s < 8; ++s) {
      std::vector<std::string> a, b;
      for (int w = 0; w < 5; ++w) {
        a.push_back(cooctest::random_word(rng, 5, "a"));
        b.push_back(cooctest::random_word(rng, 5, "b"));
      }
      segs1.push_back(a);
      segs2.push_back(b);
    }
    const TokenizedHalf h1 = half_from_segments(segs1);
    const TokenizedHalf h2 = half_from_segments(segs2);
    const BitextSpace space{h1.length(AxisUnits::characters),
                            h2.length(AxisUnits::characters),
                            AxisUnits::characters};
    const BitextMap map = cooctest::random_map(rng, space, 5);
    double d1 = deltas(rng), d2 = deltas(rng);
    if (d1 > d2) std::swap(d1, d2);

    for (auto assumption :
         {CountingAssumption::naive, CountingAssumption::at_most_one}) {
      const auto small =
          count_all(make_distance_model(map, d1), h1, h2, assumption).as_map();
      const auto large =
          count_all(make_distance_model(map, d2), h1, h2, assumption).as_map();
      for (const auto& [pair, n] : small) {
        REQUIRE(large.count(pair) == 1);
        CHECK(n <= large.at(pair));
      }
    }
  }
}

TEST_CASE("tables are deterministic and ordered") {
  const TokenizedHalf h1 = half_from_segments({{"b", "a", "a"}});
  const TokenizedHalf h2 = half_from_segments({{"y", "x"}});
  const CoocModel model =
      BoundaryModel{SegmentAlignment::load({{{0}, {0}}}, h1, h2)};

  const CoocTable t1 = count_all(model, h1, h2, CountingAssumption::naive);
  const CoocTable t2 = count_all(model, h1, h2, CountingAssumption::naive);
  CHECK(t1 == t2);

  // Count descending, then lexicographic.
  REQUIRE(t1.size() == 4);
  CHECK(t1.entries()[0] == CoocEntry{"a", "x", 2});
  CHECK(t1.entries()[1] == CoocEntry{"a", "y", 2});
  CHECK(t1.entries()[2] == CoocEntry{"b", "x", 1});
  CHECK(t1.entries()[3] == CoocEntry{"b", "y", 1});
}

TEST_CASE("graph construction groups by type pair") {
  const TokenizedHalf h1 = half_from_segments({{"b", "a", "a"}});
  const TokenizedHalf h2 = half_from_segments({{"x", "x"}});
  const std::vector<Edge> edges{{0, 0}, {0, 1}, {1, 0}, {2, 1}};
  const auto groups = group_by_type(h1, h2, edges);
  REQUIRE(groups.size() == 2);

  // Type ids follow first appearance: b=0, a=1 on the left; x=0 on the
  // right. Groups come back sorted by id pair: (b,x) then (a,x).
  const CoocGraph& bx = groups[0].second;
  CHECK(bx.left_tokens == std::vector<std::uint32_t>{0});
  CHECK(bx.right_tokens == std::vector<std::uint32_t>{0, 1});
  CHECK(bx.edges == std::vector<Edge>{{0, 0}, {0, 1}});

  const CoocGraph& ax = groups[1].second;
  CHECK(ax.left_tokens == std::vector<std::uint32_t>{1, 2});
  CHECK(ax.right_tokens == std::vector<std::uint32_t>{0, 1});
  CHECK(ax.edges == std::vector<Edge>{{0, 0}, {1, 1}});
}
