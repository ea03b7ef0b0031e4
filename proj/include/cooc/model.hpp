#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/geometry.hpp"

namespace cooc {

// A candidate token pair: (side-1 token index, side-2 token index).
using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Token pairs co-occur when their coordinate lies strictly closer than
// delta to the map ("closer than": ties at exactly delta do not count).
// Delta has no default; it depends on language pair, genre and application.
struct DistanceModel {
  BitextMap map;
  double delta = 0;
};

// Throws CoocError(bad_config) when delta is negative or not finite.
DistanceModel make_distance_model(BitextMap map, double delta);

// Token pairs co-occur when their segments fall in the same alignment
// block.
struct BoundaryModel {
  SegmentAlignment alignment;
};

// Conjunction of the two: both constraints must hold.
struct CombinedModel {
  DistanceModel distance;
  BoundaryModel boundary;
};

using CoocModel = std::variant<BoundaryModel, DistanceModel, CombinedModel>;

// The boolean co-occurrence predicate. Tokens must come from the halves
// the model was built over.
bool co_occurs(const CoocModel& model, const Token& s, const Token& t);

// All pairs for which co_occurs holds, sorted by (side-1 index, side-2
// index). The distance model is enumerated by a band sweep that exploits
// map monotonicity: for each side-1 token at x, only side-2 tokens whose
// coordinate lies in [min_y_at_or_after(x-delta)-delta,
// max_y_at_or_before(x+delta)+delta] can be within delta of the map near x,
// and each candidate is then tested exactly. Never the exhaustive
// n*m double loop unless the answer itself is that large.
std::vector<Edge> candidate_edges(const CoocModel& model,
                                  const TokenizedHalf& half1,
                                  const TokenizedHalf& half2);

}  // namespace cooc
