#pragma once

#include <cstddef>
#include <vector>

#include "cooc/counting.hpp"
#include "cooc/model.hpp"

namespace cooc::oracle {

// Exhaustive-search reference implementations. Used by the test suites and
// the `verify` CLI command only; never on the production counting path.
// Size caps keep every call in the milliseconds; exceeding one is an
// error, never silent truncation.

inline constexpr std::size_t kMaxBruteVertices = 20;  // per graph, both sides
inline constexpr std::size_t kMaxBruteTokens = 200;   // per half

// Maximum matching size by exhaustive search over edge subsets (include /
// skip each edge whose endpoints are free) with pruning.
// Throws CoocError(too_large) when |left|+|right| > kMaxBruteVertices.
std::size_t brute_matching(const CoocGraph& graph);

// Minimum edge cover size by exhaustive branching over the lowest
// uncovered vertex's incident edges.
// Throws too_large as above; isolated_vertex when some vertex has no edge.
std::size_t brute_edge_cover(const CoocGraph& graph);

// Minimum vertex cover size by exhaustive branching over an uncovered
// edge's two endpoints. Throws too_large as above.
std::size_t brute_vertex_cover(const CoocGraph& graph);

// The co-occurrence predicate evaluated over every token pair; the
// reference for candidate_edges.
std::vector<Edge> brute_candidate_edges(const CoocModel& model,
                                        const TokenizedHalf& half1,
                                        const TokenizedHalf& half2);

// Reference for count_all: exhaustive predicate evaluation, the shared
// (contract-fixed) filter pipeline, then brute matchings/covers per type
// pair. Must equal count_all exactly.
// Throws too_large when a half exceeds kMaxBruteTokens or a per-pair graph
// exceeds kMaxBruteVertices.
CoocTable brute_count_all(const CoocModel& model, const TokenizedHalf& half1,
                          const TokenizedHalf& half2,
                          CountingAssumption assumption,
                          const FilterSet& filters = {});

}  // namespace cooc::oracle
