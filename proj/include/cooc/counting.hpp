#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/filters.hpp"
#include "cooc/model.hpp"

namespace cooc {

// The bipartite graph of one word-type pair: occurrences of u on the left,
// occurrences of v on the right, an edge per co-occurring token pair.
// Edges are (left_pos, right_pos) positions into the two vertex lists, not
// token indices.
struct CoocGraph {
  std::vector<std::uint32_t> left_tokens;
  std::vector<std::uint32_t> right_tokens;
  std::vector<Edge> edges;

  // Convenience for graphs whose identity of vertices does not matter:
  // vertices 0..n_left-1 and 0..n_right-1. Validates bounds, dedups edges.
  static CoocGraph make(std::uint32_t n_left, std::uint32_t n_right,
                        std::vector<Edge> edges);
};

enum class CountingAssumption {
  naive,        // product of frequencies; edge count on graphs
  at_most_one,  // each word translates at most one word; maximum matching
  at_least_one  // each word translates at least one word; min edge cover
};

// Closed forms on one aligned segment pair: e*f, min(e,f), max(e,f).
// All three are 0 whenever e or f is 0 (an absent word co-occurs with
// nothing, so max is clamped).
std::uint64_t count_segment_pair(SegmentPairStats stats,
                                 CountingAssumption assumption);

// Size of a maximum-cardinality matching (Hopcroft-Karp).
std::size_t max_matching(const CoocGraph& graph);

// Size of a minimum edge cover: isolated vertices are dropped first, then
// the Gallai identity (non-isolated vertices minus maximum matching)
// applies. 0 for an edgeless graph.
std::size_t min_edge_cover(const CoocGraph& graph);

// Size of a minimum vertex cover, materialized through the Koenig
// construction from a maximum matching. On bipartite graphs this always
// equals max_matching; it is exposed for study alongside the edge cover,
// which is the quantity the at_least_one assumption uses.
std::size_t min_vertex_cover(const CoocGraph& graph);

struct CoocEntry {
  std::string u;
  std::string v;
  std::uint64_t count = 0;

  friend bool operator==(const CoocEntry&, const CoocEntry&) = default;
};

// Count table over word-type pairs. Only positive counts are stored;
// iteration order is deterministic: count descending, then (u,v)
// lexicographic (bytewise).
class CoocTable {
 public:
  CoocTable() = default;
  explicit CoocTable(std::vector<CoocEntry> entries);

  const std::vector<CoocEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::optional<std::uint64_t> lookup(std::string_view u,
                                      std::string_view v) const;
  std::map<std::pair<std::string, std::string>, std::uint64_t> as_map() const;

  friend bool operator==(const CoocTable&, const CoocTable&) = default;

 private:
  std::vector<CoocEntry> entries_;
};

// Per-type-pair graphs built from an edge list in one grouping pass;
// memory is proportional to the edge count. Returned sorted by type-id
// pair for determinism.
std::vector<std::pair<std::pair<TypeId, TypeId>, CoocGraph>> group_by_type(
    const TokenizedHalf& half1, const TokenizedHalf& half2,
    std::span<const Edge> edges);

// Per-pair counting over an already filtered edge list: naive counts
// edges, at_most_one a maximum matching, at_least_one a minimum edge
// cover; each consumed link adds 1 to its own type pair.
CoocTable count_from_edges(const TokenizedHalf& half1,
                           const TokenizedHalf& half2,
                           std::span<const Edge> residual,
                           std::span<const Edge> consumed,
                           CountingAssumption assumption);

// Full pipeline: candidate edges under the model, filter pipeline, then
// per-pair counting (naive: edge count; at_most_one: maximum matching;
// at_least_one: minimum edge cover). Consumed filter links add 1 each to
// their own pair. Under a pure boundary model with no filters the
// per-block closed forms are used as a fast path; the result is identical
// to the graph path.
CoocTable count_all(const CoocModel& model, const TokenizedHalf& half1,
                    const TokenizedHalf& half2, CountingAssumption assumption,
                    const FilterSet& filters = {});

// Same contract, forcing the per-pair graph path regardless of model.
CoocTable count_all_graph(const CoocModel& model, const TokenizedHalf& half1,
                          const TokenizedHalf& half2,
                          CountingAssumption assumption,
                          const FilterSet& filters = {});

// Closed forms summed per alignment block.
CoocTable count_blocks(const SegmentAlignment& alignment,
                       const TokenizedHalf& half1, const TokenizedHalf& half2,
                       CountingAssumption assumption);

}  // namespace cooc
