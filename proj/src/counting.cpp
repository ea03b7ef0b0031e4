#include "cooc/counting.hpp"

#include <algorithm>
#include <unordered_map>

#include "cooc/errors.hpp"
#include "cooc/matching.hpp"

namespace cooc {

namespace {

std::uint64_t pair_key(TypeId u, TypeId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

CoocGraph CoocGraph::make(std::uint32_t n_left, std::uint32_t n_right,
                          std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.first >= n_left || e.second >= n_right) {
      throw CoocError(Errc::bad_input, "edge endpoint out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  CoocGraph g;
  g.left_tokens.resize(n_left);
  g.right_tokens.resize(n_right);
  for (std::uint32_t i = 0; i < n_left; ++i) g.left_tokens[i] = i;
  for (std::uint32_t j = 0; j < n_right; ++j) g.right_tokens[j] = j;
  g.edges = std::move(edges);
  return g;
}

std::uint64_t count_segment_pair(SegmentPairStats stats,
                                 CountingAssumption assumption) {
  if (stats.e == 0 || stats.f == 0) return 0;
  switch (assumption) {
    case CountingAssumption::naive:
      return stats.e * stats.f;
    case CountingAssumption::at_most_one:
      return std::min(stats.e, stats.f);
    case CountingAssumption::at_least_one:
      return std::max(stats.e, stats.f);
  }
  return 0;
}

std::size_t max_matching(const CoocGraph& graph) {
  return hopcroft_karp(graph.left_tokens.size(), graph.right_tokens.size(),
                       graph.edges)
      .size;
}

std::size_t min_edge_cover(const CoocGraph& graph) {
  if (graph.edges.empty()) return 0;
  std::vector<char> deg_l(graph.left_tokens.size(), 0);
  std::vector<char> deg_r(graph.right_tokens.size(), 0);
  for (const Edge& e : graph.edges) {
    deg_l[e.first] = 1;
    deg_r[e.second] = 1;
  }
  const std::size_t non_isolated =
      static_cast<std::size_t>(std::count(deg_l.begin(), deg_l.end(), 1)) +
      static_cast<std::size_t>(std::count(deg_r.begin(), deg_r.end(), 1));
  return non_isolated - max_matching(graph);
}

std::size_t min_vertex_cover(const CoocGraph& graph) {
  const std::size_t n_left = graph.left_tokens.size();
  const std::size_t n_right = graph.right_tokens.size();
  const Matching m = hopcroft_karp(n_left, n_right, graph.edges);

  // Koenig: Z = vertices reachable from free left vertices by alternating
  // paths (non-matching edges left-to-right, matching edges right-to-left);
  // the cover is (L \ Z) union (R intersect Z).
  std::vector<std::vector<std::uint32_t>> adj(n_left);
  for (const Edge& e : graph.edges) adj[e.first].push_back(e.second);

  std::vector<char> z_left(n_left, 0), z_right(n_right, 0);
  std::vector<std::uint32_t> stack;
  for (std::size_t u = 0; u < n_left; ++u) {
    if (m.pair_left[u] < 0) {
      z_left[u] = 1;
      stack.push_back(static_cast<std::uint32_t>(u));
    }
  }
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (std::uint32_t v : adj[u]) {
      if (z_right[v]) continue;
      if (m.pair_left[u] == static_cast<std::int32_t>(v)) continue;
      z_right[v] = 1;
      const std::int32_t w = m.pair_right[v];
      if (w >= 0 && !z_left[w]) {
        z_left[w] = 1;
        stack.push_back(static_cast<std::uint32_t>(w));
      }
    }
  }

  std::size_t cover = 0;
  for (std::size_t u = 0; u < n_left; ++u) {
    if (!z_left[u]) ++cover;
  }
  for (std::size_t v = 0; v < n_right; ++v) {
    if (z_right[v]) ++cover;
  }
  return cover;
}

CoocTable::CoocTable(std::vector<CoocEntry> entries)
    : entries_(std::move(entries)) {
  std::erase_if(entries_, [](const CoocEntry& e) { return e.count == 0; });
  std::sort(entries_.begin(), entries_.end(),
            [](const CoocEntry& a, const CoocEntry& b) {
              if (a.count != b.count) return a.count > b.count;
              if (a.u != b.u) return a.u < b.u;
              return a.v < b.v;
            });
}

std::optional<std::uint64_t> CoocTable::lookup(std::string_view u,
                                               std::string_view v) const {
  for (const CoocEntry& e : entries_) {
    if (e.u == u && e.v == v) return e.count;
  }
  return std::nullopt;
}

std::map<std::pair<std::string, std::string>, std::uint64_t> CoocTable::as_map()
    const {
  std::map<std::pair<std::string, std::string>, std::uint64_t> out;
  for (const CoocEntry& e : entries_) out[{e.u, e.v}] = e.count;
  return out;
}

std::vector<std::pair<std::pair<TypeId, TypeId>, CoocGraph>> group_by_type(
    const TokenizedHalf& half1, const TokenizedHalf& half2,
    std::span<const Edge> edges) {
  struct Group {
    std::vector<Edge> token_edges;
  };
  std::unordered_map<std::uint64_t, Group> groups;
  for (const Edge& e : edges) {
    const TypeId u = half1.token(e.first).type;
    const TypeId v = half2.token(e.second).type;
    groups[pair_key(u, v)].token_edges.push_back(e);
  }

  std::vector<std::pair<std::pair<TypeId, TypeId>, CoocGraph>> out;
  out.reserve(groups.size());
  for (auto& [key, group] : groups) {
    CoocGraph g;
    auto& te = group.token_edges;
    for (const Edge& e : te) {
      g.left_tokens.push_back(e.first);
      g.right_tokens.push_back(e.second);
    }
    std::sort(g.left_tokens.begin(), g.left_tokens.end());
    g.left_tokens.erase(std::unique(g.left_tokens.begin(), g.left_tokens.end()),
                        g.left_tokens.end());
    std::sort(g.right_tokens.begin(), g.right_tokens.end());
    g.right_tokens.erase(
        std::unique(g.right_tokens.begin(), g.right_tokens.end()),
        g.right_tokens.end());

    auto local = [](const std::vector<std::uint32_t>& ids, std::uint32_t v) {
      return static_cast<std::uint32_t>(
          std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    g.edges.reserve(te.size());
    for (const Edge& e : te) {
      g.edges.emplace_back(local(g.left_tokens, e.first),
                           local(g.right_tokens, e.second));
    }
    std::sort(g.edges.begin(), g.edges.end());
    out.emplace_back(
        std::make_pair(static_cast<TypeId>(key >> 32),
                       static_cast<TypeId>(key & 0xFFFFFFFFu)),
        std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

CoocTable count_from_edges(const TokenizedHalf& half1,
                           const TokenizedHalf& half2,
                           std::span<const Edge> residual,
                           std::span<const Edge> consumed,
                           CountingAssumption assumption) {
  std::unordered_map<std::uint64_t, std::uint64_t> counts;

  for (auto& [pair, graph] : group_by_type(half1, half2, residual)) {
    std::uint64_t n = 0;
    switch (assumption) {
      case CountingAssumption::naive:
        n = graph.edges.size();
        break;
      case CountingAssumption::at_most_one:
        n = max_matching(graph);
        break;
      case CountingAssumption::at_least_one:
        n = min_edge_cover(graph);
        break;
    }
    if (n > 0) counts[pair_key(pair.first, pair.second)] += n;
  }

  for (const Edge& link : consumed) {
    const TypeId u = half1.token(link.first).type;
    const TypeId v = half2.token(link.second).type;
    counts[pair_key(u, v)] += 1;
  }

  std::vector<CoocEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [key, n] : counts) {
    entries.push_back(CoocEntry{half1.type_name(static_cast<TypeId>(key >> 32)),
                                half2.type_name(static_cast<TypeId>(key)),
                                n});
  }
  return CoocTable(std::move(entries));
}

CoocTable count_all_graph(const CoocModel& model, const TokenizedHalf& half1,
                          const TokenizedHalf& half2,
                          CountingAssumption assumption,
                          const FilterSet& filters) {
  std::vector<Edge> edges = candidate_edges(model, half1, half2);
  if (filters.empty()) {
    return count_from_edges(half1, half2, edges, {}, assumption);
  }
  const FilterOutcome outcome =
      apply_filter_set(std::move(edges), half1, half2, filters);
  return count_from_edges(half1, half2, outcome.residual, outcome.consumed,
                          assumption);
}

CoocTable count_blocks(const SegmentAlignment& alignment,
                       const TokenizedHalf& half1, const TokenizedHalf& half2,
                       CountingAssumption assumption) {
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  std::unordered_map<TypeId, std::uint64_t> freq1, freq2;

  for (std::size_t b = 0; b < alignment.block_count(); ++b) {
    const AlignBlock& block = alignment.block(b);
    freq1.clear();
    freq2.clear();
    for (std::uint32_t seg : block.side1) {
      const auto [first, last] = half1.segment_tokens(seg);
      for (std::uint32_t i = first; i < last; ++i) {
        ++freq1[half1.token(i).type];
      }
    }
    for (std::uint32_t seg : block.side2) {
      const auto [first, last] = half2.segment_tokens(seg);
      for (std::uint32_t j = first; j < last; ++j) {
        ++freq2[half2.token(j).type];
      }
    }
    for (const auto& [u, e] : freq1) {
      for (const auto& [v, f] : freq2) {
        counts[pair_key(u, v)] += count_segment_pair({e, f}, assumption);
      }
    }
  }

  std::vector<CoocEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [key, n] : counts) {
    if (n > 0) {
      entries.push_back(
          CoocEntry{half1.type_name(static_cast<TypeId>(key >> 32)),
                    half2.type_name(static_cast<TypeId>(key)), n});
    }
  }
  return CoocTable(std::move(entries));
}

CoocTable count_all(const CoocModel& model, const TokenizedHalf& half1,
                    const TokenizedHalf& half2, CountingAssumption assumption,
                    const FilterSet& filters) {
  if (filters.empty()) {
    if (const auto* boundary = std::get_if<BoundaryModel>(&model)) {
      return count_blocks(boundary->alignment, half1, half2, assumption);
    }
  }
  return count_all_graph(model, half1, half2, assumption, filters);
}

}  // namespace cooc
