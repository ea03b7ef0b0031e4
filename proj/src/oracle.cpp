#include "cooc/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "cooc/errors.hpp"
#include "cooc/filters.hpp"

namespace cooc::oracle {

namespace {

void check_graph_size(const CoocGraph& g) {
  if (g.left_tokens.size() + g.right_tokens.size() > kMaxBruteVertices) {
    throw CoocError(Errc::too_large,
                    "graph has " +
                        std::to_string(g.left_tokens.size() + g.right_tokens.size()) +
                        " vertices; brute-force cap is " +
                        std::to_string(kMaxBruteVertices));
  }
}

struct MatchSearch {
  const std::vector<Edge>& edges;
  std::vector<char> used_l, used_r;
  std::size_t free_l, free_r;
  std::size_t best = 0;

  void run(std::size_t idx, std::size_t current) {
    best = std::max(best, current);
    if (idx >= edges.size()) return;
    const std::size_t remaining = edges.size() - idx;
    if (current + std::min({remaining, free_l, free_r}) <= best) return;

    const auto [l, r] = edges[idx];
    if (!used_l[l] && !used_r[r]) {
      used_l[l] = used_r[r] = 1;
      --free_l;
      --free_r;
      run(idx + 1, current + 1);
      ++free_l;
      ++free_r;
      used_l[l] = used_r[r] = 0;
    }
    run(idx + 1, current);
  }
};

struct EdgeCoverSearch {
  std::size_t n_left, n_right;
  std::vector<std::vector<std::size_t>> incident;  // vertex -> edge indices
  const std::vector<Edge>& edges;
  std::vector<char> covered;  // left then right, size n_left+n_right
  std::size_t uncovered;
  std::size_t best;

  std::size_t vertex_of(const Edge& e, bool left) const {
    return left ? e.first : n_left + e.second;
  }

  void choose(const Edge& e, std::vector<std::size_t>& newly) {
    for (bool left : {true, false}) {
      const std::size_t v = vertex_of(e, left);
      if (!covered[v]) {
        covered[v] = 1;
        --uncovered;
        newly.push_back(v);
      }
    }
  }

  void run(std::size_t chosen) {
    if (chosen + (uncovered + 1) / 2 >= best) return;  // each edge covers <= 2
    if (uncovered == 0) {
      best = chosen;
      return;
    }
    std::size_t pivot = 0;
    while (covered[pivot]) ++pivot;
    // Every cover must contain an edge incident to the pivot.
    for (std::size_t ei : incident[pivot]) {
      std::vector<std::size_t> newly;
      choose(edges[ei], newly);
      run(chosen + 1);
      for (std::size_t v : newly) {
        covered[v] = 0;
        ++uncovered;
      }
    }
  }
};

struct VertexCoverSearch {
  const std::vector<Edge>& edges;
  std::size_t n_left;
  std::vector<char> chosen;  // left then right
  std::size_t best;

  void run(std::size_t count) {
    if (count >= best) return;
    const Edge* open = nullptr;
    for (const Edge& e : edges) {
      if (!chosen[e.first] && !chosen[n_left + e.second]) {
        open = &e;
        break;
      }
    }
    if (!open) {
      best = count;
      return;
    }
    for (std::size_t v : {static_cast<std::size_t>(open->first),
                          n_left + open->second}) {
      chosen[v] = 1;
      run(count + 1);
      chosen[v] = 0;
    }
  }
};

}  // namespace

std::size_t brute_matching(const CoocGraph& graph) {
  check_graph_size(graph);
  std::size_t free_l = graph.left_tokens.size();
  std::size_t free_r = graph.right_tokens.size();
  MatchSearch search{graph.edges,
                     std::vector<char>(graph.left_tokens.size(), 0),
                     std::vector<char>(graph.right_tokens.size(), 0),
                     free_l,
                     free_r};
  search.run(0, 0);
  return search.best;
}

std::size_t brute_edge_cover(const CoocGraph& graph) {
  check_graph_size(graph);
  const std::size_t n_left = graph.left_tokens.size();
  const std::size_t n_right = graph.right_tokens.size();
  const std::size_t n = n_left + n_right;

  EdgeCoverSearch search{n_left,
                         n_right,
                         std::vector<std::vector<std::size_t>>(n),
                         graph.edges,
                         std::vector<char>(n, 0),
                         n,
                         n + 1};
  for (std::size_t ei = 0; ei < graph.edges.size(); ++ei) {
    search.incident[graph.edges[ei].first].push_back(ei);
    search.incident[n_left + graph.edges[ei].second].push_back(ei);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (search.incident[v].empty()) {
      throw CoocError(Errc::isolated_vertex,
                      "vertex " + std::to_string(v) +
                          " has no incident edge; no edge cover exists");
    }
  }
  if (n == 0) return 0;
  search.run(0);
  return search.best;
}

std::size_t brute_vertex_cover(const CoocGraph& graph) {
  check_graph_size(graph);
  VertexCoverSearch search{
      graph.edges, graph.left_tokens.size(),
      std::vector<char>(graph.left_tokens.size() + graph.right_tokens.size(), 0),
      graph.left_tokens.size() + graph.right_tokens.size() + 1};
  if (graph.edges.empty()) return 0;
  search.run(0);
  return search.best;
}

std::vector<Edge> brute_candidate_edges(const CoocModel& model,
                                        const TokenizedHalf& half1,
                                        const TokenizedHalf& half2) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < half1.size(); ++i) {
    for (std::size_t j = 0; j < half2.size(); ++j) {
      if (co_occurs(model, half1.token(i), half2.token(j))) {
        out.emplace_back(static_cast<std::uint32_t>(i),
                         static_cast<std::uint32_t>(j));
      }
    }
  }
  return out;
}

CoocTable brute_count_all(const CoocModel& model, const TokenizedHalf& half1,
                          const TokenizedHalf& half2,
                          CountingAssumption assumption,
                          const FilterSet& filters) {
  if (half1.size() > kMaxBruteTokens || half2.size() > kMaxBruteTokens) {
    throw CoocError(Errc::too_large,
                    "bitext exceeds the brute-force cap of " +
                        std::to_string(kMaxBruteTokens) + " tokens per half");
  }

  std::vector<Edge> edges = brute_candidate_edges(model, half1, half2);
  std::vector<Edge> consumed;
  if (!filters.empty()) {
    FilterOutcome outcome =
        apply_filter_set(std::move(edges), half1, half2, filters);
    consumed = std::move(outcome.consumed);
    edges = std::move(outcome.residual);
  }

  // Independent grouping pass (the production path has its own).
  std::unordered_map<std::uint64_t, std::vector<Edge>> groups;
  for (const Edge& e : edges) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(half1.token(e.first).type) << 32) |
        half2.token(e.second).type;
    groups[key].push_back(e);
  }

  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  for (const auto& [key, token_edges] : groups) {
    std::vector<std::uint32_t> left, right;
    for (const Edge& e : token_edges) {
      left.push_back(e.first);
      right.push_back(e.second);
    }
    std::sort(left.begin(), left.end());
    left.erase(std::unique(left.begin(), left.end()), left.end());
    std::sort(right.begin(), right.end());
    right.erase(std::unique(right.begin(), right.end()), right.end());

    CoocGraph g;
    g.left_tokens = left;
    g.right_tokens = right;
    for (const Edge& e : token_edges) {
      const auto lpos = static_cast<std::uint32_t>(
          std::lower_bound(left.begin(), left.end(), e.first) - left.begin());
      const auto rpos = static_cast<std::uint32_t>(
          std::lower_bound(right.begin(), right.end(), e.second) -
          right.begin());
      g.edges.emplace_back(lpos, rpos);
    }

    std::uint64_t n = 0;
    switch (assumption) {
      case CountingAssumption::naive:
        n = g.edges.size();
        break;
      case CountingAssumption::at_most_one:
        n = brute_matching(g);
        break;
      case CountingAssumption::at_least_one:
        n = brute_edge_cover(g);
        break;
    }
    if (n > 0) counts[key] += n;
  }

  for (const Edge& link : consumed) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(half1.token(link.first).type) << 32) |
        half2.token(link.second).type;
    counts[key] += 1;
  }

  std::vector<CoocEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [key, n] : counts) {
    entries.push_back(
        CoocEntry{half1.type_name(static_cast<TypeId>(key >> 32)),
                  half2.type_name(static_cast<TypeId>(key)), n});
  }
  return CoocTable(std::move(entries));
}

}  // namespace cooc::oracle
