#include "cooc/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace cooc {

namespace {

constexpr std::int32_t kFree = -1;

std::vector<std::vector<std::uint32_t>> adjacency(std::size_t n_left,
                                                  std::span<const Edge> edges,
                                                  bool sorted) {
  std::vector<std::vector<std::uint32_t>> adj(n_left);
  for (const Edge& e : edges) adj[e.first].push_back(e.second);
  if (sorted) {
    for (auto& a : adj) std::sort(a.begin(), a.end());
  }
  return adj;
}

}  // namespace

Matching hopcroft_karp(std::size_t n_left, std::size_t n_right,
                       std::span<const Edge> edges) {
  const auto adj = adjacency(n_left, edges, /*sorted=*/false);

  Matching m;
  m.pair_left.assign(n_left, kFree);
  m.pair_right.assign(n_right, kFree);

  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(n_left);
  std::vector<std::uint32_t> queue;
  queue.reserve(n_left);

  // Layered BFS from free left vertices; true when some free right vertex
  // is reachable.
  auto bfs = [&]() -> bool {
    queue.clear();
    for (std::size_t u = 0; u < n_left; ++u) {
      if (m.pair_left[u] == kFree) {
        dist[u] = 0;
        queue.push_back(static_cast<std::uint32_t>(u));
      } else {
        dist[u] = kInf;
      }
    }
    std::uint32_t found = kInf;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::uint32_t u = queue[qi];
      if (dist[u] >= found) continue;
      for (std::uint32_t v : adj[u]) {
        const std::int32_t w = m.pair_right[v];
        if (w == kFree) {
          found = dist[u] + 1;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(static_cast<std::uint32_t>(w));
        }
      }
    }
    return found != kInf;
  };

  // DFS along the level graph.
  auto dfs = [&](auto&& self, std::uint32_t u) -> bool {
    for (std::uint32_t v : adj[u]) {
      const std::int32_t w = m.pair_right[v];
      if (w == kFree || (dist[w] == dist[u] + 1 && self(self, w))) {
        m.pair_left[u] = static_cast<std::int32_t>(v);
        m.pair_right[v] = static_cast<std::int32_t>(u);
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (std::size_t u = 0; u < n_left; ++u) {
      if (m.pair_left[u] == kFree && dfs(dfs, static_cast<std::uint32_t>(u))) {
        ++m.size;
      }
    }
  }
  return m;
}

Matching ordered_matching(std::size_t n_left, std::size_t n_right,
                          std::span<const Edge> edges) {
  const auto adj = adjacency(n_left, edges, /*sorted=*/true);

  Matching m;
  m.pair_left.assign(n_left, kFree);
  m.pair_right.assign(n_right, kFree);

  std::vector<std::uint32_t> stamp(n_left, 0);
  std::uint32_t round = 0;

  auto augment = [&](auto&& self, std::uint32_t u) -> bool {
    stamp[u] = round;
    for (std::uint32_t v : adj[u]) {
      if (m.pair_right[v] == kFree) {
        m.pair_left[u] = static_cast<std::int32_t>(v);
        m.pair_right[v] = static_cast<std::int32_t>(u);
        return true;
      }
    }
    for (std::uint32_t v : adj[u]) {
      const std::uint32_t w = static_cast<std::uint32_t>(m.pair_right[v]);
      if (stamp[w] != round && self(self, w)) {
        m.pair_left[u] = static_cast<std::int32_t>(v);
        m.pair_right[v] = static_cast<std::int32_t>(u);
        return true;
      }
    }
    return false;
  };

  for (std::size_t u = 0; u < n_left; ++u) {
    ++round;
    if (augment(augment, static_cast<std::uint32_t>(u))) ++m.size;
  }
  return m;
}

}  // namespace cooc
