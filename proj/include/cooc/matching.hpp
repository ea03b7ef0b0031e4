#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cooc/model.hpp"

namespace cooc {

// A maximum matching over a bipartite vertex set {0..n_left-1} x
// {0..n_right-1}. pair_left[i] is the right vertex matched to left i, or
// -1; pair_right symmetrically.
struct Matching {
  std::size_t size = 0;
  std::vector<std::int32_t> pair_left;
  std::vector<std::int32_t> pair_right;
};

// Hopcroft-Karp, O(E * sqrt(V)). Duplicate edges are tolerated.
// Deterministic for a fixed edge order.
Matching hopcroft_karp(std::size_t n_left, std::size_t n_right,
                       std::span<const Edge> edges);

// Single augmenting-path matching (Kuhn), processing left vertices in
// ascending order with adjacency sorted ascending. Slower, but the
// resulting matching itself is pinned by that order: the lowest-index
// augmenting order used to pick exclusive-filter links deterministically.
Matching ordered_matching(std::size_t n_left, std::size_t n_right,
                          std::span<const Edge> edges);

}  // namespace cooc
