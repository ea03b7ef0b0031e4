#include "cooc/model.hpp"

#include <algorithm>
#include <cmath>

#include "cooc/errors.hpp"

namespace cooc {

namespace {

double token_coordinate(const Token& t, AxisUnits units) {
  return units == AxisUnits::characters
             ? (static_cast<double>(t.begin) + static_cast<double>(t.end)) / 2.0
             : static_cast<double>(t.index) + 0.5;
}

bool distance_accepts(const DistanceModel& m, const Token& s, const Token& t) {
  const AxisUnits units = m.map.space().units;
  return m.map.distance({token_coordinate(s, units), token_coordinate(t, units)}) <
         m.delta;
}

bool boundary_accepts(const BoundaryModel& m, const Token& s, const Token& t) {
  const std::int32_t b = m.alignment.block_of_side1(s.segment);
  return b >= 0 && b == m.alignment.block_of_side2(t.segment);
}

void sweep_distance(const DistanceModel& m, const TokenizedHalf& half1,
                    const TokenizedHalf& half2, std::vector<Edge>& out) {
  const AxisUnits units = m.map.space().units;
  const std::size_t n2 = half2.size();
  if (half1.empty() || n2 == 0 || m.delta <= 0.0) return;

  std::vector<double> coords2(n2);
  for (std::size_t j = 0; j < n2; ++j) coords2[j] = half2.coordinate(j, units);

  for (std::size_t i = 0; i < half1.size(); ++i) {
    const Token& s = half1.token(i);
    const double x = token_coordinate(s, units);
    // Any polyline point within delta of (x,y) has x' in [x-delta,x+delta];
    // monotonicity bounds its y', and the token coordinate is within delta
    // of that.
    const double y_lo = m.map.min_y_at_or_after(x - m.delta) - m.delta;
    const double y_hi = m.map.max_y_at_or_before(x + m.delta) + m.delta;

    const auto first = std::lower_bound(coords2.begin(), coords2.end(), y_lo);
    for (auto it = first; it != coords2.end() && *it <= y_hi; ++it) {
      const std::size_t j = static_cast<std::size_t>(it - coords2.begin());
      if (m.map.distance({x, *it}) < m.delta) {
        out.emplace_back(s.index, half2.token(j).index);
      }
    }
  }
}

void sweep_boundary(const BoundaryModel& m, const TokenizedHalf& half1,
                    const TokenizedHalf& half2, std::vector<Edge>& out) {
  for (std::size_t b = 0; b < m.alignment.block_count(); ++b) {
    const AlignBlock& block = m.alignment.block(b);
    for (std::uint32_t seg1 : block.side1) {
      const auto [f1, l1] = half1.segment_tokens(seg1);
      for (std::uint32_t i = f1; i < l1; ++i) {
        for (std::uint32_t seg2 : block.side2) {
          const auto [f2, l2] = half2.segment_tokens(seg2);
          for (std::uint32_t j = f2; j < l2; ++j) out.emplace_back(i, j);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
}

void sweep_combined(const CombinedModel& m, const TokenizedHalf& half1,
                    const TokenizedHalf& half2, std::vector<Edge>& out) {
  std::vector<Edge> dist_edges;
  sweep_distance(m.distance, half1, half2, dist_edges);
  out.reserve(dist_edges.size());
  for (const Edge& e : dist_edges) {
    if (boundary_accepts(m.boundary, half1.token(e.first), half2.token(e.second))) {
      out.push_back(e);
    }
  }
}

}  // namespace

DistanceModel make_distance_model(BitextMap map, double delta) {
  if (!std::isfinite(delta) || delta < 0.0) {
    throw CoocError(Errc::bad_config, "delta must be finite and nonnegative");
  }
  return DistanceModel{std::move(map), delta};
}

bool co_occurs(const CoocModel& model, const Token& s, const Token& t) {
  return std::visit(
      [&](const auto& m) -> bool {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, DistanceModel>) {
          return distance_accepts(m, s, t);
        } else if constexpr (std::is_same_v<M, BoundaryModel>) {
          return boundary_accepts(m, s, t);
        } else {
          return distance_accepts(m.distance, s, t) &&
                 boundary_accepts(m.boundary, s, t);
        }
      },
      model);
}

std::vector<Edge> candidate_edges(const CoocModel& model,
                                  const TokenizedHalf& half1,
                                  const TokenizedHalf& half2) {
  std::vector<Edge> out;
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, DistanceModel>) {
          sweep_distance(m, half1, half2, out);
        } else if constexpr (std::is_same_v<M, BoundaryModel>) {
          sweep_boundary(m, half1, half2, out);
        } else {
          sweep_combined(m, half1, half2, out);
        }
      },
      model);
  return out;
}

}  // namespace cooc
