#include "cooc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cooc/errors.hpp"

namespace cooc {

double point_segment_distance(Point p, AnchorPoint a, AnchorPoint b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const double cx = a.x + t * dx;
  const double cy = a.y + t * dy;
  return std::hypot(p.x - cx, p.y - cy);
}

BitextMap BitextMap::load(std::vector<AnchorPoint> anchors, BitextSpace space) {
  if (!(space.width > 0.0) || !(space.height > 0.0)) {
    throw CoocError(Errc::bad_config, "bitext space must have positive width and height");
  }
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const auto& a = anchors[i];
    if (!std::isfinite(a.x) || !std::isfinite(a.y)) {
      throw CoocError(Errc::bad_input, "anchor coordinate is not finite", i);
    }
    if (a.x < 0.0 || a.x > space.width || a.y < 0.0 || a.y > space.height) {
      throw CoocError(Errc::out_of_bounds,
                      "anchor (" + std::to_string(a.x) + "," + std::to_string(a.y) +
                          ") outside space " + std::to_string(space.width) + "x" +
                          std::to_string(space.height),
                      i);
    }
  }

  // Stable sort by x keeps input order within ties, so a tie that is
  // decreasing in y is reported against the later input record.
  std::vector<std::size_t> order(anchors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return anchors[i].x < anchors[j].x; });

  std::vector<AnchorPoint> sorted;
  sorted.reserve(anchors.size() + 2);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const AnchorPoint& a = anchors[order[k]];
    if (k > 0 && a.y < anchors[order[k - 1]].y) {
      throw CoocError(Errc::non_monotonic_map,
                      "anchor (" + std::to_string(a.x) + "," + std::to_string(a.y) +
                          ") decreases in y after sorting by x",
                      order[k]);
    }
    sorted.push_back(a);
  }

  if (sorted.empty() || !(sorted.front() == AnchorPoint{0.0, 0.0})) {
    sorted.insert(sorted.begin(), AnchorPoint{0.0, 0.0});
  }
  const AnchorPoint far{space.width, space.height};
  if (!(sorted.back() == far)) sorted.push_back(far);

  std::vector<AnchorPoint> collapsed;
  collapsed.reserve(sorted.size());
  for (const AnchorPoint& a : sorted) {
    if (collapsed.empty() || !(collapsed.back() == a)) collapsed.push_back(a);
  }
  return BitextMap(std::move(collapsed), space);
}

double BitextMap::distance(Point p) const {
  if (p.x < 0.0 || p.x > space_.width || p.y < 0.0 || p.y > space_.height) {
    throw CoocError(Errc::out_of_bounds,
                    "point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                        ") outside space");
  }

  // Start at the segment under p.x and widen outward; monotonicity makes
  // the per-segment lower bounds below valid stopping rules.
  const auto& a = anchors_;
  const std::size_t nseg = a.size() - 1;
  auto it = std::lower_bound(a.begin(), a.end(), p.x,
                             [](const AnchorPoint& q, double x) { return q.x < x; });
  std::size_t start = static_cast<std::size_t>(it - a.begin());
  if (start > 0) --start;
  if (start >= nseg) start = nseg - 1;

  double best = point_segment_distance(p, a[start], a[start + 1]);

  for (std::size_t j = start; j-- > 0;) {
    const double lb = std::max({p.x - a[j + 1].x, p.y - a[j + 1].y, 0.0});
    if (lb >= best) break;
    best = std::min(best, point_segment_distance(p, a[j], a[j + 1]));
  }
  for (std::size_t j = start + 1; j < nseg; ++j) {
    const double lb = std::max({a[j].x - p.x, a[j].y - p.y, 0.0});
    if (lb >= best) break;
    best = std::min(best, point_segment_distance(p, a[j], a[j + 1]));
  }
  return best;
}

double BitextMap::min_y_at_or_after(double x) const {
  const auto& a = anchors_;
  auto it = std::lower_bound(a.begin(), a.end(), x,
                             [](const AnchorPoint& q, double v) { return q.x < v; });
  if (it == a.begin()) return a.front().y;
  if (it == a.end()) return a.back().y;
  // Predecessor has x0 < x <= x1: the polyline first reaches x inside this
  // segment, at the interpolated y.
  const AnchorPoint& p0 = *(it - 1);
  const AnchorPoint& p1 = *it;
  const double t = (x - p0.x) / (p1.x - p0.x);
  return p0.y + t * (p1.y - p0.y);
}

double BitextMap::max_y_at_or_before(double x) const {
  const auto& a = anchors_;
  auto it = std::upper_bound(a.begin(), a.end(), x,
                             [](double v, const AnchorPoint& q) { return v < q.x; });
  if (it == a.begin()) return a.front().y;
  if (it == a.end()) return a.back().y;
  const AnchorPoint& p0 = *(it - 1);
  const AnchorPoint& p1 = *it;
  const double t = (x - p0.x) / (p1.x - p0.x);
  return p0.y + t * (p1.y - p0.y);
}

}  // namespace cooc
