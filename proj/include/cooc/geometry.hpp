#pragma once

#include <cstddef>
#include <vector>

namespace cooc {

enum class AxisUnits { characters, tokens };

// The rectangle [0,width] x [0,height] in which token-pair coordinates
// live. Axis 1 is the first text half, axis 2 the second. The unit is fixed
// at construction and shared by every coordinate measured against it.
struct BitextSpace {
  double width = 0;
  double height = 0;
  AxisUnits units = AxisUnits::characters;
};

struct AnchorPoint {
  double x = 0;
  double y = 0;
  friend bool operator==(const AnchorPoint&, const AnchorPoint&) = default;
};

struct Point {
  double x = 0;
  double y = 0;
};

// Minimum Euclidean distance from p to the segment [a,b].
double point_segment_distance(Point p, AnchorPoint a, AnchorPoint b);

// Monotonic polyline through anchor points, interpolating a bitext
// correspondence. Immutable after construction; safe to share across
// threads.
class BitextMap {
 public:
  // Validates, sorts by x (stable; ties must be nondecreasing in y),
  // collapses consecutive duplicates, and synthesizes the (0,0) and
  // (width,height) corner anchors when absent.
  //
  // Throws CoocError:
  //   bad_config        - nonpositive space dimensions
  //   bad_input         - non-finite anchor coordinate
  //   out_of_bounds     - anchor outside the space
  //   non_monotonic_map - y decreases along the sorted sequence
  // Record-attributable errors carry the offending anchor's input index.
  static BitextMap load(std::vector<AnchorPoint> anchors, BitextSpace space);

  const std::vector<AnchorPoint>& anchors() const noexcept { return anchors_; }
  const BitextSpace& space() const noexcept { return space_; }

  // Minimum Euclidean distance from p to the polyline. Exact per segment
  // (point-to-segment projection); segments that cannot beat the running
  // best are pruned via the map's monotonicity. Throws out_of_bounds when p
  // lies outside the space; no clamping.
  double distance(Point p) const;

  // Smallest polyline y over points with x' >= x (x below 0 sees the whole
  // polyline). Largest polyline y over points with x' <= x, symmetrically.
  // Both are the monotone envelope used by the candidate-edge band sweep.
  double min_y_at_or_after(double x) const;
  double max_y_at_or_before(double x) const;

 private:
  BitextMap(std::vector<AnchorPoint> anchors, BitextSpace space)
      : anchors_(std::move(anchors)), space_(space) {}

  std::vector<AnchorPoint> anchors_;
  BitextSpace space_;
};

}  // namespace cooc
