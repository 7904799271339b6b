#pragma once

#include "tribasis/rational.hpp"

#include <span>
#include <vector>

namespace tribasis {

struct Breakpoint {
  Rat x, y;
  bool operator==(const Breakpoint&) const = default;
};

// Continuous piecewise-linear function [0,1] -> [0,1] with rational
// breakpoints, stored in canonical form: x strictly increasing, first x = 0,
// last x = 1, and no breakpoint collinear with its two neighbours.  Two
// functions are equal as functions iff their canonical breakpoint lists are
// identical, which is what operator== compares.
class PLFunc {
public:
  // Validates the list (ordering, anchoring, range) and prunes collinear
  // interior points.  Throws std::invalid_argument on a malformed list.
  static PLFunc from_points(std::vector<Breakpoint> pts);
  static PLFunc constant(const Rat& c);
  static PLFunc identity();

  const std::vector<Breakpoint>& points() const { return pts_; }

  // Exact evaluation; throws std::domain_error outside [0,1].
  Rat operator()(const Rat& x) const;

  PLFunc negate() const; // pointwise 1 - f

  struct Extremum {
    Rat value, at; // leftmost argument attaining the value
  };
  Extremum global_min() const;
  Extremum global_max() const;

  bool operator==(const PLFunc&) const = default;

private:
  explicit PLFunc(std::vector<Breakpoint> pts) : pts_(std::move(pts)) {}
  std::vector<Breakpoint> pts_;
};

// Pointwise connectives on [0,1], Lukasiewicz semantics.
enum class PointOp {
  Min,
  Max,
  BoundedSum,   // min{1, a+b}
  BoundedProd,  // max{0, a+b-1}
  BoundedDiff,  // max{0, a-b}
  Implication,  // min{1, 1-(a-b)}
  Biconditional // 1 - |a-b|
};

// Scalar reference semantics for the table above.
Rat apply_op(PointOp op, const Rat& a, const Rat& b);

// Exact pointwise combination.  Refines the two breakpoint lists to a common
// grid; on each cell the clamp is governed by the sign of a single affine
// functional (f-g, or f+g-1 for the sum/product pair), so at most one interior
// crossing is inserted per cell before canonicalisation.
PLFunc combine(const PLFunc& f, const PLFunc& g, PointOp op);

// Sorted union of the breakpoint abscissae of all functions in fs.
std::vector<Rat> breakpoint_union(std::span<const PLFunc> fs);

} // namespace tribasis
