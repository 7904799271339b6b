#pragma once

#include "tribasis/plfunc.hpp"

#include <vector>

namespace tribasis {

// Finite indexed family f_1..f_n of piecewise-linear fuzzy sets on [0,1].
// Indices are 1-based everywhere a member is reported.
class FuzzyFamily {
public:
  explicit FuzzyFamily(std::vector<PLFunc> members);

  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<PLFunc>& members() const { return members_; }
  const PLFunc& member(int i) const { return members_.at(static_cast<size_t>(i) - 1); }

  // The point (f_1(x), ..., f_n(x)).
  std::vector<Rat> at(const Rat& x) const;

  bool operator==(const FuzzyFamily&) const = default;

private:
  std::vector<PLFunc> members_;
};

// Witness fields below are meaningful only when holds == false; every witness
// refutes the property by direct evaluation.

struct RuspiniVerdict {
  bool holds = true;
  Rat x, sum; // sum of all members at x differs from 1
};

struct OverlapVerdict {
  bool holds = true;
  int i = 0, j = 0, k = 0; // three distinct members simultaneously positive
  Rat x, value;            // min of the three at x
};

struct NormalVerdict {
  bool holds = true;
  Rat max_value; // the (attained) maximum, < 1 on failure
};

struct StrongNormalVerdict {
  bool holds = true;
  bool normal = false; // whether the value 1 is attained at all
  Rat peak;            // the unique point with value 1, when holds
  Rat plateau_lo, plateau_hi; // two distinct points with value 1, when normal but not strongly
};

struct ConvexityTriple {
  Rat x, z, y; // x < z < y forming a valley (or, for the strict check, a plateau)
};

struct MinConvexVerdict {
  bool holds = true;
  ConvexityTriple triple;
};

struct SupportConvexVerdict {
  bool holds = true;
  ConvexityTriple triple; // confined to the closure of one support component
};

struct SeparatingVerdict {
  bool holds = true;
  Rat x, y; // x != y mapped to the same point by the family
};

RuspiniVerdict is_ruspini(const FuzzyFamily& P);

// No three distinct members are positive at a common point.  The parallel
// variant scans the member triples with OpenMP; both return the
// lexicographically first offending triple.
OverlapVerdict is_2_overlapping(const FuzzyFamily& P);
OverlapVerdict is_2_overlapping_serial(const FuzzyFamily& P);
OverlapVerdict is_2_overlapping_parallel(const FuzzyFamily& P);

NormalVerdict is_normal(const PLFunc& f);
StrongNormalVerdict is_strongly_normal(const PLFunc& f);

// Quasiconcavity of a piecewise-linear function is a property of its
// breakpoint value sequence: it must not descend and later ascend.
MinConvexVerdict is_min_convex(const PLFunc& f);

// Strict unimodality on the closure of each maximal interval of the support.
SupportConvexVerdict is_strictly_min_convex_on_support(const PLFunc& f);

// Injectivity of x -> (f_1(x),...,f_n(x)); delegates to the curve geometry.
SeparatingVerdict is_separating(const FuzzyFamily& P);

struct PropertyReport {
  RuspiniVerdict ruspini;
  OverlapVerdict overlap;
  std::vector<NormalVerdict> normal;              // per member
  std::vector<StrongNormalVerdict> strong_normal; // per member
  std::vector<MinConvexVerdict> min_convex;
  std::vector<SupportConvexVerdict> support_convex;
  SeparatingVerdict separating;

  // Ruspini + 2-overlapping + every member strongly normal, min-convex and
  // strictly min-convex on its support.  Separation is not part of the
  // bundle; it is implied whenever the bundle holds.
  bool bundle_holds() const;
};

PropertyReport property_report(const FuzzyFamily& P);

} // namespace tribasis
