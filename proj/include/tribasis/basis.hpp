#pragma once

#include "tribasis/props.hpp"

#include <vector>

namespace tribasis {

// One linear segment of the evaluation curve x -> (f_1(x),...,f_n(x)),
// obtained by refining [0,1] with the union of all members' breakpoints.
struct CurveSegment {
  Rat a, b;                  // parameter interval, a < b
  std::vector<Rat> from, to; // curve points at a and b
};

std::vector<CurveSegment> refine(const FuzzyFamily& P);

// Injectivity of the evaluation curve.  Degenerate segments (zero direction)
// fail immediately; otherwise all segment pairs are intersected exactly.  The
// parallel variant scans pairs with OpenMP; both report the failure with the
// smallest pair index, so their witnesses agree.
struct InjectivityVerdict {
  bool holds = true;
  Rat x, y; // x != y with identical curve points
};

InjectivityVerdict injectivity_check(const FuzzyFamily& P);
InjectivityVerdict injectivity_check_serial(const FuzzyFamily& P);
InjectivityVerdict injectivity_check_parallel(const FuzzyFamily& P);

struct Interval {
  Rat lo, hi; // lo <= hi; degenerate allowed
  bool operator==(const Interval&) const = default;
};

// Coverage of the edge conv{e_i, e_j} of the standard simplex by curve
// segments, parametrised by the j-th coordinate (0 at e_i, 1 at e_j).
struct EdgeCoverage {
  int i = 0, j = 0; // i < j, 1-based
  std::vector<Interval> covered; // disjoint, sorted, merged
  bool full = false;             // covered == {[0,1]}
};

struct PathCoverage {
  // Segments that do not lie inside a single edge of the simplex
  // (off-simplex, or supported on three or more vertices).
  std::vector<size_t> leftovers; // indices into refine(P)
  std::vector<int> vertex_hits;  // vertices e_m hit by degenerate segments, sorted
  std::vector<EdgeCoverage> edges; // edges with nonempty coverage, ordered by (i,j)

  bool hamiltonian = false; // the covered edges form a spanning path, each fully covered
  std::vector<int> perm;    // visiting order of the members along the path, when hamiltonian
};

PathCoverage path_coverage(const FuzzyFamily& P);

// Direct check of the defining clauses: strongly normal members with distinct
// peak locations t_1 < ... < t_n anchored at 0 and 1, and on each [t_i,t_i+1]
// the two incident members complementary, one strictly falling and one
// strictly rising, all others identically zero.
enum class DefFailure {
  None,
  TooFewMembers,
  NotStronglyNormal,
  PeaksNotDistinct,
  PeaksNotAnchored,
  NotZeroAtNextPeak,  // f_{pi(i)}(t_{i+1}) != 0
  NotZeroOffInterval, // an uninvolved member is positive inside an interval
  NotComplementary,   // the incident pair does not sum to 1 on the interval
  NotStrictlyMonotone
};

struct DefVerdict {
  bool holds = false;
  DefFailure failure = DefFailure::None;
  int member = 0;   // offending member, when applicable
  int interval = 0; // offending interval i (between t_i and t_{i+1}), when applicable
  Rat where;        // offending point, when applicable
  Rat value;        // offending value, when applicable
  std::vector<Rat> nodes; // t_1..t_n once peaks were found
  std::vector<int> perm;  // position -> member, once peaks were found
  bool linear = false;    // no interior breakpoints in any incident restriction
};

DefVerdict check_definition(const FuzzyFamily& P);

const char* def_failure_str(DefFailure f);

// Classification through three independent routes: the defining clauses, the
// property bundle, and the curve geometry.  Throws std::logic_error if the
// routes ever disagree.
struct Classification {
  DefVerdict def;
  PropertyReport report;
  InjectivityVerdict injectivity;
  PathCoverage path;
  bool pseudo_triangular = false;
  bool triangular = false; // pseudo-triangular with all restrictions affine
};

Classification classify(const FuzzyFamily& P);

// The triangular basis with equally spaced peaks (j-1)/(n-1); requires n >= 2.
FuzzyFamily canonical_basis(int n);

} // namespace tribasis
