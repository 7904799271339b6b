#pragma once

#include "tribasis/basis.hpp"
#include "tribasis/formula.hpp"

#include <optional>
#include <span>
#include <vector>

namespace tribasis {

// Exact truth value at a point of [0,1]^n.  Throws std::invalid_argument if
// the formula mentions a variable beyond the point's arity, std::domain_error
// if a referenced coordinate lies outside [0,1].
Rat eval_at(const Formula& phi, std::span<const Rat> point);

// The piecewise-linear function x -> phi(f_1(x), ..., f_n(x)).
PLFunc compose(const Formula& phi, const FuzzyFamily& P);

struct MembershipVerdict {
  bool holds = true;
  Rat x, value; // parameter where the composition dips below 1, and its value
};

// Whether phi evaluates to 1 under every assignment the family realises.
MembershipVerdict theta_member(const Formula& phi, const FuzzyFamily& P);

// The axiom list for arity n: the covering constraint first, then the
// adjacent-pair constraints by ascending i, then the distant-pair constraints
// in lexicographic order; 1 + (n-1) + (n-1)(n-2)/2 formulas in total.
std::vector<Formula> axioms(int n);

// k-fold strong disjunction of !X_m; its 1-set is {x_m <= (k-1)/k}.
Formula phi_k(int m, long k);

// Membership in the union of the simplex edges conv{e_i, e_{i+1}}.
bool on_path(std::span<const Rat> point);

struct GridVerdict {
  bool holds = true;
  std::vector<Rat> point; // grid point where the two sides disagree
};

// Compares "every axiom is 1 at p" against "p lies on the index path" over
// the grid {0, 1/d, ..., 1}^n.  The parallel variant splits the grid with
// OpenMP; both report the first mismatch in lexicographic order.
GridVerdict oneset_grid_check(int n, long d);
GridVerdict oneset_grid_check_serial(int n, long d);
GridVerdict oneset_grid_check_parallel(int n, long d);

struct ConsequenceVerdict {
  bool holds = true;
  Rat x, value;           // refuting parameter on the canonical basis
  std::vector<Rat> point; // the corresponding assignment; satisfies all axioms
};

// Semantic consequence from the axiom set.  The axioms' common 1-set is the
// range of the canonical basis of the same arity, so consequence reduces to
// membership in that basis' theory.
ConsequenceVerdict a_consequence(const Formula& phi, int n);

struct TheoryCertificate {
  enum class Verdict { Equal, AxiomViolated, PathGap };
  Verdict verdict = Verdict::Equal;

  // AxiomViolated: the theory misses this axiom, so it cannot contain the
  // axioms' consequences.
  std::optional<Formula> axiom;
  int axiom_index = -1; // position in axioms(n)
  Rat witness_x, axiom_value;

  // PathGap: the theory is a proper superset; the separator belongs to it
  // but vanishes at the missed endpoint vertex, hence is no consequence.
  int endpoint = 0; // m with e_m outside the curve's range
  Rat coord_max;    // c, the exact maximum of coordinate m over the range
  long k = 0;       // smallest k with (k-1)/k >= c
  std::optional<Formula> separator; // phi_k for X_m

  bool verified = false; // certificate re-checked by direct evaluation
  bool equal() const { return verdict == Verdict::Equal; }
};

// Decides whether the family's theory coincides with the consequences of the
// axiom set of the same arity; requires at least two members.
TheoryCertificate theory_equal(const FuzzyFamily& P);

struct ClosureProbe {
  MembershipVerdict premise, implication, conclusion;
  bool consistent = true; // premise, phi -> psi in the theory entail psi in it
};

ClosureProbe deductive_closure_probe(const FuzzyFamily& P, const Formula& phi, const Formula& psi);

// Stable member order by leftmost maximiser, as positions -> member indices.
std::vector<int> detect_order(const FuzzyFamily& P);
FuzzyFamily relabel(const FuzzyFamily& P, const std::vector<int>& perm);

} // namespace tribasis
