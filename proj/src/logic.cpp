#include "tribasis/logic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace tribasis {

namespace {

PointOp op_of(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::And: return PointOp::Min;
    case Formula::Kind::Or: return PointOp::Max;
    case Formula::Kind::StrongAnd: return PointOp::BoundedProd;
    case Formula::Kind::StrongOr: return PointOp::BoundedSum;
    case Formula::Kind::Minus: return PointOp::BoundedDiff;
    case Formula::Kind::Implies: return PointOp::Implication;
    case Formula::Kind::Iff: return PointOp::Biconditional;
    default: throw std::logic_error("op_of on a non-binary kind");
  }
}

} // namespace

Rat eval_at(const Formula& phi, std::span<const Rat> point) {
  switch (phi.kind()) {
    case Formula::Kind::Var: {
      const int k = phi.var_index();
      if (k > static_cast<int>(point.size()))
        throw std::invalid_argument("formula mentions X" + std::to_string(k) + " but the point has " +
                                    std::to_string(point.size()) + " coordinates");
      const Rat& v = point[static_cast<size_t>(k) - 1];
      if (v < 0 || v > 1) throw std::domain_error("coordinate outside [0,1]: " + rat_str(v));
      return v;
    }
    case Formula::Kind::Bot: return Rat(0);
    case Formula::Kind::Top: return Rat(1);
    case Formula::Kind::Not: return Rat(1 - eval_at(phi.child(), point));
    default: return apply_op(op_of(phi.kind()), eval_at(phi.lhs(), point), eval_at(phi.rhs(), point));
  }
}

PLFunc compose(const Formula& phi, const FuzzyFamily& P) {
  switch (phi.kind()) {
    case Formula::Kind::Var: {
      const int k = phi.var_index();
      if (k > P.size())
        throw std::invalid_argument("formula mentions X" + std::to_string(k) + " but the family has " +
                                    std::to_string(P.size()) + " members");
      return P.member(k);
    }
    case Formula::Kind::Bot: return PLFunc::constant(Rat(0));
    case Formula::Kind::Top: return PLFunc::constant(Rat(1));
    case Formula::Kind::Not: return compose(phi.child(), P).negate();
    default: return combine(compose(phi.lhs(), P), compose(phi.rhs(), P), op_of(phi.kind()));
  }
}

MembershipVerdict theta_member(const Formula& phi, const FuzzyFamily& P) {
  auto low = compose(phi, P).global_min();
  if (low.value == 1) return {};
  return {false, low.at, low.value};
}

std::vector<Formula> axioms(int n) {
  if (n < 1) throw std::invalid_argument("axioms need arity at least 1");
  std::vector<Formula> A;
  Formula rho = Formula::var(1);
  for (int i = 2; i <= n; ++i) rho = Formula::strong_disj(std::move(rho), Formula::var(i));
  A.push_back(std::move(rho));
  for (int i = 1; i + 1 <= n; ++i)
    A.push_back(Formula::negation(Formula::strong_conj(Formula::var(i), Formula::var(i + 1))));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      A.push_back(Formula::negation(Formula::conj(Formula::var(i), Formula::var(j))));
  return A;
}

Formula phi_k(int m, long k) {
  if (k < 1) throw std::invalid_argument("phi_k needs k >= 1");
  Formula f = Formula::negation(Formula::var(m));
  for (long r = 1; r < k; ++r)
    f = Formula::strong_disj(std::move(f), Formula::negation(Formula::var(m)));
  return f;
}

bool on_path(std::span<const Rat> point) {
  Rat sum = 0;
  std::vector<int> pos;
  for (size_t i = 0; i < point.size(); ++i) {
    if (point[i] < 0 || point[i] > 1) return false;
    sum += point[i];
    if (point[i] > 0) pos.push_back(static_cast<int>(i) + 1);
  }
  if (sum != 1) return false;
  if (pos.size() == 1) return true; // a vertex
  if (pos.size() == 2) return pos[1] == pos[0] + 1;
  return false;
}

namespace {

long grid_size(int n, long d) {
  if (n < 1 || d < 1) throw std::invalid_argument("grid needs n >= 1 and d >= 1");
  const long cap = 200000000;
  long total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / (d + 1)) throw std::invalid_argument("grid too large");
    total *= d + 1;
  }
  return total;
}

std::vector<Rat> grid_point(long idx, int n, long d) {
  std::vector<Rat> p(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    p[static_cast<size_t>(i)] = Rat(idx % (d + 1), d);
    idx /= d + 1;
  }
  return p;
}

bool grid_mismatch(const std::vector<Formula>& A, const std::vector<Rat>& p) {
  bool all_one = true;
  for (const auto& phi : A)
    if (eval_at(phi, p) != 1) {
      all_one = false;
      break;
    }
  return all_one != on_path(p);
}

} // namespace

GridVerdict oneset_grid_check_serial(int n, long d) {
  const long total = grid_size(n, d);
  auto A = axioms(n);
  for (long idx = 0; idx < total; ++idx) {
    auto p = grid_point(idx, n, d);
    if (grid_mismatch(A, p)) return {false, std::move(p)};
  }
  return {};
}

GridVerdict oneset_grid_check_parallel(int n, long d) {
  const long total = grid_size(n, d);
  auto A = axioms(n);
  long best = total;
#if defined(_OPENMP)
#pragma omp parallel
  {
    long local_best = total;
#pragma omp for schedule(static) nowait
    for (long idx = 0; idx < total; ++idx) {
      if (idx >= local_best) continue;
      if (grid_mismatch(A, grid_point(idx, n, d))) local_best = idx;
    }
#pragma omp critical
    best = std::min(best, local_best);
  }
#else
  for (long idx = 0; idx < total; ++idx)
    if (grid_mismatch(A, grid_point(idx, n, d))) {
      best = idx;
      break;
    }
#endif
  if (best == total) return {};
  return {false, grid_point(best, n, d)};
}

GridVerdict oneset_grid_check(int n, long d) {
#if defined(_OPENMP)
  if (grid_size(n, d) >= 100000) return oneset_grid_check_parallel(n, d);
#endif
  return oneset_grid_check_serial(n, d);
}

ConsequenceVerdict a_consequence(const Formula& phi, int n) {
  if (n < 2) throw std::invalid_argument("consequence check needs arity at least 2");
  if (phi.max_var() > n)
    throw std::invalid_argument("formula mentions X" + std::to_string(phi.max_var()) +
                                " but the arity is " + std::to_string(n));
  FuzzyFamily B = canonical_basis(n);
  auto mv = theta_member(phi, B);
  if (mv.holds) return {};
  return {false, mv.x, mv.value, B.at(mv.x)};
}

TheoryCertificate theory_equal(const FuzzyFamily& P) {
  const int n = P.size();
  if (n < 2) throw std::invalid_argument("theory comparison needs at least two members");
  auto A = axioms(n);
  TheoryCertificate cert;

  for (size_t idx = 0; idx < A.size(); ++idx) {
    auto mv = theta_member(A[idx], P);
    if (mv.holds) continue;
    cert.verdict = TheoryCertificate::Verdict::AxiomViolated;
    cert.axiom = A[idx];
    cert.axiom_index = static_cast<int>(idx);
    cert.witness_x = mv.x;
    cert.axiom_value = mv.value;
    Rat direct = eval_at(A[idx], P.at(mv.x));
    cert.verified = direct == mv.value && direct < 1;
    return cert;
  }

  // Every axiom holds along the curve, so the range sits inside the axioms'
  // common 1-set: the union of the index-adjacent edges.
  auto pc = path_coverage(P);
  if (!pc.leftovers.empty())
    throw std::logic_error("axioms hold yet the curve leaves the path; this is a bug");
  for (const auto& ec : pc.edges)
    if (ec.j != ec.i + 1)
      throw std::logic_error("axioms hold yet a distant edge is covered; this is a bug");

  bool full = true;
  for (int i = 1; i < n && full; ++i) {
    bool found = false;
    for (const auto& ec : pc.edges)
      if (ec.i == i && ec.j == i + 1) {
        found = ec.full;
        break;
      }
    full = found;
  }
  if (full) {
    cert.verified = true;
    return cert;
  }

  // The range is a connected subset of the path; a gap forces it to miss an
  // endpoint vertex, i.e. the first or last member never attains 1.
  int m = 0;
  if (!is_normal(P.member(1)).holds)
    m = 1;
  else if (!is_normal(P.member(n)).holds)
    m = n;
  else
    throw std::logic_error("path gap although both end members attain 1; this is a bug");

  Rat c = P.member(m).global_max().value;
  Rat ratio = Rat(1) / Rat(1 - c);
  long k = rat_ceil(ratio).convert_to<long>();
  cert.verdict = TheoryCertificate::Verdict::PathGap;
  cert.endpoint = m;
  cert.coord_max = c;
  cert.k = k;
  Formula sep = phi_k(m, k);
  cert.separator = sep;

  std::vector<Rat> em(static_cast<size_t>(n), Rat(0));
  em[static_cast<size_t>(m) - 1] = 1;
  cert.verified = theta_member(sep, P).holds && eval_at(sep, em) == 0;
  return cert;
}

ClosureProbe deductive_closure_probe(const FuzzyFamily& P, const Formula& phi, const Formula& psi) {
  ClosureProbe pr;
  pr.premise = theta_member(phi, P);
  pr.implication = theta_member(Formula::implies(phi, psi), P);
  pr.conclusion = theta_member(psi, P);
  pr.consistent = !(pr.premise.holds && pr.implication.holds) || pr.conclusion.holds;
  return pr;
}

std::vector<int> detect_order(const FuzzyFamily& P) {
  const int n = P.size();
  std::vector<Rat> key;
  key.reserve(static_cast<size_t>(n));
  for (const auto& f : P.members()) key.push_back(f.global_max().at);
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(), [&](int u, int w) {
    return key[static_cast<size_t>(u) - 1] < key[static_cast<size_t>(w) - 1];
  });
  return idx;
}

FuzzyFamily relabel(const FuzzyFamily& P, const std::vector<int>& perm) {
  const int n = P.size();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size does not match the family");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int m : perm) {
    if (m < 1 || m > n || seen[static_cast<size_t>(m)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<size_t>(m)] = true;
  }
  std::vector<PLFunc> out;
  out.reserve(perm.size());
  for (int m : perm) out.push_back(P.member(m));
  return FuzzyFamily(std::move(out));
}

} // namespace tribasis
